// Copyright 2026 The hrg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hrg/degree.hpp"

#include <algorithm>
#include <sstream>

#include "hrg/error.hpp"

namespace hrg {

Degree Degree::unit(int k, int color) {
  Degree d(k);
  d[color - 1] = 1;
  return d;
}

Degree Degree::ones(int k) {
  return Degree(std::vector<int>(static_cast<std::size_t>(k), 1));
}

int Degree::total() const {
  int t = 0;
  for (int v : c_) t += v;
  return t;
}

bool Degree::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool Degree::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
}

Degree& Degree::operator+=(const Degree& o) {
  if (o.c_.size() != c_.size()) fail(ErrorCode::kDegreeOutOfRange, "rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Degree& Degree::operator-=(const Degree& o) {
  if (o.c_.size() != c_.size()) fail(ErrorCode::kDegreeOutOfRange, "rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

bool Degree::le(const Degree& o) const {
  if (o.c_.size() != c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > o.c_[i]) return false;
  return true;
}

std::string Degree::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ',';
    out << c_[i];
  }
  out << ')';
  return out.str();
}

Degree Degree::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<int> values;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        fail(ErrorCode::kMalformedInput, "bad degree '" + text + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::kMalformedInput, "bad degree '" + text + "'");
    }
  }
  if (values.empty()) fail(ErrorCode::kMalformedInput, "empty degree");
  return Degree(std::move(values));
}

std::vector<Degree> degrees_up_to(const Degree& bound) {
  std::vector<Degree> out;
  Degree cur(bound.rank());
  while (true) {
    out.push_back(cur);
    int i = bound.rank() - 1;
    while (i >= 0 && cur[i] == bound[i]) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

}  // namespace hrg
