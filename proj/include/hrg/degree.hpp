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

#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace hrg {

/// An element of N^k (or Z^k when used as a grading value).
class Degree {
 public:
  Degree() = default;
  explicit Degree(int k) : c_(static_cast<std::size_t>(k), 0) {}
  Degree(std::initializer_list<int> values) : c_(values) {}
  explicit Degree(std::vector<int> values) : c_(std::move(values)) {}

  /// The generator epsilon_i, with i 1-based like colors.
  static Degree unit(int k, int color);
  static Degree ones(int k);

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return c_; }

  int total() const;
  bool is_zero() const;
  bool nonnegative() const;

  Degree& operator+=(const Degree& o);
  Degree& operator-=(const Degree& o);
  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
  friend bool operator==(const Degree&, const Degree&) = default;
  /// Lexicographic; used only for deterministic ordering.
  friend auto operator<=>(const Degree& a, const Degree& b) {
    return a.c_ <=> b.c_;
  }

  /// Componentwise partial order.
  bool le(const Degree& o) const;

  /// "(1,0,2)".
  std::string str() const;
  static Degree parse(const std::string& text);

 private:
  std::vector<int> c_;
};

/// All degrees n with 0 <= n <= bound, ordered by total then lexicographically.
std::vector<Degree> degrees_up_to(const Degree& bound);

}  // namespace hrg
