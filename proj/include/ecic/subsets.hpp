// Copyright 2026 The Authors.
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

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <numeric>
#include <vector>

namespace ecic {

// Lexicographic enumeration of k-subsets of {0, ..., n-1}. The k = 0 case
// yields exactly one (empty) subset.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), current_(k), done_(k > n) {
    std::iota(current_.begin(), current_.end(), std::size_t{0});
  }

  bool done() const noexcept { return done_; }
  const std::vector<std::size_t>& current() const noexcept { return current_; }

  void advance() {
    const std::size_t k = current_.size();
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (current_[i] < n_ - k + i) {
        ++current_[i];
        for (std::size_t j = i + 1; j < k; ++j) current_[j] = current_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> current_;
  bool done_;
};

// Calls visit(subset) for every k-subset in lexicographic order; stops early
// when visit returns false. Returns false iff stopped early.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  for (Combinations c(n, k); !c.done(); c.advance()) {
    if (!visit(c.current())) return false;
  }
  return true;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}


// Visits every vector in {0..radix-1}^length in lexicographic order (first
// coordinate most significant). Stops early when visit returns false.
template <typename Visitor>
bool for_each_assignment(std::size_t length, int radix, Visitor&& visit) {
  std::vector<int> digits(length, 0);
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(digits))) return false;
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < radix) break;
      digits[i] = 0;
      if (i == 0) return true;
    }
    if (length == 0) return true;
  }
}

}  // namespace ecic
