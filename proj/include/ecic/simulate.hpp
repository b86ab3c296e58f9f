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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ecic/index_coding.hpp"

namespace ecic {

struct SimulationReport {
  std::size_t trials = 0;
  std::vector<std::size_t> successes;  // per receiver

  double rate(std::size_t receiver) const {
    return trials == 0 ? 0.0
                       : static_cast<double>(successes.at(receiver)) /
                             static_cast<double>(trials);
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Error-injection run. Each trial draws x uniformly; each receiver then sees
// xL plus an error whose weight is uniform in [0, delta_i], with uniform
// support and uniform nonzero values, and decodes by brute force. Every trial
// has its own generator derived from (seed, trial), so results do not depend
// on the order in which trials are evaluated.
inline SimulationReport simulate(const Problem& p, const ErrorProfile& d,
                                 const IndexCode& c, std::size_t trials,
                                 std::uint64_t seed) {
  validate(p, d, c);
  const PrimeField& f = p.field;
  const std::size_t length = c.length();
  SimulationReport report;
  report.trials = trials;
  report.successes.assign(p.receivers(), 0);

  std::vector<std::size_t> positions(length);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(t)));
    std::uniform_int_distribution<int> symbol(0, f.modulus() - 1);
    std::uniform_int_distribution<int> nonzero(1, f.modulus() - 1);

    FieldVector x(f, p.messages);
    for (std::size_t j = 0; j < p.messages; ++j) x.set(j, symbol(rng));
    const FieldVector codeword = vec_mat_mul(x, c.matrix);

    for (std::size_t i = 0; i < p.receivers(); ++i) {
      const std::size_t max_weight = std::min(d.deltas[i], length);
      std::uniform_int_distribution<std::size_t> weight_draw(0, max_weight);
      const std::size_t w = weight_draw(rng);
      std::iota(positions.begin(), positions.end(), std::size_t{0});
      std::shuffle(positions.begin(), positions.end(), rng);

      FieldVector received = codeword;
      for (std::size_t k = 0; k < w; ++k) {
        received.set(positions[k], received[positions[k]] + nonzero(rng));
      }
      const std::vector<std::size_t> have = p.known(i);
      std::vector<Elem> side;
      side.reserve(have.size());
      for (std::size_t j : have) side.push_back(x[j]);

      const auto decoded = decode(p, i, c, received, side, d.deltas[i]);
      if (decoded && *decoded == x[p.demand[i]]) ++report.successes[i];
    }
  }
  return report;
}

}  // namespace ecic
