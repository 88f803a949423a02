// Copyright 2026 The orekit Authors.
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

#ifndef OREKIT_GUARDS_HPP
#define OREKIT_GUARDS_HPP

#include <cstdint>

namespace orekit {

/// Ceilings for every exhaustive computation in the library.
///
/// All universally quantified checks over a finite ring are run by brute force; these bound the
/// work. Exceeding one raises GuardExceeded rather than silently truncating.
struct Guards {
  /// Largest ring (or point set) that may be enumerated element by element.
  std::uint64_t max_ring_card = 65536;
  /// Largest number of (a, b) pairs checked exhaustively by the law validators.
  std::uint64_t max_pairs = std::uint64_t{1} << 24;
  /// Largest number of terms an OrePoly may hold during expansion.
  std::uint64_t max_terms = 1'000'000;
  /// Largest candidate count for combinatorial searches (matrices, polynomials, points).
  std::uint64_t max_search = 1'000'000;
  /// Pairs drawn when the pair guard is exceeded and sampled validation was requested.
  std::uint64_t sample_pairs = 0;
  /// Seed for sampled validation.
  std::uint64_t sample_seed = 0x5eed;
};

}  // namespace orekit

#endif  // OREKIT_GUARDS_HPP
