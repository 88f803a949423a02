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

// Shared contexts and generators for the unit and acceptance suites.

#ifndef OREKIT_TESTS_FIXTURES_HPP
#define OREKIT_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orekit/eval.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/twist.hpp"

namespace orekit::testing {

struct Fixture {
  std::string name;
  ContextPtr ctx;
};

// GF(2,2) = F_2[g]/(g^2+g+1), n = 2.
ContextPtr gf4_frob_id();
ContextPtr gf4_frob_frob();
ContextPtr gf4_identity();
// sigma = diag(Frob, Id), delta inner at (g, 0).
ContextPtr gf4_inner();
// sigma = U diag(Frob, Id) U^-1 with U = [[1,1],[0,1]], delta inner at (g, 1).
ContextPtr gf4_conjugated();
// [[Frob, gamma], [0, Id]] with gamma inner at [[g]], delta = 0.
ContextPtr gf4_block();
ContextPtr gf3_identity();
// Z/6, sigma = Id, delta inner at (2, 3).
ContextPtr zmod6_inner();
// F_2[x]/(x^2), sigma = Id, delta = (d/dx, d/dx).
ContextPtr trunc2_derivative();
// F_3[x]/(x^2), sigma = diag(x -> 2x, Id), delta inner at (x, 1).
ContextPtr trunc3_substitution();
// M_2(Z/2), sigma = Id, delta inner at ([[0,1],[0,0]], [[1,0],[1,1]]).
ContextPtr mat2_inner();
// M_2(Z/2), [[Id, gamma], [0, Id]] with gamma inner at [[ [[0,1],[0,0]] ]].
ContextPtr mat2_block();

// Every fixture above.
std::vector<Fixture> all_fixtures();

// Deliberately broken delta tables, built but not validated.
std::vector<Fixture> mutation_fixtures();

using Rng = std::mt19937_64;

Elem random_elem(const Ring& ring, Rng& rng);
Point random_point(const TwistContext& ctx, Rng& rng);
// Up to max_terms terms on words of length <= max_len.
OrePoly random_poly(const ContextPtr& ctx, Rng& rng, std::size_t max_terms = 3,
                    std::size_t max_len = 2);
// Every polynomial with {0,1} coefficients on words of length <= max_len, zero included.
std::vector<OrePoly> binary_polys(const ContextPtr& ctx, std::size_t max_len);

}  // namespace orekit::testing

#endif  // OREKIT_TESTS_FIXTURES_HPP
