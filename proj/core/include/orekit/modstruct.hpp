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

// Left S-module structures on free modules A^l and the S-module homomorphisms between them.
//
// Conventions. A vector is u = sum_k u_k e_k with scalars on the left. The matrix X_i holds the
// action of t_i: T_i(e_k) = sum_m (X_i)_{m,k} e_m, so column k of X_i is T_i(e_k). A module map
// phi: A^l1 -> A^l2 is given by an l2 x l1 matrix M with phi(e_k) = sum_s M_{s,k} w_s, hence
// phi(u)_s = sum_k u_k M_{s,k}. Intertwining on basis vectors reads, for all i, r, k:
//
//   sum_m (X_i)_{m,k} M_{r,m} = sum_j sum_s sigma_ij(M_{s,k}) (Y_j)_{r,s} + delta_i(M_{r,k}).

#ifndef OREKIT_MODSTRUCT_HPP
#define OREKIT_MODSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orekit/eval.hpp"
#include "orekit/matrix.hpp"
#include "orekit/twist.hpp"

namespace orekit {

struct ModulePresentation {
  ContextPtr ctx;
  std::size_t rank = 0;
  /// n matrices, each rank x rank.
  std::vector<Matrix> x;
};

/// Checks shapes and entries.
ModulePresentation make_presentation(ContextPtr ctx, std::vector<Matrix> x);
/// Rank 1 with X_i = [a_i]; the module S / sum_i S(t_i - a_i).
ModulePresentation module_from_point(ContextPtr ctx, const Point& a);

/// T_i(u), component m = sum_j sum_k sigma_ij(u_k) (X_j)_{m,k} + delta_i(u_m).
Column module_apply(const ModulePresentation& p, std::size_t i, const Column& u);
/// phi(u)_s = sum_k u_k M_{s,k}.
Column hom_apply(const Ring& ring, const Matrix& m, const Column& u);

/// Per-variable residual LHS - RHS of the intertwining condition, each l2 x l1.
std::vector<Matrix> hom_residuals(const Matrix& m, const ModulePresentation& p1,
                                  const ModulePresentation& p2);

struct HomSolution {
  /// True for the linear solve over the prime subfield Z/p.
  bool linear = false;
  std::uint64_t prime = 0;
  /// Shape of every solution: rank(P2) x rank(P1).
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Linear path: reduced row echelon basis over Z/p. Enumeration path: every solution.
  std::vector<Matrix> basis;
  /// Z/p-dimension of the solution space (linear path only).
  std::size_t dimension = 0;
  /// Number of solutions, when it fits in 64 bits.
  std::optional<std::uint64_t> count;
};

/// The solution space of the intertwining condition. Uses Gaussian elimination over Z/p when the
/// additive group of A is an F_p-vector space in coordinates (every additive map is then
/// Z/p-linear); otherwise enumerates all l2 x l1 matrices under guards.max_search.
HomSolution hom_solve(const ModulePresentation& p1, const ModulePresentation& p2);

/// Every element of the solution space; guarded by max_search.
std::vector<Matrix> all_solutions(const HomSolution& sol, const TwistContext& ctx);

struct HomCheck {
  bool condition_iii = true;
  std::vector<Matrix> residuals;
  /// phi(T1_i(u)) = T2_i(phi(u)) for every u in A^l1 (run when |A|^l1 fits the guard).
  bool condition_ii = true;
  bool condition_ii_checked = false;
  std::optional<Column> witness_u;
  std::optional<std::size_t> witness_i;

  bool holds() const { return condition_iii && condition_ii; }
};

HomCheck is_module_hom(const Matrix& m, const ModulePresentation& p1,
                       const ModulePresentation& p2);

/// First a violating T_i(a u) = sum_j sigma_ij(a) T_j(u) + delta_i(a) u, over all a.
std::optional<std::pair<std::size_t, Elem>> pmt_law_violation(const ModulePresentation& p,
                                                              const Column& u);

}  // namespace orekit

#endif  // OREKIT_MODSTRUCT_HPP
