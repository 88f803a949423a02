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

// Structure of S: center candidates, semi-invariant polynomials, (sigma, delta)-centralizers,
// root sets and their decomposition into conjugacy classes. Everything is exhaustive over the
// finite coefficient ring and bounded by the context guards.

#ifndef OREKIT_STRUCTURE_HPP
#define OREKIT_STRUCTURE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "orekit/eval.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/twist.hpp"

namespace orekit {

/// { a : a central in A, sigma(a) = a I, delta(a) = 0 }. This is the defining condition for
/// constants of Z(S); outside division rings it is only a candidate for the full center.
std::vector<Elem> center_of_S(const TwistContext& ctx);

struct SemiInvariantCertificate {
  OrePoly p;
  /// phi(a) indexed by a.code, with p a = phi(a) p.
  std::vector<Elem> phi;
  bool verified = false;
  /// False when some a admits more than one a' (possible over rings with zero divisors).
  bool unique = true;
};

/// Solves p a = a' p for every a and checks that a -> a' is a unital ring homomorphism.
std::optional<SemiInvariantCertificate> is_semi_invariant(const OrePoly& p);

struct SemiSearchOptions {
  /// Only for the unrestricted search: force the deglex-leading coefficient to 1.
  bool monic_only = true;
  bool include_constants = false;
  /// Every coefficient ranges over A instead of {0, 1}.
  bool unrestricted = false;
};

/// Every candidate over words of length <= max_len that passes is_semi_invariant, in the order
/// of their coefficient vectors. Throws GuardExceeded naming the candidate count when it is above
/// guards.max_search.
std::vector<SemiInvariantCertificate> find_semi_invariants(const ContextPtr& ctx,
                                                           std::size_t max_len,
                                                           const SemiSearchOptions& options = {});

struct OperatorCheck {
  std::size_t variable = 0;
  std::size_t degree = 0;
  /// p(T_a)(x) = sigma_i^deg(x) p(T_a)(1) for all a, x in K.
  bool identity_holds = true;
  /// No nonzero q of degree < deg in K[t_i; sigma_i, delta_i] vanishes on all of K. Under this,
  /// identity_holds is equivalent to semi-invariance.
  bool hypothesis_verified = false;
  /// (a, x) violating the identity.
  std::optional<std::pair<Elem, Elem>> witness;
};

/// Requires diagonal sigma, a field, and every word of p a power of one variable t_i; throws
/// PreconditionError otherwise. Constants are treated as polynomials in t_1.
OperatorCheck semiinvariant_operator_check(const OrePoly& p);

struct Centralizer {
  std::vector<Elem> elements;
  bool is_subring = false;
  /// Over a field, every nonzero element has its inverse inside. Always true otherwise.
  bool inverse_closed = true;
};

/// { x : sigma(x) a + delta(x) = a x }.
Centralizer centralizer(const TwistContext& ctx, const Point& a);

/// (t_i - a_i) b lies in sum_j S(t_j - a_j) for every i.
bool idealizer_member(const ContextPtr& ctx, Elem b, const Point& a);

/// Replacement for T_{a_i}, used to probe the checker itself.
using PointOperator = std::function<Elem(std::size_t i, Elem x)>;

struct LinearityCheck {
  bool holds = true;
  /// (i, x, y) with T_i(x y) != T_i(x) y.
  std::optional<std::tuple<std::size_t, Elem, Elem>> witness;
};

/// T_{a_i}(x y) = T_{a_i}(x) y for all i, x in A and y in the centralizer of a.
LinearityCheck right_linearity_check(const TwistContext& ctx, const Point& a,
                                     const PointOperator& op = {});

/// V(f) in canonical point order.
std::vector<Point> roots(const OrePoly& f);

struct RootClass {
  Point representative;
  /// Nonzero x with f(a^x) = 0.
  std::vector<Elem> e_set;
  /// { a^x : x in e_set } without repeats.
  std::vector<Point> slice;
};

struct RootClassReport {
  OrePoly f;
  std::vector<Point> roots;
  std::vector<RootClass> classes;
  /// The slices cover V(f) exactly.
  bool coverage = false;
  /// For every a and x != 0: x in ker f(T_a) iff f(a^x) = 0.
  bool kernel_criterion = false;
  /// ker f(T_a) and E(f, a) are closed under right multiplication by the centralizer of a.
  bool module_closure = false;
  /// Delta(a) meets V(f) in exactly a^{E(f, a)}.
  bool slice_exact = false;

  bool holds() const { return coverage && kernel_criterion && module_closure && slice_exact; }
};

/// Representatives are the least roots of each class, in canonical order. Fields only.
RootClassReport class_decomposition(const OrePoly& f);

struct ClosureCheck {
  bool holds = true;
  /// (b, x) with f(b) = 0 and f(b^x) != 0.
  std::optional<std::pair<Point, Elem>> witness;
};

/// Every conjugate of a root of f is a root. Fields only.
ClosureCheck root_closure(const OrePoly& f);
/// root_closure for a verified certificate.
ClosureCheck semiinvariant_root_closure(const SemiInvariantCertificate& cert);

/// delta_i^2 = 0 on every element, computed as t_i^2 acting through the PMT at the zero point.
/// Requires sigma to be the identity.
bool delta_square_kernel_demo(const TwistContext& ctx);

}  // namespace orekit

#endif  // OREKIT_STRUCTURE_HPP
