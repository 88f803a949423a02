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

// Evaluation of f in S at points a of A^n, (sigma, delta)-conjugation and the relation
// b x = sigma(x) a + delta(x).
//
// The point PMT attached to a is T_i(b) = sum_j sigma_ij(b) a_j + delta_i(b). A word
// t_{i1}...t_{il} acts as T_{i1} o ... o T_{il}, so the rightmost letter is applied first.

#ifndef OREKIT_EVAL_HPP
#define OREKIT_EVAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orekit/matrix.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/twist.hpp"

namespace orekit {

using Point = Column;

/// "(a1, ..., an)" with ring literals; the parentheses are optional.
Point parse_point(const TwistContext& ctx, std::string_view text);
std::string print_point(const TwistContext& ctx, const Point& a);
/// Throws PreconditionError unless a has n entries of the context ring.
void check_point(const TwistContext& ctx, const Point& a);

/// All of A^n in canonical order (lexicographic, a1 most significant). Guarded by
/// ctx.guards().max_ring_card on |A|^n.
std::vector<Point> all_points(const TwistContext& ctx);

Elem pmt_apply(const TwistContext& ctx, const Point& a, std::size_t i, Elem b);
/// w(T_a)(x).
Elem apply_word(const TwistContext& ctx, const Point& a, const Word& w, Elem x);
/// f(T_a)(x) = sum_w c_w w(T_a)(x).
Elem apply_operator(const OrePoly& f, const Point& a, Elem x);

/// f(T_a)(1).
Elem evaluate_pmt(const OrePoly& f, const Point& a);
/// Reduces f modulo the left ideal sum_i S(t_i - a_i): the deglex-largest nonconstant term
/// c w' t_j is replaced by (c w') a_j until only a constant remains.
Elem evaluate_reduce(const OrePoly& f, const Point& a);

/// b x - sigma(x) a - delta(x).
Column relation_residual(const TwistContext& ctx, const Point& a, const Point& b, Elem x);

/// a^x = sigma(x) a x^-1 + delta(x) x^-1. Throws PreconditionError when x is not a unit.
Point conjugate(const TwistContext& ctx, const Point& a, Elem x);

/// Least non-zero-divisor x (code order) with b x = sigma(x) a + delta(x).
std::optional<Elem> related(const TwistContext& ctx, const Point& a, const Point& b);

/// Every b related to a, in canonical point order without repeats.
std::vector<Point> delta_class(const TwistContext& ctx, const Point& a);

/// ((fg)(a), f(T_a)(g(a))).
std::pair<Elem, Elem> product_formula_general(const OrePoly& f, const OrePoly& g, const Point& a);
/// ((fg)(a), f(a^{g(a)}) g(a)). Throws PreconditionError unless g(a) is a unit.
std::pair<Elem, Elem> product_formula_unit(const OrePoly& f, const OrePoly& g, const Point& a);
/// (f(T_b)(y) x, f(T_a)(y x)). Throws PreconditionError unless x is a non-zero-divisor with
/// b x = sigma(x) a + delta(x).
std::pair<Elem, Elem> kernel_transport(const OrePoly& f, const Point& a, const Point& b, Elem x,
                                       Elem y);

}  // namespace orekit

#endif  // OREKIT_EVAL_HPP
