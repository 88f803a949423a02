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

#include "orekit/eval.hpp"

#include <algorithm>
#include <cctype>

#include "orekit/error.hpp"

namespace orekit {

Point parse_point(const TwistContext& ctx, std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin < end && text[begin] == '(') {
    if (text[end - 1] != ')') throw ParseError("expected ')' closing the point", end);
    ++begin;
    --end;
  }
  Point out;
  int depth = 0;
  std::size_t start = begin;
  auto flush = [&](std::size_t stop) {
    try {
      out.push_back(ctx.ring()->parse(text.substr(start, stop - start)));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), start + e.position());
    }
  };
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(end);
  if (out.size() != ctx.n()) {
    throw ParseError("point has " + std::to_string(out.size()) + " coordinates, expected " +
                         std::to_string(ctx.n()),
                     begin);
  }
  return out;
}

std::string print_point(const TwistContext& ctx, const Point& a) {
  return print_column(*ctx.ring(), a);
}

void check_point(const TwistContext& ctx, const Point& a) {
  if (a.size() != ctx.n()) {
    throw PreconditionError("point has " + std::to_string(a.size()) + " coordinates, expected " +
                            std::to_string(ctx.n()));
  }
  for (Elem e : a) ctx.ring()->check_element(e);
}

std::vector<Point> all_points(const TwistContext& ctx) {
  const std::uint64_t card = ctx.ring()->cardinality();
  const std::uint64_t guard = ctx.guards().max_ring_card;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    if (count > guard / card) {
      throw GuardExceeded("enumerating points: |A|^" + std::to_string(ctx.n()) + " = " +
                          std::to_string(card) + "^" + std::to_string(ctx.n()) +
                          " exceeds guard " + std::to_string(guard));
    }
    count *= card;
  }
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Point p(ctx.n());
    std::uint64_t x = idx;
    for (std::size_t i = ctx.n(); i-- > 0;) {
      p[i] = Elem{x % card};
      x /= card;
    }
    out.push_back(std::move(p));
  }
  return out;
}

Elem pmt_apply(const TwistContext& ctx, const Point& a, std::size_t i, Elem b) {
  const Ring& ring = *ctx.ring();
  Elem acc = ctx.delta_entry(i, b);
  for (std::size_t j = 0; j < ctx.n(); ++j) {
    acc = ring.add(acc, ring.mul(ctx.sigma_entry(i, j, b), a[j]));
  }
  return acc;
}

Elem apply_word(const TwistContext& ctx, const Point& a, const Word& w, Elem x) {
  for (std::size_t k = w.size(); k-- > 0;) x = pmt_apply(ctx, a, w[k], x);
  return x;
}

Elem apply_operator(const OrePoly& f, const Point& a, Elem x) {
  const TwistContext& ctx = *f.context();
  ctx.require_usable();
  check_point(ctx, a);
  const Ring& ring = *ctx.ring();
  Elem acc = ring.zero();
  for (const auto& [w, c] : f.terms()) acc = ring.add(acc, ring.mul(c, apply_word(ctx, a, w, x)));
  return acc;
}

Elem evaluate_pmt(const OrePoly& f, const Point& a) {
  return apply_operator(f, a, f.context()->ring()->one());
}

Elem evaluate_reduce(const OrePoly& f, const Point& a) {
  const ContextPtr& ctx = f.context();
  ctx->require_usable();
  check_point(*ctx, a);
  OrePoly rest = f;
  while (!rest.is_constant()) {
    const auto [w, c] = deglex_leading(rest);
    // c w' t_j == (c w') a_j modulo S(t_j - a_j).
    Word prefix(w.begin(), w.end() - 1);
    const Elem aj = a[w.back()];
    OrePoly next = rest;
    next.add_term(w, ctx->ring()->neg(c));
    next = poly_add(next, poly_mul(OrePoly::monomial(ctx, c, prefix), OrePoly::constant(ctx, aj)));
    if (next.size() > ctx->guards().max_terms) {
      throw GuardExceeded("evaluation by reduction exceeds the term guard");
    }
    rest = std::move(next);
  }
  return rest.coeff({});
}

Column relation_residual(const TwistContext& ctx, const Point& a, const Point& b, Elem x) {
  const Ring& ring = *ctx.ring();
  return sub(ring, sub(ring, mul_right(ring, b, x), mul(ring, ctx.sigma(x), a)), ctx.delta(x));
}

Point conjugate(const TwistContext& ctx, const Point& a, Elem x) {
  ctx.require_usable();
  check_point(ctx, a);
  const Ring& ring = *ctx.ring();
  const auto inv = ring.try_inverse(x);
  if (!inv) throw PreconditionError("conjugation needs a unit; " + ring.print(x) + " is not one");
  return mul_right(ring, add(ring, mul(ring, ctx.sigma(x), a), ctx.delta(x)), *inv);
}

std::optional<Elem> related(const TwistContext& ctx, const Point& a, const Point& b) {
  ctx.require_usable();
  check_point(ctx, a);
  check_point(ctx, b);
  const Ring& ring = *ctx.ring();
  for (Elem x : enumerate(ring, ctx.guards().max_ring_card)) {
    if (ring.is_zero_divisor(x)) continue;
    if (is_zero(relation_residual(ctx, a, b, x))) return x;
  }
  return std::nullopt;
}

std::vector<Point> delta_class(const TwistContext& ctx, const Point& a) {
  ctx.require_usable();
  check_point(ctx, a);
  const Ring& ring = *ctx.ring();
  std::vector<Point> out;
  for (Elem x : enumerate(ring, ctx.guards().max_ring_card)) {
    if (ring.is_zero_divisor(x)) continue;
    // A non-zero-divisor of a finite ring is a unit, so b = (sigma(x) a + delta(x)) x^-1.
    const auto inv = ring.try_inverse(x);
    if (!inv) throw PreconditionError("non-zero-divisor without inverse in a finite ring");
    out.push_back(
        mul_right(ring, add(ring, mul(ring, ctx.sigma(x), a), ctx.delta(x)), *inv));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Elem, Elem> product_formula_general(const OrePoly& f, const OrePoly& g, const Point& a) {
  const Elem lhs = evaluate_pmt(poly_mul(f, g), a);
  const Elem rhs = apply_operator(f, a, evaluate_pmt(g, a));
  return {lhs, rhs};
}

std::pair<Elem, Elem> product_formula_unit(const OrePoly& f, const OrePoly& g, const Point& a) {
  const TwistContext& ctx = *f.context();
  const Ring& ring = *ctx.ring();
  const Elem ga = evaluate_pmt(g, a);
  if (!ring.try_inverse(ga)) {
    throw PreconditionError("product formula needs g(a) to be a nonzero unit; g(a) = " +
                            ring.print(ga));
  }
  const Elem lhs = evaluate_pmt(poly_mul(f, g), a);
  const Elem rhs = ring.mul(evaluate_pmt(f, conjugate(ctx, a, ga)), ga);
  return {lhs, rhs};
}

std::pair<Elem, Elem> kernel_transport(const OrePoly& f, const Point& a, const Point& b, Elem x,
                                       Elem y) {
  const TwistContext& ctx = *f.context();
  const Ring& ring = *ctx.ring();
  check_point(ctx, a);
  check_point(ctx, b);
  if (ring.is_zero_divisor(x)) {
    throw PreconditionError("kernel transport needs a non-zero-divisor x; " + ring.print(x) +
                            " is a zero divisor");
  }
  const Column residual = relation_residual(ctx, a, b, x);
  if (!is_zero(residual)) {
    throw PreconditionError("b x != sigma(x) a + delta(x): residual " + print_column(ring, residual));
  }
  return {ring.mul(apply_operator(f, b, y), x), apply_operator(f, a, ring.mul(y, x))};
}

}  // namespace orekit
