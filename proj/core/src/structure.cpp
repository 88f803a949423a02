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

#include "orekit/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orekit/error.hpp"

namespace orekit {

namespace {

void check_pair_guard(const TwistContext& ctx, std::uint64_t size, const char* what) {
  if (size != 0 && size > ctx.guards().max_pairs / size) {
    throw GuardExceeded(std::string(what) + ": " + std::to_string(size) + "^2 pairs exceed guard " +
                        std::to_string(ctx.guards().max_pairs));
  }
}

void require_field(const TwistContext& ctx) {
  if (!ctx.ring()->is_field()) {
    throw PreconditionError("non-field ring rejected (domain hypothesis): " +
                            ctx.ring()->describe());
  }
}

bool contains(const std::vector<Elem>& sorted, Elem x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool contains(const std::vector<Point>& sorted, const Point& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Rank over a field by row reduction.
std::size_t field_rank(const Ring& ring, std::vector<std::vector<Elem>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && ring.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem inv = *ring.try_inverse(rows[rank][c]);
    for (Elem& e : rows[rank]) e = ring.mul(inv, e);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || ring.is_zero(rows[r][c])) continue;
      const Elem factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = ring.sub(rows[r][k], ring.mul(factor, rows[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

// Words of length <= max_len in deglex order.
std::vector<Word> words_up_to(std::size_t n, std::size_t max_len, std::uint64_t limit) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        Word v = w;
        v.push_back(static_cast<std::uint16_t>(i));
        next.push_back(std::move(v));
      }
      if (next.size() + out.size() > limit) {
        throw GuardExceeded("semi-invariant search: more than " + std::to_string(limit) +
                            " words of length <= " + std::to_string(max_len));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Elem> center_of_S(const TwistContext& ctx) {
  ctx.require_usable();
  const Ring& ring = *ctx.ring();
  const std::vector<Elem> elems = all_elements(ring, ctx.guards().max_ring_card);
  if (!ring.is_commutative()) check_pair_guard(ctx, elems.size(), "center");
  std::vector<Elem> out;
  for (Elem a : elems) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < ctx.n(); ++i) {
      if (!ring.is_zero(ctx.delta_entry(i, a))) ok = false;
      for (std::size_t j = 0; ok && j < ctx.n(); ++j) {
        if (ctx.sigma_entry(i, j, a) != (i == j ? a : ring.zero())) ok = false;
      }
    }
    if (ok && !ring.is_commutative()) {
      for (Elem b : elems) {
        if (ring.mul(a, b) != ring.mul(b, a)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::optional<SemiInvariantCertificate> is_semi_invariant(const OrePoly& p) {
  const ContextPtr& ctx = p.context();
  ctx->require_usable();
  if (p.is_zero()) throw PreconditionError("semi-invariance is defined for p != 0");
  const Ring& ring = *ctx->ring();
  const std::vector<Elem> elems = all_elements(ring, ctx->guards().max_ring_card);
  const auto [lead_word, lead] = deglex_leading(p);
  const auto lead_inv = ring.try_inverse(lead);

  SemiInvariantCertificate cert{p, std::vector<Elem>(elems.size()), false, true};
  for (Elem a : elems) {
    const OrePoly pa = poly_mul(p, OrePoly::constant(ctx, a));
    if (lead_inv) {
      // Leading coefficients: coeff(pa) = a' lead.
      const Elem candidate = ring.mul(pa.coeff(lead_word), *lead_inv);
      if (!(scalar_mul(candidate, p) == pa)) return std::nullopt;
      cert.phi[a.code] = candidate;
      continue;
    }
    std::size_t found = 0;
    for (Elem candidate : elems) {
      if (!(scalar_mul(candidate, p) == pa)) continue;
      if (found++ == 0) cert.phi[a.code] = candidate;
    }
    if (found == 0) return std::nullopt;
    if (found > 1) cert.unique = false;
  }

  check_pair_guard(*ctx, elems.size(), "certificate homomorphism check");
  const auto& phi = cert.phi;
  bool hom = phi[ring.one().code] == ring.one();
  for (std::size_t x = 0; hom && x < elems.size(); ++x) {
    for (std::size_t y = 0; hom && y < elems.size(); ++y) {
      const Elem a = elems[x], b = elems[y];
      if (phi[ring.add(a, b).code] != ring.add(phi[x], phi[y])) hom = false;
      if (phi[ring.mul(a, b).code] != ring.mul(phi[x], phi[y])) hom = false;
    }
  }
  cert.verified = hom;
  return cert;
}

std::vector<SemiInvariantCertificate> find_semi_invariants(const ContextPtr& ctx,
                                                           std::size_t max_len,
                                                           const SemiSearchOptions& options) {
  ctx->require_usable();
  const Ring& ring = *ctx->ring();
  const std::uint64_t budget = ctx->guards().max_search;
  const std::vector<Word> words = words_up_to(ctx->n(), max_len, 64);
  const std::uint64_t base = options.unrestricted ? ring.cardinality() : 2;

  std::uint64_t total = 1;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (total > budget / base) {
      throw GuardExceeded("semi-invariant search over " + std::to_string(words.size()) +
                          " words with " + std::to_string(base) +
                          " coefficient choices each exceeds guard " + std::to_string(budget) +
                          " (search size " + std::to_string(base) + "^" +
                          std::to_string(words.size()) + ")");
    }
    total *= base;
  }

  std::vector<SemiInvariantCertificate> out;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    OrePoly p(ctx);
    std::uint64_t rest = idx;
    Elem leading = ring.zero();
    for (const Word& w : words) {
      const std::uint64_t digit = rest % base;
      rest /= base;
      if (digit == 0) continue;
      const Elem c = options.unrestricted ? ring.element_at(digit) : ring.one();
      p.add_term(w, c);
      leading = c;
    }
    if (!options.include_constants && p.is_constant()) continue;
    if (options.unrestricted && options.monic_only && leading != ring.one()) continue;
    auto cert = is_semi_invariant(p);
    if (cert && cert->verified) out.push_back(std::move(*cert));
  }
  return out;
}

OperatorCheck semiinvariant_operator_check(const OrePoly& p) {
  const ContextPtr& ctx = p.context();
  ctx->require_usable();
  require_field(*ctx);
  if (!ctx->sigma_is_diagonal()) {
    throw PreconditionError("operator check needs a diagonal sigma; got " +
                            describe_sigma(*ctx->ring(), ctx->sigma_spec()));
  }
  if (p.is_zero()) throw PreconditionError("operator check needs p != 0");
  OperatorCheck out;
  bool seen = false;
  for (const auto& [w, c] : p.terms()) {
    for (std::uint16_t letter : w) {
      if (!seen) {
        out.variable = letter;
        seen = true;
      } else if (letter != out.variable) {
        throw PreconditionError("operator check needs a univariate polynomial; " +
                                print_poly(p) + " mixes t" + std::to_string(out.variable + 1) +
                                " and t" + std::to_string(letter + 1));
      }
    }
  }
  out.degree = p.degree();
  const std::size_t i = out.variable;
  const Ring& ring = *ctx->ring();
  const std::vector<Elem> elems = all_elements(ring, ctx->guards().max_ring_card);
  check_pair_guard(*ctx, elems.size(), "operator check");

  auto sigma_power = [&](Elem x) {
    for (std::size_t k = 0; k < out.degree; ++k) x = ctx->sigma_entry(i, i, x);
    return x;
  };
  // rows[k][a] = t_i^k evaluated at a, for k < deg.
  std::vector<std::vector<Elem>> rows(out.degree, std::vector<Elem>(elems.size()));
  Point point(ctx->n(), ring.zero());
  for (Elem a : elems) {
    point[i] = a;
    const Elem at_one = evaluate_pmt(p, point);
    for (Elem x : elems) {
      if (apply_operator(p, point, x) == ring.mul(sigma_power(x), at_one)) continue;
      if (out.identity_holds) out.witness = std::make_pair(a, x);
      out.identity_holds = false;
    }
    Elem power = ring.one();
    for (std::size_t k = 0; k < out.degree; ++k) {
      rows[k][a.code] = power;
      power = pmt_apply(*ctx, point, i, power);
    }
  }
  out.hypothesis_verified = field_rank(ring, std::move(rows)) == out.degree;
  return out;
}

Centralizer centralizer(const TwistContext& ctx, const Point& a) {
  ctx.require_usable();
  check_point(ctx, a);
  const Ring& ring = *ctx.ring();
  Centralizer out;
  for (Elem x : enumerate(ring, ctx.guards().max_ring_card)) {
    if (is_zero(relation_residual(ctx, a, a, x))) out.elements.push_back(x);
  }
  const auto& c = out.elements;
  check_pair_guard(ctx, c.size(), "centralizer subring check");
  out.is_subring = contains(c, ring.zero()) && contains(c, ring.one());
  for (std::size_t s = 0; out.is_subring && s < c.size(); ++s) {
    if (!contains(c, ring.neg(c[s]))) out.is_subring = false;
    for (std::size_t t = 0; out.is_subring && t < c.size(); ++t) {
      if (!contains(c, ring.add(c[s], c[t])) || !contains(c, ring.mul(c[s], c[t]))) {
        out.is_subring = false;
      }
    }
  }
  if (ring.is_field()) {
    for (Elem x : c) {
      if (ring.is_zero(x)) continue;
      if (!contains(c, *ring.try_inverse(x))) out.inverse_closed = false;
    }
  }
  return out;
}

bool idealizer_member(const ContextPtr& ctx, Elem b, const Point& a) {
  ctx->require_usable();
  check_point(*ctx, a);
  ctx->ring()->check_element(b);
  for (std::size_t i = 0; i < ctx->n(); ++i) {
    const OrePoly lhs = OrePoly::variable(ctx, i) - OrePoly::constant(ctx, a[i]);
    if (!ctx->ring()->is_zero(evaluate_pmt(lhs * OrePoly::constant(ctx, b), a))) return false;
  }
  return true;
}

LinearityCheck right_linearity_check(const TwistContext& ctx, const Point& a,
                                     const PointOperator& op) {
  const Ring& ring = *ctx.ring();
  const std::vector<Elem> c = centralizer(ctx, a).elements;
  auto apply = [&](std::size_t i, Elem x) { return op ? op(i, x) : pmt_apply(ctx, a, i, x); };
  LinearityCheck out;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (Elem x : enumerate(ring, ctx.guards().max_ring_card)) {
      for (Elem y : c) {
        if (apply(i, ring.mul(x, y)) == ring.mul(apply(i, x), y)) continue;
        out.holds = false;
        out.witness = std::make_tuple(i, x, y);
        return out;
      }
    }
  }
  return out;
}

std::vector<Point> roots(const OrePoly& f) {
  const TwistContext& ctx = *f.context();
  ctx.require_usable();
  std::vector<Point> out;
  for (Point& a : all_points(ctx)) {
    if (ctx.ring()->is_zero(evaluate_pmt(f, a))) out.push_back(std::move(a));
  }
  return out;
}

RootClassReport class_decomposition(const OrePoly& f) {
  const TwistContext& ctx = *f.context();
  ctx.require_usable();
  require_field(ctx);
  const Ring& ring = *ctx.ring();
  const std::vector<Elem> elems = all_elements(ring, ctx.guards().max_ring_card);
  const std::vector<Point> points = all_points(ctx);

  RootClassReport report{f, roots(f), {}, true, true, true, true};
  auto is_root = [&](const Point& b) { return contains(report.roots, b); };

  std::vector<std::vector<Elem>> e_sets(points.size());
  std::vector<std::vector<Point>> slices(points.size());
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const Point& a = points[idx];
    std::vector<Elem> ker, e_set;
    std::vector<Point> slice;
    for (Elem x : elems) {
      const bool in_ker = ring.is_zero(apply_operator(f, a, x));
      if (in_ker) ker.push_back(x);
      if (ring.is_zero(x)) continue;
      const Point b = conjugate(ctx, a, x);
      const bool in_e = is_root(b);
      if (in_e) {
        e_set.push_back(x);
        slice.push_back(b);
      }
      if (in_ker != in_e) report.kernel_criterion = false;
    }
    for (Elem c : centralizer(ctx, a).elements) {
      for (Elem x : ker) {
        if (!contains(ker, ring.mul(x, c))) report.module_closure = false;
      }
      if (ring.is_zero(c)) continue;
      for (Elem x : e_set) {
        if (!contains(e_set, ring.mul(x, c))) report.module_closure = false;
      }
    }
    std::sort(slice.begin(), slice.end());
    slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
    std::vector<Point> expected;
    for (Point& b : delta_class(ctx, a)) {
      if (is_root(b)) expected.push_back(std::move(b));
    }
    if (expected != slice) report.slice_exact = false;
    e_sets[idx] = std::move(e_set);
    slices[idx] = std::move(slice);
  }

  std::set<Point> covered;
  for (const Point& a : report.roots) {
    if (covered.count(a)) continue;
    // points is in canonical order, so the index is found by search.
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), a) - points.begin());
    for (const Point& b : slices[idx]) {
      if (!is_root(b)) report.coverage = false;
      covered.insert(b);
    }
    report.classes.push_back(RootClass{a, e_sets[idx], slices[idx]});
  }
  if (covered.size() != report.roots.size()) report.coverage = false;
  return report;
}

ClosureCheck root_closure(const OrePoly& f) {
  const TwistContext& ctx = *f.context();
  ctx.require_usable();
  require_field(ctx);
  const Ring& ring = *ctx.ring();
  ClosureCheck out;
  for (const Point& b : roots(f)) {
    for (Elem x : enumerate(ring, ctx.guards().max_ring_card)) {
      if (ring.is_zero(x)) continue;
      if (ring.is_zero(evaluate_pmt(f, conjugate(ctx, b, x)))) continue;
      out.holds = false;
      out.witness = std::make_pair(b, x);
      return out;
    }
  }
  return out;
}

ClosureCheck semiinvariant_root_closure(const SemiInvariantCertificate& cert) {
  if (!cert.verified) throw PreconditionError("root closure needs a verified certificate");
  return root_closure(cert.p);
}

bool delta_square_kernel_demo(const TwistContext& ctx) {
  ctx.require_usable();
  const Ring& ring = *ctx.ring();
  const std::vector<Elem> elems = all_elements(ring, ctx.guards().max_ring_card);
  for (Elem a : elems) {
    for (std::size_t i = 0; i < ctx.n(); ++i) {
      for (std::size_t j = 0; j < ctx.n(); ++j) {
        if (ctx.sigma_entry(i, j, a) != (i == j ? a : ring.zero())) {
          throw PreconditionError("context shape mismatch: sigma must be the identity, got " +
                                  describe_sigma(*ctx.ring(), ctx.sigma_spec()));
        }
      }
    }
  }
  // At the zero point T_i = delta_i.
  const Point zero(ctx.n(), ring.zero());
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    const Word square{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(i)};
    for (Elem x : elems) {
      if (!ring.is_zero(apply_word(ctx, zero, square, x))) return false;
    }
  }
  return true;
}

}  // namespace orekit
