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

#include "fixtures.hpp"

#include <algorithm>

namespace orekit::testing {

namespace {

RingPtr gf4() {
  static const RingPtr ring = make_gf(2, 2);
  return ring;
}

RingPtr mat2() {
  static const RingPtr ring = make_matrix_ring(make_zmod(2), 2);
  return ring;
}

Elem lit(const RingPtr& ring, const char* text) { return ring->parse(text); }

ContextPtr diag(const RingPtr& ring, std::vector<Endomorphism> e, DeltaSpec delta = zero_delta()) {
  return make_context(ring, diagonal_sigma(std::move(e)), std::move(delta));
}

Fixture broken(std::string name, const RingPtr& ring, std::vector<Elem> values) {
  return {std::move(name),
          TwistContext::build(ring, diagonal_sigma({Endomorphism::identity(ring)}),
                              coordinate_delta({TableMap{std::move(values)}}))};
}

}  // namespace

ContextPtr gf4_frob_id() {
  static const ContextPtr ctx =
      diag(gf4(), {Endomorphism::frobenius(gf4(), 1), Endomorphism::identity(gf4())});
  return ctx;
}

ContextPtr gf4_frob_frob() {
  static const ContextPtr ctx =
      diag(gf4(), {Endomorphism::frobenius(gf4(), 1), Endomorphism::frobenius(gf4(), 1)});
  return ctx;
}

ContextPtr gf4_identity() {
  static const ContextPtr ctx =
      diag(gf4(), {Endomorphism::identity(gf4()), Endomorphism::identity(gf4())});
  return ctx;
}

ContextPtr gf4_inner() {
  static const ContextPtr ctx =
      diag(gf4(), {Endomorphism::frobenius(gf4(), 1), Endomorphism::identity(gf4())},
           inner_delta({lit(gf4(), "g"), gf4()->zero()}));
  return ctx;
}

ContextPtr gf4_conjugated() {
  static const ContextPtr ctx = [] {
    const RingPtr r = gf4();
    Matrix u(2, 2, std::vector<Elem>{r->one(), r->one(), r->zero(), r->one()});
    return make_context(
        r, conjugated_sigma(u, {Endomorphism::frobenius(r, 1), Endomorphism::identity(r)}),
        inner_delta({lit(r, "g"), r->one()}));
  }();
  return ctx;
}

ContextPtr gf4_block() {
  static const ContextPtr ctx = [] {
    const RingPtr r = gf4();
    return make_context(r,
                        block_sigma(diagonal_sigma({Endomorphism::frobenius(r, 1)}),
                                    diagonal_sigma({Endomorphism::identity(r)}),
                                    InnerGamma{Matrix(1, 1, lit(r, "g"))}),
                        zero_delta());
  }();
  return ctx;
}

ContextPtr gf3_identity() {
  static const ContextPtr ctx = [] {
    const RingPtr r = make_gf(3, 1);
    return diag(r, {Endomorphism::identity(r), Endomorphism::identity(r)});
  }();
  return ctx;
}

ContextPtr zmod6_inner() {
  static const ContextPtr ctx = [] {
    const RingPtr r = make_zmod(6);
    return diag(r, {Endomorphism::identity(r), Endomorphism::identity(r)},
                inner_delta({lit(r, "2"), lit(r, "3")}));
  }();
  return ctx;
}

ContextPtr trunc2_derivative() {
  static const ContextPtr ctx = [] {
    const RingPtr r = make_trunc_poly(2, 2);
    return diag(r, {Endomorphism::identity(r), Endomorphism::identity(r)},
                coordinate_delta({DerivativeMap{}, DerivativeMap{}}));
  }();
  return ctx;
}

ContextPtr trunc3_substitution() {
  static const ContextPtr ctx = [] {
    const RingPtr r = make_trunc_poly(3, 2);
    return diag(r, {Endomorphism::substitution(r, lit(r, "2x")), Endomorphism::identity(r)},
                inner_delta({lit(r, "x"), r->one()}));
  }();
  return ctx;
}

ContextPtr mat2_inner() {
  static const ContextPtr ctx =
      diag(mat2(), {Endomorphism::identity(mat2()), Endomorphism::identity(mat2())},
           inner_delta({lit(mat2(), "[[0,1],[0,0]]"), lit(mat2(), "[[1,0],[1,1]]")}));
  return ctx;
}

ContextPtr mat2_block() {
  static const ContextPtr ctx = [] {
    const RingPtr r = mat2();
    return make_context(r,
                        block_sigma(diagonal_sigma({Endomorphism::identity(r)}),
                                    diagonal_sigma({Endomorphism::identity(r)}),
                                    InnerGamma{Matrix(1, 1, lit(r, "[[0,1],[0,0]]"))}),
                        zero_delta());
  }();
  return ctx;
}

std::vector<Fixture> all_fixtures() {
  return {{"gf4_frob_id", gf4_frob_id()},
          {"gf4_frob_frob", gf4_frob_frob()},
          {"gf4_identity", gf4_identity()},
          {"gf4_inner", gf4_inner()},
          {"gf4_conjugated", gf4_conjugated()},
          {"gf4_block", gf4_block()},
          {"gf3_identity", gf3_identity()},
          {"zmod6_inner", zmod6_inner()},
          {"trunc2_derivative", trunc2_derivative()},
          {"trunc3_substitution", trunc3_substitution()},
          {"mat2_inner", mat2_inner()},
          {"mat2_block", mat2_block()}};
}

std::vector<Fixture> mutation_fixtures() {
  const RingPtr g4 = gf4();
  const RingPtr gf3 = make_gf(3, 1);
  const RingPtr trunc = make_trunc_poly(2, 2);
  const RingPtr m2 = mat2();
  std::vector<Fixture> out;

  std::vector<Elem> only_g(4, g4->zero());
  only_g[lit(g4, "g").code] = g4->one();
  out.push_back(broken("gf4 delta(g)=1", g4, only_g));

  std::vector<Elem> only_one(4, g4->zero());
  only_one[g4->one().code] = g4->one();
  out.push_back(broken("gf4 delta(1)=1", g4, only_one));

  std::vector<Elem> identity(trunc->cardinality());
  for (std::uint64_t c = 0; c < identity.size(); ++c) identity[c] = Elem{c};
  out.push_back(broken("trunc2 delta=id", trunc, identity));

  out.push_back(broken("gf3 delta=1", gf3, std::vector<Elem>(3, gf3->one())));

  std::vector<Elem> mat_identity(m2->cardinality());
  for (std::uint64_t c = 0; c < mat_identity.size(); ++c) mat_identity[c] = Elem{c};
  out.push_back(broken("mat2 delta=id", m2, mat_identity));

  std::vector<Elem> square(3);
  for (std::uint64_t c = 0; c < 3; ++c) square[c] = gf3->mul(Elem{c}, Elem{c});
  out.push_back(broken("gf3 delta=a^2", gf3, square));
  return out;
}

Elem random_elem(const Ring& ring, Rng& rng) {
  return Elem{std::uniform_int_distribution<std::uint64_t>(0, ring.cardinality() - 1)(rng)};
}

Point random_point(const TwistContext& ctx, Rng& rng) {
  Point a(ctx.n());
  for (Elem& e : a) e = random_elem(*ctx.ring(), rng);
  return a;
}

OrePoly random_poly(const ContextPtr& ctx, Rng& rng, std::size_t max_terms, std::size_t max_len) {
  OrePoly f(ctx);
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
  for (std::size_t k = 0; k < terms; ++k) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
    for (auto& letter : w) {
      letter = static_cast<std::uint16_t>(
          std::uniform_int_distribution<std::size_t>(0, ctx->n() - 1)(rng));
    }
    f.add_term(w, random_elem(*ctx->ring(), rng));
  }
  return f;
}

std::vector<OrePoly> binary_polys(const ContextPtr& ctx, std::size_t max_len) {
  std::vector<Word> words{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (std::size_t i = 0; i < ctx->n(); ++i) {
        Word v = w;
        v.push_back(static_cast<std::uint16_t>(i));
        next.push_back(std::move(v));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<OrePoly> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << words.size()); ++mask) {
    OrePoly f(ctx);
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (mask >> k & 1) f.add_term(words[k], ctx->ring()->one());
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace orekit::testing
