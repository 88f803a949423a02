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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "orekit/error.hpp"
#include "orekit/modstruct.hpp"

namespace orekit {
namespace {

using namespace orekit::testing;

Point pt(const ContextPtr& ctx, const char* text) { return parse_point(*ctx, text); }

// Hom(M_a, M_b) in rank one is {m : a m = sigma(m) b + delta(m)}, counted by brute force.
std::uint64_t brute_rank_one(const ContextPtr& ctx, const Point& a, const Point& b) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < ctx->ring()->cardinality(); ++k) {
    if (is_zero(relation_residual(*ctx, b, a, ctx->ring()->element_at(k)))) ++count;
  }
  return count;
}

TEST(ModStruct, PointModuleHomCountsMatchBruteForce) {
  Rng rng(21);
  for (const auto& fx : all_fixtures()) {
    for (int k = 0; k < 12; ++k) {
      const Point a = random_point(*fx.ctx, rng);
      const Point b = k % 3 == 0 ? a : random_point(*fx.ctx, rng);
      const HomSolution sol =
          hom_solve(module_from_point(fx.ctx, a), module_from_point(fx.ctx, b));
      ASSERT_TRUE(sol.count.has_value());
      EXPECT_EQ(*sol.count, brute_rank_one(fx.ctx, a, b)) << fx.name;
    }
  }
}

TEST(ModStruct, FrobeniusEndomorphismsOfPointModule) {
  // m = Frob(m): the prime field, dimension 1 over Z/2.
  const ContextPtr ctx = gf4_frob_id();
  const auto m = module_from_point(ctx, pt(ctx, "(1, 1)"));
  const HomSolution sol = hom_solve(m, m);
  EXPECT_TRUE(sol.linear);
  EXPECT_EQ(sol.prime, 2u);
  EXPECT_EQ(sol.dimension, 1u);
  EXPECT_EQ(sol.count, 2u);
  EXPECT_EQ(sol.rows, 1u);
  EXPECT_EQ(sol.cols, 1u);
}

TEST(ModStruct, DirectSumDoublesDimension) {
  const ContextPtr ctx = gf4_frob_id();
  const Point a = pt(ctx, "(1, 1)");
  const auto single = module_from_point(ctx, a);
  const auto twice = make_presentation(ctx, {Matrix::diagonal({a[0], a[0]}), Matrix::diagonal({a[1], a[1]})});
  EXPECT_EQ(hom_solve(single, twice).dimension, 2u);
  EXPECT_EQ(hom_solve(twice, single).dimension, 2u);
  EXPECT_EQ(hom_solve(twice, twice).dimension, 4u);
}

TEST(ModStruct, SolutionsAreHomomorphisms) {
  Rng rng(22);
  for (const auto& fx : all_fixtures()) {
    const Point a = random_point(*fx.ctx, rng);
    const Point b = random_point(*fx.ctx, rng);
    const auto p1 = module_from_point(fx.ctx, a);
    const auto p2 = module_from_point(fx.ctx, b);
    const HomSolution sol = hom_solve(p1, p2);
    const auto sols = all_solutions(sol, *fx.ctx);
    EXPECT_EQ(sols.size(), *sol.count) << fx.name;
    for (const Matrix& m : sols) {
      const HomCheck hc = is_module_hom(m, p1, p2);
      EXPECT_TRUE(hc.holds()) << fx.name;
      EXPECT_TRUE(hc.condition_ii_checked);
    }
    // Any matrix outside the solution set fails both conditions.
    for (std::uint64_t k = 0; k < fx.ctx->ring()->cardinality(); ++k) {
      const Matrix m(1, 1, fx.ctx->ring()->element_at(k));
      if (std::find(sols.begin(), sols.end(), m) != sols.end()) continue;
      const HomCheck hc = is_module_hom(m, p1, p2);
      EXPECT_FALSE(hc.condition_iii) << fx.name;
      EXPECT_FALSE(hc.condition_ii) << fx.name;
      EXPECT_TRUE(hc.witness_u.has_value());
      break;
    }
  }
}

TEST(ModStruct, ModuleActionOnPointModule) {
  // On M_a the action on the generator is the point PMT.
  Rng rng(23);
  for (const auto& fx : all_fixtures()) {
    const Point a = random_point(*fx.ctx, rng);
    const auto p = module_from_point(fx.ctx, a);
    for (int k = 0; k < 20; ++k) {
      const Elem u = random_elem(*fx.ctx->ring(), rng);
      for (std::size_t i = 0; i < fx.ctx->n(); ++i) {
        EXPECT_EQ(module_apply(p, i, Column{u}), Column{pmt_apply(*fx.ctx, a, i, u)}) << fx.name;
      }
      EXPECT_FALSE(pmt_law_violation(p, Column{u}).has_value()) << fx.name;
    }
  }
}

TEST(ModStruct, LawViolationOnBrokenDelta) {
  // delta(g) = 1 only. At u = g, a = g+1: T(a u) = delta(1) = 0 but sigma(a) T(u) = g+1.
  const auto fx = mutation_fixtures().front();
  const auto p = module_from_point(fx.ctx, Point{Elem{0}});
  EXPECT_FALSE(pmt_law_violation(p, Column{fx.ctx->ring()->one()}).has_value());
  const auto w = pmt_law_violation(p, Column{fx.ctx->ring()->parse("g")});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->second, fx.ctx->ring()->parse("g+1"));
}

TEST(ModStruct, PresentationShapesChecked) {
  const ContextPtr ctx = gf4_frob_id();
  EXPECT_THROW(make_presentation(ctx, {Matrix::identity(*ctx->ring(), 2)}), PreconditionError);
  EXPECT_THROW(make_presentation(ctx, {Matrix(2, 2), Matrix(2, 3)}), PreconditionError);
  EXPECT_THROW(make_presentation(ctx, {Matrix(1, 1, Elem{7}), Matrix(1, 1)}), PreconditionError);
}

TEST(ModStruct, EnumerationPathOverZ6) {
  const ContextPtr ctx = zmod6_inner();
  const auto m = module_from_point(ctx, pt(ctx, "(1, 1)"));
  const HomSolution sol = hom_solve(m, m);
  EXPECT_FALSE(sol.linear);
  EXPECT_EQ(*sol.count, brute_rank_one(ctx, pt(ctx, "(1, 1)"), pt(ctx, "(1, 1)")));
}

TEST(ModStruct, HomApplyConvention) {
  // phi(u)_s = sum_k u_k M_{s,k}: left scalars against columns of M.
  const ContextPtr ctx = mat2_inner();
  const Ring& r = *ctx->ring();
  const Elem e12 = r.parse("[[0,1],[0,0]]");
  const Elem e21 = r.parse("[[0,0],[1,0]]");
  Matrix m(1, 2);
  m(0, 0) = e21;
  m(0, 1) = r.zero();
  EXPECT_EQ(hom_apply(r, m, Column{e12, e21}), Column{r.mul(e12, e21)});
  EXPECT_NE(r.mul(e12, e21), r.mul(e21, e12));
}

}  // namespace
}  // namespace orekit
