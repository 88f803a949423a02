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
#include "orekit/twist.hpp"

namespace orekit {
namespace {

using namespace orekit::testing;

std::pair<Elem, Elem> elems(const RingPtr& r, const char* a, const char* b) {
  return {r->parse(a), r->parse(b)};
}

TEST(Twist, EveryFixtureValidatesExhaustively) {
  for (const auto& fx : all_fixtures()) {
    EXPECT_TRUE(fx.ctx->validated()) << fx.name;
    const ValidationReport embed = phi_embed_check(*fx.ctx);
    EXPECT_TRUE(embed.passed()) << fx.name;
    EXPECT_TRUE(embed.exhaustive) << fx.name;
  }
}

TEST(Twist, MutationWitnessesMatchHandComputation) {
  // delta(g) = 1, delta = 0 elsewhere, sigma = Id on GF(4):
  //   delta(1 + g) = delta(g + 1) = 0 but delta(1) + delta(g) = 1, first at (1, g);
  //   delta(g (g+1)) = delta(1) = 0 but g delta(g+1) + delta(g)(g+1) = g+1, first at (g, g+1).
  auto ctx = std::const_pointer_cast<TwistContext>(mutation_fixtures().front().ctx);
  const RingPtr& r = ctx->ring();
  const ValidationReport report = validate_twist(*ctx);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(ctx->state(), ValidationState::Failed);
  ASSERT_NE(report.find("delta_additive"), nullptr);
  EXPECT_EQ(report.find("delta_additive")->witness, elems(r, "1", "g"));
  EXPECT_EQ(report.find("delta_leibniz")->witness, elems(r, "g", "g+1"));
  EXPECT_TRUE(report.find("sigma_multiplicative")->passed);
  EXPECT_THROW(ctx->require_usable(), PreconditionError);
}

TEST(Twist, EveryMutationIsCaught) {
  for (auto& m : mutation_fixtures()) {
    auto ctx = std::const_pointer_cast<TwistContext>(m.ctx);
    const ValidationReport report = validate_twist(*ctx);
    EXPECT_FALSE(report.passed()) << m.name;
    bool witnessed = false;
    for (const auto& c : report.checks) witnessed = witnessed || (!c.passed && c.witness);
    EXPECT_TRUE(witnessed) << m.name;
  }
}

TEST(Twist, EmbeddingOfInnerFixture) {
  // sigma(g) = diag(g+1, g); delta(g) = (g g - (g+1) g, 0) = (g, 0).
  const ContextPtr ctx = gf4_inner();
  const RingPtr& r = ctx->ring();
  const Matrix m = phi_embed(*ctx, r->parse("g"));
  const Elem g = r->parse("g"), g1 = r->parse("g+1"), z = r->zero();
  EXPECT_EQ(m, Matrix(3, 3, std::vector<Elem>{g1, z, g, z, g, z, z, z, g}));
}

TEST(Twist, ConjugatedSigmaEntries) {
  // U diag(g+1, g) U^-1 with U = U^-1 = [[1,1],[0,1]] over F_2.
  const ContextPtr ctx = gf4_conjugated();
  const RingPtr& r = ctx->ring();
  const Matrix s = ctx->sigma(r->parse("g"));
  EXPECT_EQ(s, Matrix(2, 2, std::vector<Elem>{r->parse("g+1"), r->one(), r->zero(), r->parse("g")}));
  EXPECT_FALSE(ctx->sigma_is_diagonal());
}

TEST(Twist, ChangeOfVariablesDiagonalizes) {
  const ChangeOfVariables cov = change_of_variables(*gf4_conjugated());
  EXPECT_TRUE(cov.context->validated());
  EXPECT_TRUE(cov.context->sigma_is_diagonal());
  const RingPtr& r = cov.context->ring();
  EXPECT_EQ(cov.context->sigma_entry(0, 0, r->parse("g")), r->parse("g+1"));
  EXPECT_THROW(change_of_variables(*gf4_frob_id()), PreconditionError);
}

TEST(Twist, SingularUIsRejected) {
  const RingPtr r = make_gf(2, 2);
  Matrix u(2, 2, std::vector<Elem>{r->one(), r->one(), r->one(), r->one()});
  EXPECT_THROW(conjugated_sigma(u, {Endomorphism::identity(r), Endomorphism::identity(r)}),
               ValidationError);
}

TEST(Twist, PairGuardSamplesOrThrows) {
  const RingPtr r = make_gf(2, 4);
  Guards tight;
  tight.max_pairs = 64;
  auto ctx = TwistContext::build(r, diagonal_sigma({Endomorphism::frobenius(r, 1)}), zero_delta(),
                                 tight);
  EXPECT_THROW(validate_twist(*ctx), GuardExceeded);
  tight.sample_pairs = 200;
  ctx = TwistContext::build(r, diagonal_sigma({Endomorphism::frobenius(r, 1)}), zero_delta(),
                            tight);
  const ValidationReport report = validate_twist(*ctx);
  EXPECT_TRUE(report.passed());
  EXPECT_FALSE(report.exhaustive);
  EXPECT_EQ(ctx->state(), ValidationState::Sampled);
  EXPECT_FALSE(ctx->validated());
  EXPECT_NO_THROW(ctx->require_usable());
}

TEST(Twist, TableSigmaAndNonEndomorphism) {
  const RingPtr r = make_gf(2, 2);
  std::vector<Matrix> images;
  for (Elem a : enumerate(*r)) images.push_back(Matrix(1, 1, r->mul(a, a)));
  EXPECT_NO_THROW(make_context(r, table_sigma(images), zero_delta()));
  // a -> a^3 is not additive on GF(4).
  images.clear();
  for (Elem a : enumerate(*r)) images.push_back(Matrix(1, 1, r->pow(a, 3)));
  EXPECT_THROW(make_context(r, table_sigma(images), zero_delta()), ValidationError);
}

TEST(Twist, BlockGammaMustBeDerivation) {
  const RingPtr r = make_gf(2, 2);
  std::vector<Matrix> gamma;
  for (Elem a : enumerate(*r)) gamma.push_back(Matrix(1, 1, r->is_zero(a) ? a : r->one()));
  auto ctx = TwistContext::build(r,
                                 block_sigma(diagonal_sigma({Endomorphism::identity(r)}),
                                             diagonal_sigma({Endomorphism::identity(r)}),
                                             TableGamma{gamma}),
                                 zero_delta());
  const ValidationReport report = validate_twist(*ctx);
  ASSERT_NE(report.find("gamma_derivation"), nullptr);
  EXPECT_FALSE(report.find("gamma_derivation")->passed);
}

}  // namespace
}  // namespace orekit
