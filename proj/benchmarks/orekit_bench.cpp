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

#include <benchmark/benchmark.h>

#include <random>

#include "orekit/eval.hpp"
#include "orekit/modstruct.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/structure.hpp"
#include "orekit/twist.hpp"

namespace {

using namespace orekit;

ContextPtr frob_inner(unsigned k) {
  const RingPtr r = make_gf(2, k);
  return make_context(r,
                      diagonal_sigma({Endomorphism::frobenius(r, 1), Endomorphism::identity(r)}),
                      inner_delta({r->generator(), r->one()}));
}

OrePoly random_poly(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t len,
                    std::size_t terms) {
  OrePoly f(ctx);
  std::uniform_int_distribution<std::uint64_t> coeff(0, ctx->ring()->cardinality() - 1);
  std::uniform_int_distribution<std::size_t> letter(0, ctx->n() - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Word w(len);
    for (auto& l : w) l = letter(rng);
    f = f + OrePoly::monomial(ctx, ctx->ring()->element_at(coeff(rng)), w);
  }
  return f;
}

void BM_PolyMul(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(4);
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const OrePoly f = random_poly(ctx, rng, len, 4);
  const OrePoly g = random_poly(ctx, rng, len, 4);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolyMul)->DenseRange(1, 4);

void BM_EvaluatePmt(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(4);
  std::mt19937_64 rng(2);
  const OrePoly f = random_poly(ctx, rng, static_cast<std::size_t>(state.range(0)), 8);
  const Point a = parse_point(*ctx, "(g, g+1)");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_pmt(f, a));
}
BENCHMARK(BM_EvaluatePmt)->DenseRange(2, 8, 2);

void BM_EvaluateReduce(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(4);
  std::mt19937_64 rng(2);
  const OrePoly f = random_poly(ctx, rng, static_cast<std::size_t>(state.range(0)), 8);
  const Point a = parse_point(*ctx, "(g, g+1)");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_reduce(f, a));
}
BENCHMARK(BM_EvaluateReduce)->DenseRange(2, 8, 2);

void BM_HomSolve(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(static_cast<unsigned>(state.range(0)));
  const Point a = parse_point(*ctx, "(1, g)");
  const auto m = module_from_point(ctx, a);
  for (auto _ : state) benchmark::DoNotOptimize(hom_solve(m, m));
}
BENCHMARK(BM_HomSolve)->DenseRange(2, 6, 2);

void BM_ClassDecomposition(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(static_cast<unsigned>(state.range(0)));
  const OrePoly f = parse_poly(ctx, "t1^2 + t2^2 + g*t1");
  for (auto _ : state) benchmark::DoNotOptimize(class_decomposition(f));
}
BENCHMARK(BM_ClassDecomposition)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_FindSemiInvariants(benchmark::State& state) {
  const ContextPtr ctx = frob_inner(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_semi_invariants(ctx, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_FindSemiInvariants)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
