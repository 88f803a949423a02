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

// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact; the sample
// sizes and seeds below are the pinned tolerances.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "orekit/eval.hpp"
#include "orekit/modstruct.hpp"
#include "orekit/orepoly.hpp"
#include "orekit/structure.hpp"
#include "orekit/twist.hpp"

namespace {

using namespace orekit;
using namespace orekit::testing;

constexpr std::uint64_t kSeed = 20261014;
constexpr int kAxiomTriples = 1000;
constexpr int kEvalPairs = 1000;
constexpr int kProductTriples = 1000;
constexpr int kUnitTriples = 500;
constexpr int kSpecializationPairs = 200;
constexpr int kMinRootPolys = 10;
constexpr int kNonSolutionsPerPair = 8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure descriptions.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  std::uint64_t checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failures: " + notes_};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string notes_;
};

Outcome twist_validity() {
  Tally t;
  const auto fixtures = all_fixtures();
  std::set<RingKind> kinds;
  for (const auto& f : fixtures) {
    kinds.insert(f.ctx->ring()->kind());
    t.check(f.ctx->validated(), f.name + " not exhaustively validated");
    const ValidationReport embed = phi_embed_check(*f.ctx);
    t.check(embed.passed() && embed.exhaustive, f.name + " phi embedding");
  }
  t.check(kinds.size() == 4, "ring kinds covered: " + std::to_string(kinds.size()));
  std::size_t caught = 0;
  auto mutations = mutation_fixtures();
  for (auto& m : mutations) {
    auto ctx = std::const_pointer_cast<TwistContext>(m.ctx);
    const ValidationReport report = validate_twist(*ctx);
    bool witnessed = false;
    for (const auto& c : report.checks) witnessed = witnessed || (!c.passed && c.witness);
    t.check(!report.passed() && witnessed, m.name + " not caught with a witness");
    if (!report.passed() && witnessed) ++caught;
  }
  t.check(mutations.size() >= 5, "fewer than 5 mutations");
  return t.outcome(std::to_string(fixtures.size()) + " fixtures exhaustive, " +
                   std::to_string(caught) + "/" + std::to_string(mutations.size()) +
                   " mutations caught with witnesses");
}

Outcome ring_axioms() {
  Tally t;
  Rng rng(kSeed);
  const auto fixtures = all_fixtures();
  for (const auto& fx : fixtures) {
    for (int k = 0; k < kAxiomTriples; ++k) {
      const OrePoly f = random_poly(fx.ctx, rng), g = random_poly(fx.ctx, rng),
                    h = random_poly(fx.ctx, rng);
      t.check((f * g) * h == f * (g * h), fx.name + " associativity");
      t.check(f * (g + h) == f * g + f * h, fx.name + " left distributivity");
      t.check((f + g) * h == f * h + g * h, fx.name + " right distributivity");
    }
  }
  return t.outcome(std::to_string(kAxiomTriples) + " triples x " +
                   std::to_string(fixtures.size()) + " fixtures, exact");
}

Outcome evaluation_oracle() {
  Tally t;
  Rng rng(kSeed + 1);
  const auto fixtures = all_fixtures();
  for (const auto& fx : fixtures) {
    for (int k = 0; k < kEvalPairs; ++k) {
      const OrePoly f = random_poly(fx.ctx, rng, 4, 3);
      const Point a = random_point(*fx.ctx, rng);
      t.check(evaluate_pmt(f, a) == evaluate_reduce(f, a),
              fx.name + " f = " + print_poly(f) + " at " + print_point(*fx.ctx, a));
    }
  }
  return t.outcome(std::to_string(kEvalPairs) + " pairs x " + std::to_string(fixtures.size()) +
                   " fixtures (matrix ring included), exact");
}

Outcome product_formulas() {
  Tally t;
  Rng rng(kSeed + 2);
  std::size_t field_fixtures = 0;
  for (const auto& fx : all_fixtures()) {
    for (int k = 0; k < kProductTriples; ++k) {
      const OrePoly f = random_poly(fx.ctx, rng), g = random_poly(fx.ctx, rng);
      const auto [lhs, rhs] = product_formula_general(f, g, random_point(*fx.ctx, rng));
      t.check(lhs == rhs, fx.name + " general product formula");
    }
    if (!fx.ctx->ring()->is_field()) continue;
    ++field_fixtures;
    int done = 0;
    for (int attempt = 0; done < kUnitTriples && attempt < 50 * kUnitTriples; ++attempt) {
      const OrePoly f = random_poly(fx.ctx, rng), g = random_poly(fx.ctx, rng);
      const Point a = random_point(*fx.ctx, rng);
      if (fx.ctx->ring()->is_zero(evaluate_pmt(g, a))) continue;
      const auto [lhs, rhs] = product_formula_unit(f, g, a);
      t.check(lhs == rhs, fx.name + " unit product formula");
      ++done;
    }
    t.check(done == kUnitTriples, fx.name + " too few unit samples");
  }
  return t.outcome("general: " + std::to_string(kProductTriples) + " per fixture; unit: " +
                   std::to_string(kUnitTriples) + " per field fixture (" +
                   std::to_string(field_fixtures) + ")");
}

Outcome kernel_transport_check() {
  Tally t;
  std::uint64_t triples = 0;
  const std::vector<Fixture> gf4 = {{"gf4_frob_id", gf4_frob_id()},
                                    {"gf4_frob_frob", gf4_frob_frob()},
                                    {"gf4_identity", gf4_identity()},
                                    {"gf4_inner", gf4_inner()},
                                    {"gf4_conjugated", gf4_conjugated()},
                                    {"gf4_block", gf4_block()}};
  for (const auto& fx : gf4) {
    const TwistContext& ctx = *fx.ctx;
    const Ring& ring = *ctx.ring();
    const auto polys = binary_polys(fx.ctx, 2);
    const auto points = all_points(ctx);
    for (const Point& a : points) {
      for (const Point& b : points) {
        for (Elem x : all_elements(ring)) {
          if (ring.is_zero_divisor(x) || !is_zero(relation_residual(ctx, a, b, x))) continue;
          ++triples;
          for (Elem y : all_elements(ring)) {
            for (const OrePoly& f : polys) {
              const auto [lhs, rhs] = kernel_transport(f, a, b, x, y);
              t.check(lhs == rhs, fx.name + " f = " + print_poly(f));
            }
          }
        }
      }
    }
  }
  return t.outcome(std::to_string(triples) + " related (a,b,x) over 6 GF(4) fixtures, " +
                   std::to_string(t.checks()) + " identities");
}

Outcome center_check() {
  Tally t;
  // Independent scan: x with x^2 = x in the GF(4) product table (codes 0, 1, g, g+1).
  constexpr std::array<std::array<int, 4>, 4> kMul = {
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};
  std::vector<Elem> fixed;
  for (int x = 0; x < 4; ++x) {
    if (kMul[x][x] == x) fixed.push_back(Elem{static_cast<std::uint64_t>(x)});
  }
  t.check(fixed == std::vector<Elem>{Elem{0}, Elem{1}}, "oracle table scan");
  t.check(center_of_S(*gf4_frob_frob()) == fixed, "Frobenius-diagonal center");
  t.check(center_of_S(*gf4_frob_id()) == fixed, "diag(Frob, Id) center");
  t.check(center_of_S(*gf4_identity()) == all_elements(*gf4_identity()->ring()),
          "identity center");
  return t.outcome("Frobenius fixtures -> {0, 1}, identity fixture -> all 4");
}

Outcome semi_invariance() {
  Tally t;
  const ContextPtr ctx = gf4_frob_id();
  const auto cert = is_semi_invariant(parse_poly(ctx, "t1^2 + t2^2"));
  t.check(cert && cert->verified, "t1^2 + t2^2 not certified");
  const std::vector<Fixture> zero_delta = {{"gf4_frob_id", gf4_frob_id()},
                                           {"gf4_frob_frob", gf4_frob_frob()},
                                           {"gf4_identity", gf4_identity()},
                                           {"gf3_identity", gf3_identity()}};
  for (const auto& fx : zero_delta) {
    for (std::size_t i = 0; i < fx.ctx->n(); ++i) {
      const auto c = is_semi_invariant(OrePoly::variable(fx.ctx, i));
      t.check(c && c->verified, fx.name + " t" + std::to_string(i + 1));
      if (!c) continue;
      for (Elem a : all_elements(*fx.ctx->ring())) {
        t.check(c->phi[a.code] == fx.ctx->sigma_entry(i, i, a), fx.name + " phi != sigma_i");
      }
    }
  }

  std::uint64_t candidates = 0, certified = 0, hypothesis = 0;
  const std::vector<Fixture> diagonal = {{"gf4_frob_id", gf4_frob_id()},
                                         {"gf4_frob_frob", gf4_frob_frob()},
                                         {"gf4_identity", gf4_identity()},
                                         {"gf4_inner", gf4_inner()}};
  for (const auto& fx : diagonal) {
    for (std::uint16_t i = 0; i < 2; ++i) {
      for (std::uint64_t code = 1; code < 256; ++code) {
        OrePoly p(fx.ctx);
        for (std::size_t k = 0; k < 4; ++k) p.add_term(Word(k, i), Elem{code >> (2 * k) & 3});
        ++candidates;
        const auto c = is_semi_invariant(p);
        const bool is_cert = c && c->verified;
        const OperatorCheck op = semiinvariant_operator_check(p);
        certified += is_cert;
        hypothesis += op.hypothesis_verified;
        t.check(!is_cert || op.identity_holds, fx.name + " certified but identity fails: " +
                                                   print_poly(p));
        if (op.hypothesis_verified) {
          t.check(is_cert == op.identity_holds, fx.name + " disagreement: " + print_poly(p));
        }
      }
    }
  }
  return t.outcome("t1^2+t2^2 and every t_i certified; " + std::to_string(candidates) +
                   " univariate candidates, " + std::to_string(certified) + " certified, " +
                   std::to_string(hypothesis) + " with the hypothesis verified, no disagreement");
}

Outcome root_structure() {
  Tally t;
  const std::vector<std::string> common = {
      "t1",          "t2 + 1",        "t1^2 + t2^2", "t1*t2 + 1",       "t1^2 + t1",
      "t1*t2 + t2*t1", "t1^3 + 1",    "t1 - t2",     "t2^2 - t1",       "t1*t2*t1 + t2",
      "t1^2*t2 - 1", "t2*t1 + t1 + t2"};
  const std::vector<Fixture> fields = {{"gf4_frob_id", gf4_frob_id()},
                                       {"gf4_inner", gf4_inner()},
                                       {"gf3_identity", gf3_identity()}};
  std::size_t decompositions = 0, closures = 0;
  for (const auto& fx : fields) {
    int polys = 0;
    for (const std::string& text : common) {
      const RootClassReport rep = class_decomposition(parse_poly(fx.ctx, text));
      t.check(rep.coverage, fx.name + " coverage " + text);
      t.check(rep.module_closure, fx.name + " closure " + text);
      t.check(rep.kernel_criterion && rep.slice_exact, fx.name + " kernel/slice " + text);
      ++polys;
      ++decompositions;
    }
    t.check(polys >= kMinRootPolys, fx.name + " too few polynomials");
    for (const auto& cert : find_semi_invariants(fx.ctx, 2)) {
      t.check(semiinvariant_root_closure(cert).holds, fx.name + " closure " + print_poly(cert.p));
      ++closures;
    }
  }
  return t.outcome(std::to_string(decompositions) + " decompositions covered and closed; " +
                   std::to_string(closures) + " semi-invariants Delta-closed");
}

Outcome module_consistency() {
  Tally t;
  Rng rng(kSeed + 3);
  std::uint64_t points = 0, solutions = 0, rejected = 0;
  const std::vector<Fixture> fixtures = {{"gf4_frob_id", gf4_frob_id()},
                                         {"gf4_inner", gf4_inner()},
                                         {"gf3_identity", gf3_identity()}};
  for (const auto& fx : fixtures) {
    const TwistContext& ctx = *fx.ctx;
    const auto all = all_points(ctx);
    for (const Point& a : all) {
      const ModulePresentation pa = module_from_point(fx.ctx, a);
      const Point b = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const ModulePresentation pb = module_from_point(fx.ctx, b);
      const HomSolution sol = hom_solve(pa, pa);
      t.check(sol.count && *sol.count == centralizer(ctx, a).elements.size(),
              fx.name + " count at " + print_point(ctx, a));
      ++points;
      for (const auto& [p1, p2] : {std::pair{&pa, &pa}, std::pair{&pa, &pb}}) {
        const auto sols = all_solutions(hom_solve(*p1, *p2), ctx);
        for (const Matrix& m : sols) {
          const HomCheck hc = is_module_hom(m, *p1, *p2);
          t.check(hc.holds() && hc.condition_ii_checked, fx.name + " solution fails (ii)");
          ++solutions;
        }
        for (int k = 0; k < kNonSolutionsPerPair; ++k) {
          Matrix m(1, 1, random_elem(*ctx.ring(), rng));
          if (std::find(sols.begin(), sols.end(), m) != sols.end()) continue;
          const HomCheck hc = is_module_hom(m, *p1, *p2);
          t.check(!hc.condition_ii && hc.witness_u.has_value(),
                  fx.name + " non-solution passes (ii)");
          ++rejected;
        }
      }
    }
  }
  return t.outcome(std::to_string(points) + " points: |Hom(P_a,P_a)| = |C(a)|; " +
                   std::to_string(solutions) + " solutions pass (ii); " +
                   std::to_string(rejected) + " non-solutions fail with witnesses");
}

Outcome fixture_regressions() {
  Tally t;
  t.check(delta_square_kernel_demo(*trunc2_derivative()), "delta^2 = 0 demo");

  Rng rng(kSeed + 4);
  const ContextPtr source = gf4_block();
  const ContextPtr target = univariate_target(*source);
  for (int k = 0; k < kSpecializationPairs; ++k) {
    const OrePoly f = random_poly(source, rng), g = random_poly(source, rng);
    t.check(univariate_specialize(f * g, target) ==
                univariate_specialize(f, target) * univariate_specialize(g, target),
            "specialization not multiplicative");
  }

  std::uint64_t erasures = 0;
  for (const auto& [name, ctx, point] :
       {std::tuple{"gf4_inner", gf4_inner(), std::get<InnerDelta>(gf4_inner()->delta_spec().spec).point},
        std::tuple{"mat2_inner", mat2_inner(), std::get<InnerDelta>(mat2_inner()->delta_spec().spec).point}}) {
    for (Elem x : all_elements(*ctx->ring())) {
      for (std::size_t i = 0; i < ctx->n(); ++i) {
        const OrePoly lhs = (OrePoly::variable(ctx, i) - OrePoly::constant(ctx, point[i])) *
                            OrePoly::constant(ctx, x);
        OrePoly rhs(ctx);
        for (std::size_t j = 0; j < ctx->n(); ++j) {
          rhs = rhs + OrePoly::constant(ctx, ctx->sigma_entry(i, j, x)) *
                          (OrePoly::variable(ctx, j) - OrePoly::constant(ctx, point[j]));
        }
        t.check(lhs == rhs, std::string(name) + " erasure identity");
        ++erasures;
      }
    }
  }
  return t.outcome("delta^2 kernel demo true; " + std::to_string(kSpecializationPairs) +
                   " specialization pairs; " + std::to_string(erasures) +
                   " erasure identities exact");
}

struct RunResult {
  int status = -1;
  std::string output;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

RunResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(OREKIT_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome cli_determinism() {
  Tally t;
  const std::string dir = OREKIT_CONFIG_DIR;
  auto cfg = [&](const char* name) { return dir + "/" + name; };
  struct Case {
    std::vector<std::string> args;
    int expected;
  };
  std::vector<Case> suite;
  for (const char* name :
       {"gf4_frob_id.json", "gf4_frob_frob.json", "gf4_identity.json", "gf4_inner.json",
        "gf4_conjugated.json", "gf4_block.json", "gf3_identity.json", "zmod6_identity.json",
        "trunc2_derivative.json", "trunc3_substitution.json", "mat2_inner.json"}) {
    suite.push_back({{"validate", "--config", cfg(name)}, 0});
    suite.push_back({{"center", "--config", cfg(name)}, 0});
    suite.push_back({{"eval", "--config", cfg(name), "--poly", "t1*t2 + t2^2", "--point", "(1, 1)"}, 0});
    suite.push_back({{"roots", "--config", cfg(name), "--poly", "t1*t2 - 1"}, 0});
    suite.push_back({{"centralizer", "--config", cfg(name), "--point", "(1, 0)"}, 0});
    suite.push_back({{"semi-find", "--config", cfg(name), "--max-len", "1"}, 0});
    suite.push_back({{"hom", "--config", cfg(name), "--source", R"({"point": [1, 0]})",
                      "--target", R"({"point": [1, 0]})"}, 0});
    suite.push_back({{"related", "--config", cfg(name), "--point", "(1, 0)", "--other", "(1, 1)"}, 0});
    suite.push_back({{"conj", "--config", cfg(name), "--point", "(1, 0)", "--element", "1"}, 0});
  }
  const std::string gf4 = cfg("gf4_frob_id.json");
  suite.push_back({{"classes", "--config", gf4, "--poly", "t1^2 + t2^2"}, 0});
  suite.push_back({{"classes", "--config", gf4, "--poly", "t1^2 + t2^2", "--out", "text"}, 0});
  suite.push_back({{"semi-check", "--config", gf4, "--poly", "t1^2 + t2^2"}, 0});
  suite.push_back({{"semi-check", "--config", gf4, "--poly", "t1^2"}, 0});
  suite.push_back({{"classes", "--config", cfg("zmod6_identity.json"), "--poly", "t1"}, 1});
  suite.push_back({{"conj", "--config", gf4, "--point", "(g, 0)", "--element", "0"}, 1});
  suite.push_back({{"frobnicate", "--config", gf4}, 1});
  suite.push_back({{"validate", "--config", cfg("bad_leibniz.json")}, 2});
  suite.push_back({{"validate", "--config", cfg("bad_modulus.json")}, 2});
  suite.push_back({{"validate", "--config", cfg("bad_schema.json")}, 2});
  suite.push_back({{"semi-find", "--config", cfg("tight_guard.json"), "--max-len", "3"}, 3});
  suite.push_back({{"eval", "--config", gf4, "--poly", "t1*(", "--point", "(g, 0)"}, 4});
  suite.push_back({{"eval", "--config", gf4, "--poly", "t1", "--point", "(q, 0)"}, 4});

  std::set<int> codes;
  for (const Case& c : suite) {
    const RunResult first = run_cli(c.args);
    const RunResult second = run_cli(c.args);
    const std::string label = c.args[0] + " " + c.args[2];
    t.check(first.status == c.expected,
            label + " exit " + std::to_string(first.status) + " != " + std::to_string(c.expected));
    t.check(first.output == second.output && first.status == second.status,
            label + " not byte-identical");
    codes.insert(first.status);
  }
  t.check(codes == std::set<int>{0, 1, 2, 3, 4}, "not every exit code exercised");
  return t.outcome(std::to_string(suite.size()) +
                   " invocations byte-identical across two runs; exit codes 0-4 exercised");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"twist validity", twist_validity},
      {"ring axioms in S", ring_axioms},
      {"evaluation oracle equivalence", evaluation_oracle},
      {"product formulas", product_formulas},
      {"kernel transport", kernel_transport_check},
      {"center", center_check},
      {"semi-invariance", semi_invariance},
      {"root structure", root_structure},
      {"module/hom consistency", module_consistency},
      {"fixture regressions", fixture_regressions},
      {"cli determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << (k + 1) << ". " << criteria[k].first
              << ": " << out.detail << " (" << std::fixed << std::setprecision(2) << secs
              << " s)\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
