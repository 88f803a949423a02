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

#include "orekit/twist.hpp"

#include <functional>
#include <random>

#include "orekit/error.hpp"

namespace orekit {
namespace {

constexpr std::uint64_t kCacheCardinality = 4096;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using SigmaFn = std::function<Matrix(Elem)>;

Matrix eval_sigma(const Ring& ring, const SigmaSpec& spec, Elem a);

Matrix eval_gamma(const Ring& ring, const GammaSpec& spec, const Matrix& alpha,
                  const Matrix& beta, Elem a) {
  return std::visit(
      overloaded{
          [&](const ZeroGamma&) { return Matrix(alpha.rows(), beta.cols(), ring.zero()); },
          [&](const InnerGamma& g) {
            return sub(ring, mul(ring, g.x, beta), mul(ring, alpha, g.x));
          },
          [&](const TableGamma& g) { return g.images[a.code]; },
      },
      spec);
}

Matrix eval_sigma(const Ring& ring, const SigmaSpec& spec, Elem a) {
  return std::visit(
      overloaded{
          [&](const DiagonalSigma& s) {
            Column d(s.endos.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = s.endos[i].apply(a);
            return Matrix::diagonal(d);
          },
          [&](const ConjugatedSigma& s) {
            Column d(s.endos.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = s.endos[i].apply(a);
            return mul(ring, mul(ring, s.u, Matrix::diagonal(d)), s.u_inv);
          },
          [&](const BlockSigma& s) {
            const Matrix al = eval_sigma(ring, *s.alpha, a);
            const Matrix be = eval_sigma(ring, *s.beta, a);
            const Matrix ga = eval_gamma(ring, s.gamma, al, be, a);
            const std::size_t n1 = al.rows(), n2 = be.rows();
            Matrix out(n1 + n2, n1 + n2, ring.zero());
            for (std::size_t r = 0; r < n1; ++r) {
              for (std::size_t c = 0; c < n1; ++c) out(r, c) = al(r, c);
              for (std::size_t c = 0; c < n2; ++c) out(r, n1 + c) = ga(r, c);
            }
            for (std::size_t r = 0; r < n2; ++r) {
              for (std::size_t c = 0; c < n2; ++c) out(n1 + r, n1 + c) = be(r, c);
            }
            return out;
          },
          [&](const TableSigma& s) { return s.images[a.code]; },
      },
      spec.spec);
}

Column eval_delta(const Ring& ring, const DeltaSpec& spec, std::size_t n, const SigmaFn& sigma,
                  Elem a) {
  return std::visit(
      overloaded{
          [&](const ZeroDelta&) { return Column(n, ring.zero()); },
          [&](const InnerDelta& d) {
            return sub(ring, mul_right(ring, d.point, a), mul(ring, sigma(a), d.point));
          },
          [&](const CoordinateDelta& d) {
            Column out(n);
            for (std::size_t i = 0; i < n; ++i) {
              out[i] = std::visit(overloaded{
                                      [&](const ZeroMap&) { return ring.zero(); },
                                      [&](const DerivativeMap&) { return formal_derivative(ring, a); },
                                      [&](const TableMap& t) { return t.values[a.code]; },
                                  },
                                  d.maps[i]);
            }
            return out;
          },
          [&](const TransformedDelta& d) {
            Column base;
            if (d.base_sigma) {
              const SigmaSpec& bs = *d.base_sigma;
              base = eval_delta(ring, *d.base, n, [&](Elem x) { return eval_sigma(ring, bs, x); }, a);
            } else {
              base = eval_delta(ring, *d.base, n, sigma, a);
            }
            return mul(ring, d.v, base);
          },
      },
      spec.spec);
}

void check_matrix(const Ring& ring, const Matrix& m, std::size_t rows, std::size_t cols,
                  const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ValidationError(what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                          ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  for (Elem e : m.data()) ring.check_element(e);
}

void check_table_size(const Ring& ring, std::size_t size, const Guards& guards,
                      const std::string& what) {
  if (ring.cardinality() > guards.max_ring_card) {
    throw GuardExceeded(what + ": table specs need a ring under the enumeration guard");
  }
  if (size != ring.cardinality()) {
    throw ValidationError(what + " must list " + std::to_string(ring.cardinality()) +
                          " images, got " + std::to_string(size));
  }
}

void check_endos(const Ring& ring, const std::vector<Endomorphism>& endos) {
  if (endos.empty()) throw ValidationError("sigma needs at least one endomorphism");
  for (const auto& e : endos) {
    if (!e.ring()->same_descriptor(ring)) {
      throw MismatchError("endomorphism over " + e.ring()->describe() + " used with " +
                          ring.describe());
    }
  }
}

void check_sigma(const Ring& ring, const SigmaSpec& spec, const Guards& guards) {
  std::visit(overloaded{
                 [&](const DiagonalSigma& s) { check_endos(ring, s.endos); },
                 [&](const ConjugatedSigma& s) {
                   check_endos(ring, s.endos);
                   check_matrix(ring, s.u, s.endos.size(), s.endos.size(), "U");
                   check_matrix(ring, s.u_inv, s.endos.size(), s.endos.size(), "U^-1");
                 },
                 [&](const BlockSigma& s) {
                   if (!s.alpha || !s.beta) throw ValidationError("block sigma needs alpha and beta");
                   check_sigma(ring, *s.alpha, guards);
                   check_sigma(ring, *s.beta, guards);
                   const std::size_t n1 = sigma_size(*s.alpha), n2 = sigma_size(*s.beta);
                   std::visit(overloaded{
                                  [](const ZeroGamma&) {},
                                  [&](const InnerGamma& g) { check_matrix(ring, g.x, n1, n2, "gamma x"); },
                                  [&](const TableGamma& g) {
                                    check_table_size(ring, g.images.size(), guards, "gamma table");
                                    for (const auto& m : g.images) check_matrix(ring, m, n1, n2, "gamma image");
                                  },
                              },
                              s.gamma);
                 },
                 [&](const TableSigma& s) {
                   check_table_size(ring, s.images.size(), guards, "sigma table");
                   const std::size_t n = s.images.front().rows();
                   for (const auto& m : s.images) check_matrix(ring, m, n, n, "sigma image");
                 },
             },
             spec.spec);
}

void check_delta(const Ring& ring, const DeltaSpec& spec, std::size_t n, const Guards& guards) {
  std::visit(
      overloaded{
          [](const ZeroDelta&) {},
          [&](const InnerDelta& d) {
            if (d.point.size() != n) {
              throw ValidationError("inner delta point must have " + std::to_string(n) + " entries");
            }
            for (Elem e : d.point) ring.check_element(e);
          },
          [&](const CoordinateDelta& d) {
            if (d.maps.size() != n) {
              throw ValidationError("coordinate delta needs " + std::to_string(n) + " maps, got " +
                                    std::to_string(d.maps.size()));
            }
            for (const auto& m : d.maps) {
              if (std::holds_alternative<DerivativeMap>(m)) {
                (void)formal_derivative(ring, ring.one());
              } else if (const auto* t = std::get_if<TableMap>(&m)) {
                check_table_size(ring, t->values.size(), guards, "delta table");
                for (Elem e : t->values) ring.check_element(e);
              }
            }
          },
          [&](const TransformedDelta& d) {
            check_matrix(ring, d.v, n, n, "transforming matrix");
            if (!d.base) throw ValidationError("transformed delta needs a base");
            if (d.base_sigma) {
              check_sigma(ring, *d.base_sigma, guards);
              if (sigma_size(*d.base_sigma) != n) throw ValidationError("base sigma size mismatch");
            }
            check_delta(ring, *d.base, n, guards);
          },
      },
      spec.spec);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Spec constructors

SigmaSpec diagonal_sigma(std::vector<Endomorphism> endos) {
  return SigmaSpec{DiagonalSigma{std::move(endos)}};
}

SigmaSpec conjugated_sigma(Matrix u, std::vector<Endomorphism> endos) {
  if (endos.empty()) throw ValidationError("conjugated sigma needs at least one endomorphism");
  const Ring& ring = *endos.front().ring();
  if (u.rows() != endos.size() || u.cols() != endos.size()) {
    throw ValidationError("U must be " + std::to_string(endos.size()) + "x" +
                          std::to_string(endos.size()));
  }
  auto inv = inverse(ring, u);
  if (!inv) throw ValidationError("U = " + print_matrix(ring, u) + " is not invertible");
  return SigmaSpec{ConjugatedSigma{std::move(u), std::move(*inv), std::move(endos)}};
}

SigmaSpec block_sigma(SigmaSpec alpha, SigmaSpec beta, GammaSpec gamma) {
  return SigmaSpec{BlockSigma{std::make_shared<const SigmaSpec>(std::move(alpha)),
                              std::make_shared<const SigmaSpec>(std::move(beta)),
                              std::move(gamma)}};
}

SigmaSpec table_sigma(std::vector<Matrix> images) {
  if (images.empty()) throw ValidationError("sigma table is empty");
  return SigmaSpec{TableSigma{std::move(images)}};
}

DeltaSpec zero_delta() { return DeltaSpec{ZeroDelta{}}; }
DeltaSpec inner_delta(Column point) { return DeltaSpec{InnerDelta{std::move(point)}}; }
DeltaSpec coordinate_delta(std::vector<CoordinateMap> maps) {
  return DeltaSpec{CoordinateDelta{std::move(maps)}};
}

DeltaSpec transformed_delta(Matrix v, DeltaSpec base, std::optional<SigmaSpec> base_sigma) {
  TransformedDelta t{std::move(v), std::make_shared<const DeltaSpec>(std::move(base)), nullptr};
  if (base_sigma) t.base_sigma = std::make_shared<const SigmaSpec>(std::move(*base_sigma));
  return DeltaSpec{std::move(t)};
}

std::size_t sigma_size(const SigmaSpec& spec) {
  return std::visit(overloaded{
                        [](const DiagonalSigma& s) { return s.endos.size(); },
                        [](const ConjugatedSigma& s) { return s.endos.size(); },
                        [](const BlockSigma& s) { return sigma_size(*s.alpha) + sigma_size(*s.beta); },
                        [](const TableSigma& s) { return s.images.front().rows(); },
                    },
                    spec.spec);
}

const char* to_string(ValidationState state) {
  switch (state) {
    case ValidationState::Unvalidated:
      return "unvalidated";
    case ValidationState::Sampled:
      return "sampled";
    case ValidationState::Exhaustive:
      return "exhaustive";
    case ValidationState::Failed:
      return "failed";
  }
  return "unvalidated";
}

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const LawCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------------------------
// TwistContext

std::shared_ptr<TwistContext> TwistContext::build(RingPtr ring, SigmaSpec sigma, DeltaSpec delta,
                                                  Guards guards) {
  if (!ring) throw ValidationError("twist context needs a ring");
  check_sigma(*ring, sigma, guards);
  const std::size_t n = sigma_size(sigma);
  if (n < 1) throw ValidationError("twist context needs n >= 1");
  check_delta(*ring, delta, n, guards);

  std::shared_ptr<TwistContext> ctx(new TwistContext());
  ctx->ring_ = std::move(ring);
  ctx->n_ = n;
  ctx->sigma_ = std::move(sigma);
  ctx->delta_ = std::move(delta);
  ctx->guards_ = guards;

  const Ring& r = *ctx->ring_;
  const std::uint64_t card = r.cardinality();
  if (card <= kCacheCardinality) {
    ctx->sigma_cache_.reserve(card);
    for (std::uint64_t c = 0; c < card; ++c) ctx->sigma_cache_.push_back(ctx->sigma_raw(Elem{c}));
    ctx->delta_cache_.reserve(card);
    for (std::uint64_t c = 0; c < card; ++c) ctx->delta_cache_.push_back(ctx->delta_raw(Elem{c}));
  }

  if (card <= guards.max_ring_card) {
    bool diag = true, zero = true;
    for (Elem a : enumerate(r, guards.max_ring_card)) {
      const Matrix s = ctx->sigma(a);
      for (std::size_t i = 0; i < n && diag; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j && !r.is_zero(s(i, j))) {
            diag = false;
            break;
          }
        }
      }
      if (zero && !is_zero(ctx->delta(a))) zero = false;
      if (!diag && !zero) break;
    }
    ctx->diagonal_ = diag;
    ctx->delta_zero_ = zero;
  } else {
    ctx->diagonal_ = std::holds_alternative<DiagonalSigma>(ctx->sigma_.spec);
    ctx->delta_zero_ = std::holds_alternative<ZeroDelta>(ctx->delta_.spec);
  }
  return ctx;
}

void TwistContext::require_usable() const {
  if (state_ != ValidationState::Exhaustive && state_ != ValidationState::Sampled) {
    throw PreconditionError(std::string("twist context is ") + to_string(state_) +
                            "; run validate_twist first");
  }
}

Matrix TwistContext::sigma_raw(Elem a) const { return eval_sigma(*ring_, sigma_, a); }

Column TwistContext::delta_raw(Elem a) const {
  return eval_delta(*ring_, delta_, n_, [this](Elem x) { return sigma(x); }, a);
}

Matrix TwistContext::sigma(Elem a) const {
  if (!sigma_cache_.empty()) return sigma_cache_[a.code];
  return sigma_raw(a);
}

Elem TwistContext::sigma_entry(std::size_t i, std::size_t j, Elem a) const {
  if (!sigma_cache_.empty()) return sigma_cache_[a.code](i, j);
  return sigma_raw(a)(i, j);
}

Column TwistContext::delta(Elem a) const {
  if (!delta_cache_.empty()) return delta_cache_[a.code];
  return delta_raw(a);
}

Elem TwistContext::delta_entry(std::size_t i, Elem a) const {
  if (!delta_cache_.empty()) return delta_cache_[a.code][i];
  return delta_raw(a)[i];
}

// ---------------------------------------------------------------------------------------------
// Validation

namespace {

// Runs `visit(a, b)` over every pair in code order, or over a seeded sample.
template <class Visit>
void for_pairs(const Ring& ring, const Guards& guards, ValidationReport& report, Visit visit) {
  const std::uint64_t card = ring.cardinality();
  if (card <= guards.max_pairs / card) {
    report.exhaustive = true;
    for (std::uint64_t a = 0; a < card; ++a) {
      for (std::uint64_t b = 0; b < card; ++b) visit(Elem{a}, Elem{b});
    }
    report.pairs_checked = card * card;
    return;
  }
  if (guards.sample_pairs == 0) {
    throw GuardExceeded(ring.describe() + ": " + std::to_string(card) +
                        "^2 pairs exceed the pair guard " + std::to_string(guards.max_pairs) +
                        " and no sample budget was supplied");
  }
  report.exhaustive = false;
  std::mt19937_64 rng(guards.sample_seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, card - 1);
  for (std::uint64_t s = 0; s < guards.sample_pairs; ++s) {
    const Elem a{pick(rng)};
    const Elem b{pick(rng)};
    visit(a, b);
  }
  report.pairs_checked = guards.sample_pairs;
}

void fail(LawCheck& check, const Ring& ring, Elem a, Elem b, const std::string& detail) {
  if (!check.passed) return;
  check.passed = false;
  check.witness = std::make_pair(a, b);
  check.detail = "(" + ring.print(a) + ", " + ring.print(b) + "): " + detail;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  }
  return out;
}

}  // namespace

ValidationReport validate_twist(TwistContext& ctx) {
  const Ring& ring = *ctx.ring();
  const std::size_t n = ctx.n();
  ValidationReport report;
  LawCheck unital;
  unital.name = "sigma_unital";
  LawCheck s_add;
  s_add.name = "sigma_additive";
  LawCheck s_mul;
  s_mul.name = "sigma_multiplicative";
  LawCheck d_add;
  d_add.name = "delta_additive";
  LawCheck d_leib;
  d_leib.name = "delta_leibniz";

  const Matrix id = Matrix::identity(ring, n);
  if (ctx.sigma(ring.one()) != id) {
    unital.passed = false;
    unital.detail = "sigma(1) = " + print_matrix(ring, ctx.sigma(ring.one()));
  }

  const BlockSigma* blk = std::get_if<BlockSigma>(&ctx.sigma_spec().spec);
  const std::size_t n1 = blk ? sigma_size(*blk->alpha) : 0;
  LawCheck gamma;
  gamma.name = "gamma_derivation";

  try {
    for_pairs(ring, ctx.guards(), report, [&](Elem a, Elem b) {
      const Matrix sa = ctx.sigma(a), sb = ctx.sigma(b);
      const Column da = ctx.delta(a), db = ctx.delta(b);
      const Elem sum = ring.add(a, b), prod = ring.mul(a, b);
      if (s_add.passed && ctx.sigma(sum) != add(ring, sa, sb)) {
        fail(s_add, ring, a, b, "sigma(a+b) != sigma(a)+sigma(b)");
      }
      if (s_mul.passed && ctx.sigma(prod) != mul(ring, sa, sb)) {
        fail(s_mul, ring, a, b, "sigma(ab) != sigma(a)sigma(b)");
      }
      if (d_add.passed && ctx.delta(sum) != add(ring, da, db)) {
        fail(d_add, ring, a, b,
             "delta(a+b) = " + print_column(ring, ctx.delta(sum)) + " but delta(a)+delta(b) = " +
                 print_column(ring, add(ring, da, db)));
      }
      if (d_leib.passed) {
        const Column rhs = add(ring, mul(ring, sa, db), mul_right(ring, da, b));
        const Column lhs = ctx.delta(prod);
        if (lhs != rhs) {
          fail(d_leib, ring, a, b,
               "delta(ab) = " + print_column(ring, lhs) + " but sigma(a)delta(b)+delta(a)b = " +
                   print_column(ring, rhs));
        }
      }
      if (blk && gamma.passed) {
        const std::size_t n2 = n - n1;
        const Matrix ga = block(sa, 0, n1, n1, n2), gb = block(sb, 0, n1, n1, n2);
        const Matrix gs = block(ctx.sigma(sum), 0, n1, n1, n2);
        const Matrix gp = block(ctx.sigma(prod), 0, n1, n1, n2);
        const Matrix rhs = add(ring, mul(ring, block(sa, 0, 0, n1, n1), gb),
                               mul(ring, ga, block(sb, n1, n1, n2, n2)));
        if (gs != add(ring, ga, gb)) fail(gamma, ring, a, b, "gamma(a+b) != gamma(a)+gamma(b)");
        else if (gp != rhs) fail(gamma, ring, a, b, "gamma(ab) != alpha(a)gamma(b)+gamma(a)beta(b)");
      }
    });
  } catch (const GuardExceeded&) {
    ctx.state_ = ValidationState::Unvalidated;
    throw;
  }

  report.checks = {unital, s_add, s_mul, d_add, d_leib};
  if (blk) report.checks.push_back(gamma);
  if (!report.passed()) {
    ctx.state_ = ValidationState::Failed;
  } else {
    ctx.state_ = report.exhaustive ? ValidationState::Exhaustive : ValidationState::Sampled;
  }
  return report;
}

Matrix phi_embed(const TwistContext& ctx, Elem a) {
  const Ring& ring = *ctx.ring();
  const std::size_t n = ctx.n();
  const Matrix s = ctx.sigma(a);
  const Column d = ctx.delta(a);
  Matrix out(n + 1, n + 1, ring.zero());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = s(r, c);
    out(r, n) = d[r];
  }
  out(n, n) = a;
  return out;
}

ValidationReport phi_embed_check(const TwistContext& ctx) {
  const Ring& ring = *ctx.ring();
  ValidationReport report;
  LawCheck unital;
  unital.name = "phi_unital";
  LawCheck p_add;
  p_add.name = "phi_additive";
  LawCheck p_mul;
  p_mul.name = "phi_multiplicative";
  if (phi_embed(ctx, ring.one()) != Matrix::identity(ring, ctx.n() + 1)) {
    unital.passed = false;
    unital.detail = "phi(1) = " + print_matrix(ring, phi_embed(ctx, ring.one()));
  }
  for_pairs(ring, ctx.guards(), report, [&](Elem a, Elem b) {
    const Matrix pa = phi_embed(ctx, a), pb = phi_embed(ctx, b);
    if (p_add.passed && phi_embed(ctx, ring.add(a, b)) != add(ring, pa, pb)) {
      fail(p_add, ring, a, b, "phi(a+b) != phi(a)+phi(b)");
    }
    if (p_mul.passed) {
      const Matrix lhs = phi_embed(ctx, ring.mul(a, b));
      const Matrix rhs = mul(ring, pa, pb);
      if (lhs != rhs) {
        fail(p_mul, ring, a, b,
             "phi(ab) = " + print_matrix(ring, lhs) + " but phi(a)phi(b) = " +
                 print_matrix(ring, rhs));
      }
    }
  });
  report.checks = {unital, p_add, p_mul};
  return report;
}

ContextPtr make_context(RingPtr ring, SigmaSpec sigma, DeltaSpec delta, Guards guards) {
  auto ctx = TwistContext::build(std::move(ring), std::move(sigma), std::move(delta), guards);
  const ValidationReport report = validate_twist(*ctx);
  for (const auto& c : report.checks) {
    if (!c.passed) throw ValidationError("twist validation failed: " + c.name + " " + c.detail);
  }
  return ctx;
}

ChangeOfVariables change_of_variables(const TwistContext& ctx) {
  const auto* conj = std::get_if<ConjugatedSigma>(&ctx.sigma_spec().spec);
  if (!conj) throw PreconditionError("change_of_variables needs a conjugated sigma");
  auto next = TwistContext::build(ctx.ring(), diagonal_sigma(conj->endos),
                                  transformed_delta(conj->u_inv, ctx.delta_spec(), ctx.sigma_spec()),
                                  ctx.guards());
  const ValidationReport report = validate_twist(*next);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) throw ValidationError("changed context fails " + c.name + " " + c.detail);
    }
  }
  return {next, conj->u};
}

// ---------------------------------------------------------------------------------------------
// Descriptions

std::string describe_sigma(const Ring& ring, const SigmaSpec& spec) {
  auto endo_list = [](const std::vector<Endomorphism>& endos) {
    std::string out;
    for (std::size_t i = 0; i < endos.size(); ++i) {
      if (i > 0) out += ", ";
      out += endos[i].describe();
    }
    return out;
  };
  return std::visit(
      overloaded{
          [&](const DiagonalSigma& s) { return "diagonal(" + endo_list(s.endos) + ")"; },
          [&](const ConjugatedSigma& s) {
            return "conjugated(" + print_matrix(ring, s.u) + "; " + endo_list(s.endos) + ")";
          },
          [&](const BlockSigma& s) {
            std::string g = std::visit(
                overloaded{
                    [](const ZeroGamma&) { return std::string("zero"); },
                    [&](const InnerGamma& x) { return "inner(" + print_matrix(ring, x.x) + ")"; },
                    [](const TableGamma&) { return std::string("table"); },
                },
                s.gamma);
            return "block(" + describe_sigma(ring, *s.alpha) + "; " + describe_sigma(ring, *s.beta) +
                   "; " + g + ")";
          },
          [&](const TableSigma&) { return std::string("table"); },
      },
      spec.spec);
}

std::string describe_delta(const Ring& ring, const DeltaSpec& spec) {
  return std::visit(
      overloaded{
          [](const ZeroDelta&) { return std::string("zero"); },
          [&](const InnerDelta& d) { return "inner(" + print_column(ring, d.point) + ")"; },
          [&](const CoordinateDelta& d) {
            std::string out = "coordinate(";
            for (std::size_t i = 0; i < d.maps.size(); ++i) {
              if (i > 0) out += ", ";
              out += std::visit(overloaded{
                                    [](const ZeroMap&) { return "zero"; },
                                    [](const DerivativeMap&) { return "derivative"; },
                                    [](const TableMap&) { return "table"; },
                                },
                                d.maps[i]);
            }
            return out + ")";
          },
          [&](const TransformedDelta& d) {
            return "transformed(" + print_matrix(ring, d.v) + "; " + describe_delta(ring, *d.base) +
                   ")";
          },
      },
      spec.spec);
}

}  // namespace orekit
