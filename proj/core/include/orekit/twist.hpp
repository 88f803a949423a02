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

// The twist data (sigma, delta) of an Ore extension S = A[t1..tn; sigma, delta].
//
// sigma: A -> M_n(A) must be a unital ring homomorphism and delta: A -> A^n a sigma-derivation,
// delta(ab) = sigma(a) delta(b) + delta(a) b. Both are described declaratively by specs and
// checked by validate_twist before any algebra is done over the context.

#ifndef OREKIT_TWIST_HPP
#define OREKIT_TWIST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orekit/guards.hpp"
#include "orekit/matrix.hpp"
#include "orekit/rings.hpp"

namespace orekit {

struct SigmaSpec;
struct DeltaSpec;

struct ZeroGamma {};
/// gamma(a) = x beta(a) - alpha(a) x.
struct InnerGamma {
  Matrix x;
};
/// gamma(a) = images[a.code].
struct TableGamma {
  std::vector<Matrix> images;
};
using GammaSpec = std::variant<ZeroGamma, InnerGamma, TableGamma>;

/// sigma(a) = diag(endo_1(a), ..., endo_n(a)).
struct DiagonalSigma {
  std::vector<Endomorphism> endos;
};
/// sigma(a) = U diag(endo_i(a)) U^-1. Build with conjugated_sigma(), which fills u_inv.
struct ConjugatedSigma {
  Matrix u;
  Matrix u_inv;
  std::vector<Endomorphism> endos;
};
/// sigma(a) = [[alpha(a), gamma(a)], [0, beta(a)]].
struct BlockSigma {
  std::shared_ptr<const SigmaSpec> alpha;
  std::shared_ptr<const SigmaSpec> beta;
  GammaSpec gamma;
};
/// sigma(a) = images[a.code].
struct TableSigma {
  std::vector<Matrix> images;
};

struct SigmaSpec {
  std::variant<DiagonalSigma, ConjugatedSigma, BlockSigma, TableSigma> spec;
};

struct ZeroMap {};
struct DerivativeMap {};
/// values[a.code].
struct TableMap {
  std::vector<Elem> values;
};
using CoordinateMap = std::variant<ZeroMap, DerivativeMap, TableMap>;

struct ZeroDelta {};
/// delta(x) = point x - sigma(x) point.
struct InnerDelta {
  Column point;
};
struct CoordinateDelta {
  std::vector<CoordinateMap> maps;
};
/// delta(x) = v base(x). When base_sigma is set, an inner derivation inside `base` is formed with
/// it instead of the context sigma (needed after a change of variables).
struct TransformedDelta {
  Matrix v;
  std::shared_ptr<const DeltaSpec> base;
  std::shared_ptr<const SigmaSpec> base_sigma;
};

struct DeltaSpec {
  std::variant<ZeroDelta, InnerDelta, CoordinateDelta, TransformedDelta> spec;
};

SigmaSpec diagonal_sigma(std::vector<Endomorphism> endos);
/// Throws ValidationError when U is not invertible.
SigmaSpec conjugated_sigma(Matrix u, std::vector<Endomorphism> endos);
SigmaSpec block_sigma(SigmaSpec alpha, SigmaSpec beta, GammaSpec gamma = ZeroGamma{});
SigmaSpec table_sigma(std::vector<Matrix> images);

DeltaSpec zero_delta();
DeltaSpec inner_delta(Column point);
DeltaSpec coordinate_delta(std::vector<CoordinateMap> maps);
DeltaSpec transformed_delta(Matrix v, DeltaSpec base,
                            std::optional<SigmaSpec> base_sigma = std::nullopt);

/// Number of variables a sigma spec acts on.
std::size_t sigma_size(const SigmaSpec& spec);

enum class ValidationState {
  Unvalidated,
  /// Passed on a seeded random sample of pairs; usable but not "validated".
  Sampled,
  /// Passed on every pair.
  Exhaustive,
  Failed,
};

const char* to_string(ValidationState state);

struct LawCheck {
  std::string name;
  bool passed = true;
  std::optional<std::pair<Elem, Elem>> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<LawCheck> checks;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;

  bool passed() const;
  const LawCheck* find(std::string_view name) const;
};

class TwistContext;
using ContextPtr = std::shared_ptr<const TwistContext>;

class TwistContext {
 public:
  /// Structural checks only (shapes, table sizes, invertibility of U). Call validate_twist next.
  static std::shared_ptr<TwistContext> build(RingPtr ring, SigmaSpec sigma, DeltaSpec delta,
                                             Guards guards = {});

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  const SigmaSpec& sigma_spec() const noexcept { return sigma_; }
  const DeltaSpec& delta_spec() const noexcept { return delta_; }
  const Guards& guards() const noexcept { return guards_; }

  ValidationState state() const noexcept { return state_; }
  /// True only after exhaustive success.
  bool validated() const noexcept { return state_ == ValidationState::Exhaustive; }
  /// Throws PreconditionError unless the context passed validation (exhaustive or sampled).
  void require_usable() const;

  Matrix sigma(Elem a) const;
  Elem sigma_entry(std::size_t i, std::size_t j, Elem a) const;
  Column delta(Elem a) const;
  Elem delta_entry(std::size_t i, Elem a) const;

  /// sigma(a) is diagonal for every a (checked exhaustively at build when under the guard).
  bool sigma_is_diagonal() const noexcept { return diagonal_; }
  /// delta(a) = 0 for every a.
  bool delta_is_zero() const noexcept { return delta_zero_; }

 private:
  friend ValidationReport validate_twist(TwistContext& ctx);

  TwistContext() = default;

  Matrix sigma_raw(Elem a) const;
  Column delta_raw(Elem a) const;

  RingPtr ring_;
  std::size_t n_ = 0;
  SigmaSpec sigma_;
  DeltaSpec delta_;
  Guards guards_;
  ValidationState state_ = ValidationState::Unvalidated;
  bool diagonal_ = false;
  bool delta_zero_ = false;
  // Per-code tables for small carriers.
  std::vector<Matrix> sigma_cache_;
  std::vector<Column> delta_cache_;
};

/// sigma unital/additive/multiplicative and delta additive/twisted Leibniz, each with the first
/// failing (a, b) in code order (a outer). Exhaustive when |A|^2 fits guards.max_pairs, otherwise
/// sampled with guards.sample_pairs; throws GuardExceeded when neither applies. Sets the state.
ValidationReport validate_twist(TwistContext& ctx);

/// The same laws repackaged as phi(a) = [[sigma(a), delta(a)], [0, a]] being a unital ring
/// homomorphism A -> M_{n+1}(A). Does not change the state.
ValidationReport phi_embed_check(const TwistContext& ctx);

Matrix phi_embed(const TwistContext& ctx, Elem a);

/// build + validate_twist; throws ValidationError describing the first failing law.
ContextPtr make_context(RingPtr ring, SigmaSpec sigma, DeltaSpec delta, Guards guards = {});

struct ChangeOfVariables {
  ContextPtr context;
  Matrix u;
};

/// For sigma = U diag(tau) U^-1, the diagonal context (tau, U^-1 delta) in the variables
/// y = U^-1 t, validated.
ChangeOfVariables change_of_variables(const TwistContext& ctx);

std::string describe_sigma(const Ring& ring, const SigmaSpec& spec);
std::string describe_delta(const Ring& ring, const DeltaSpec& spec);

}  // namespace orekit

#endif  // OREKIT_TWIST_HPP
