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

// Finite coefficient rings.
//
// Every carrier is finite and every element is stored in canonical form as a single integer code.
// A ring of kind K has `dimension()` coordinates, each in [0, radix()), and the code of an element
// is the mixed-radix number sum_i coord_i * radix^i. Addition is coordinatewise modulo the radix
// for all four kinds, so only multiplication is kind specific. Element order everywhere in the
// library is code order, which is lexicographic on coordinates read from the last coordinate
// down (GF(4) enumerates as 0, 1, g, g+1).

#ifndef OREKIT_RINGS_HPP
#define OREKIT_RINGS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orekit/guards.hpp"

namespace orekit {

/// Canonical code of a ring element. Meaningful only together with its Ring.
struct Elem {
  std::uint64_t code = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

struct ElemHash {
  std::size_t operator()(Elem e) const noexcept { return std::hash<std::uint64_t>{}(e.code); }
};

enum class RingKind { ZMod, GF, TruncPoly, Matrix };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  virtual ~Ring() = default;

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t cardinality() const noexcept { return card_; }
  std::uint64_t radix() const noexcept { return radix_; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::vector<std::uint64_t> coordinates(Elem a) const;
  /// Reduces each coordinate modulo the radix.
  Elem from_coordinates(std::span<const std::uint64_t> coords) const;
  Elem element_at(std::uint64_t index) const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return one_; }
  bool is_zero(Elem a) const noexcept { return a.code == 0; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// The image of n under the unique unital map Z -> A.
  Elem from_integer(std::int64_t n) const;

  /// b with ab = ba = 1, or empty.
  virtual std::optional<Elem> try_inverse(Elem a) const;
  /// True for 0 and for every a with ab = 0 or ba = 0 for some b != 0.
  virtual bool is_zero_divisor(Elem a) const;
  virtual bool is_field() const noexcept { return false; }
  virtual bool is_commutative() const noexcept { return true; }

  /// p when the additive group is (Z/p)^dimension in the coordinate basis, else empty. Such rings
  /// are Z/p-vector spaces and every additive map is Z/p-linear in coordinates.
  std::optional<std::uint64_t> prime_subfield_order() const noexcept;

  virtual std::string print(Elem a) const = 0;
  /// Inverse of print: parse(print(a)) == a. Accepts integer arithmetic in the generator symbol
  /// ("g^2+1", "2x", "(x+1)^2") and bracketed grids for matrix rings ("[[1,0],[x,1]]").
  Elem parse(std::string_view text) const;

  /// Canonical descriptor text, e.g. "GF(2,2,g^2+g+1)".
  virtual std::string describe() const = 0;
  /// Letter naming the polynomial generator ('g' for GF, 'x' for TruncPoly).
  virtual std::optional<char> symbol() const noexcept { return std::nullopt; }
  virtual Elem generator() const;

  /// Structural descriptor equality (same kind and parameters).
  bool same_descriptor(const Ring& other) const;

  /// Throws PreconditionError unless a.code < cardinality().
  void check_element(Elem a) const;

 protected:
  Ring(RingKind kind, std::uint64_t radix, std::size_t dimension);

  /// Must be called by derived constructors once mul_impl and one_impl are usable.
  void finalize();

  virtual Elem mul_impl(Elem a, Elem b) const = 0;
  virtual Elem one_impl() const = 0;
  virtual Elem from_integer_impl(std::int64_t n) const;

  std::optional<Elem> exhaustive_inverse(Elem a) const;
  bool exhaustive_zero_divisor(Elem a) const;

 private:
  friend class ScalarParser;

  RingKind kind_;
  std::uint64_t radix_;
  std::size_t dimension_;
  std::uint64_t card_;
  Elem one_{0};
  // Cayley tables for tiny carriers, indexed a * card + b.
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
};

/// Z/m for m >= 2.
class ZModRing final : public Ring {
 public:
  explicit ZModRing(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return radix(); }

  std::optional<Elem> try_inverse(Elem a) const override;
  bool is_zero_divisor(Elem a) const override;
  bool is_field() const noexcept override { return prime_; }
  std::string print(Elem a) const override;
  std::string describe() const override;

 protected:
  Elem mul_impl(Elem a, Elem b) const override;
  Elem one_impl() const override { return Elem{1}; }

 private:
  bool prime_;
};

/// GF(p^k) as (Z/p)[g]/(modulus) with a monic irreducible modulus of degree k.
class GaloisField final : public Ring {
 public:
  /// `modulus` holds k+1 coefficients, lowest degree first. It is normalized to monic and must
  /// be irreducible; a reducible modulus raises ValidationError naming a factor.
  GaloisField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return radix(); }
  unsigned degree() const noexcept { return static_cast<unsigned>(dimension()); }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  std::optional<Elem> try_inverse(Elem a) const override;
  bool is_zero_divisor(Elem a) const override { return is_zero(a); }
  bool is_field() const noexcept override { return true; }
  std::string print(Elem a) const override;
  std::string describe() const override;
  std::optional<char> symbol() const noexcept override { return 'g'; }
  Elem generator() const override;

 protected:
  Elem mul_impl(Elem a, Elem b) const override;
  Elem one_impl() const override { return Elem{1}; }

 private:
  std::vector<std::uint64_t> modulus_;
};

/// (Z/p)[x]/(x^m) for prime p and m >= 2.
class TruncPolyRing final : public Ring {
 public:
  TruncPolyRing(std::uint64_t p, unsigned m);

  std::uint64_t characteristic() const noexcept { return radix(); }
  unsigned order() const noexcept { return static_cast<unsigned>(dimension()); }

  std::optional<Elem> try_inverse(Elem a) const override;
  bool is_zero_divisor(Elem a) const override;
  std::string print(Elem a) const override;
  std::string describe() const override;
  std::optional<char> symbol() const noexcept override { return 'x'; }
  Elem generator() const override;

 protected:
  Elem mul_impl(Elem a, Elem b) const override;
  Elem one_impl() const override { return Elem{1}; }
};

/// k x k matrices over a base ring. Entries are stored row-major; entry 0 holds the least
/// significant digits of the code.
class MatrixRing final : public Ring {
 public:
  MatrixRing(RingPtr base, unsigned size);

  const RingPtr& base() const noexcept { return base_; }
  unsigned size() const noexcept { return size_; }

  Elem entry(Elem a, unsigned row, unsigned col) const;
  std::vector<Elem> entries(Elem a) const;
  Elem from_entries(std::span<const Elem> entries) const;

  /// Gauss-Jordan with unit pivots, then exhaustive search when that fails and fits the guard.
  std::optional<Elem> try_inverse(Elem a) const override;
  /// In a finite ring the non-units are exactly the zero divisors.
  bool is_zero_divisor(Elem a) const override { return !try_inverse(a); }
  bool is_commutative() const noexcept override;
  std::string print(Elem a) const override;
  std::string describe() const override;

 protected:
  Elem mul_impl(Elem a, Elem b) const override;
  Elem one_impl() const override;
  Elem from_integer_impl(std::int64_t n) const override;

 private:
  RingPtr base_;
  unsigned size_;
};

RingPtr make_zmod(std::uint64_t modulus);
/// GF(p^k) with the least irreducible monic modulus in code order.
RingPtr make_gf(std::uint64_t p, unsigned k);
RingPtr make_gf(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
/// Modulus given as text in g, e.g. "g^2+g+1".
RingPtr make_gf(std::uint64_t p, unsigned k, std::string_view modulus);
RingPtr make_trunc_poly(std::uint64_t p, unsigned m);
RingPtr make_matrix_ring(RingPtr base, unsigned size);

bool is_prime(std::uint64_t n) noexcept;

void check_enumeration_guard(const Ring& ring, std::uint64_t guard);

/// Every element exactly once in code order. Throws GuardExceeded above `guard`.
inline auto enumerate(const Ring& ring, std::uint64_t guard = Guards{}.max_ring_card) {
  check_enumeration_guard(ring, guard);
  return std::views::iota(std::uint64_t{0}, ring.cardinality()) |
         std::views::transform([](std::uint64_t c) { return Elem{c}; });
}

std::vector<Elem> all_elements(const Ring& ring, std::uint64_t guard = Guards{}.max_ring_card);

/// Derivative d/dx of TruncPoly(p, m) with p | m, applied coefficientwise.
Elem formal_derivative(const Ring& ring, Elem a);

/// Value type pairing an element code with its ring.
class RingElement {
 public:
  RingElement(RingPtr ring, Elem value);

  static RingElement parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  Elem value() const noexcept { return value_; }
  std::vector<std::uint64_t> coordinates() const { return ring_->coordinates(value_); }
  std::string to_string() const { return ring_->print(value_); }
  bool is_zero() const noexcept { return value_.code == 0; }

  friend RingElement operator+(const RingElement& lhs, const RingElement& rhs);
  friend RingElement operator-(const RingElement& lhs, const RingElement& rhs);
  friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);
  friend RingElement operator-(const RingElement& a);
  friend bool operator==(const RingElement& lhs, const RingElement& rhs);

 private:
  RingPtr ring_;
  Elem value_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Neg ignores the value of `rhs` but still requires a shared descriptor.
RingElement ring_arith(ArithOp op, const RingElement& lhs, const RingElement& rhs);
std::optional<RingElement> try_inverse(const RingElement& a);
bool is_zero_divisor(const RingElement& a);
RingElement formal_derivative(const RingElement& a);

enum class EndoKind { Identity, FrobeniusPower, Substitution };

/// A unital ring endomorphism of a finite ring, checked exhaustively (or on a seeded sample
/// when the pair guard is exceeded) at construction.
class Endomorphism {
 public:
  static Endomorphism identity(RingPtr ring);
  /// a -> a^(p^e) on a Galois field.
  static Endomorphism frobenius(RingPtr ring, unsigned e, const Guards& guards = {});
  /// x -> u on a truncated polynomial ring.
  static Endomorphism substitution(RingPtr ring, Elem u, const Guards& guards = {});
  /// Parses "identity", "frobenius:<e>" or "substitution:<literal>".
  static Endomorphism parse(RingPtr ring, std::string_view text, const Guards& guards = {});

  EndoKind kind() const noexcept { return kind_; }
  const RingPtr& ring() const noexcept { return ring_; }
  unsigned exponent() const noexcept { return exponent_; }
  Elem substitute() const noexcept { return subst_; }

  Elem apply(Elem a) const;
  RingElement apply(const RingElement& a) const;

  /// Round-trips through parse().
  std::string describe() const;

 private:
  Endomorphism(RingPtr ring, EndoKind kind, unsigned exponent, Elem subst);
  Elem compute(Elem a) const;
  void build_cache(const Guards& guards);
  void verify(const Guards& guards) const;

  RingPtr ring_;
  EndoKind kind_;
  unsigned exponent_ = 0;
  Elem subst_{0};
  std::uint64_t frob_power_ = 1;
  std::shared_ptr<const std::vector<Elem>> cache_;
};

/// Exhaustive (or sampled, see Guards) check that `f` is additive, multiplicative and unital.
/// Returns a description of the first failure, empty on success.
std::optional<std::string> check_ring_endomorphism(const Ring& ring,
                                                   const std::function<Elem(Elem)>& f,
                                                   const Guards& guards = {});

}  // namespace orekit

#endif  // OREKIT_RINGS_HPP
