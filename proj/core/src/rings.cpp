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

#include "orekit/rings.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "orekit/error.hpp"
#include "orekit/matrix.hpp"

namespace orekit {
namespace {

// Codes must stay well clear of overflow in mixed-radix arithmetic.
constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableCardinality = 256;
constexpr std::uint64_t kEndoCacheCardinality = 4096;

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : m - (b - a);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_prime(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > kMaxCardinality / base) {
      throw ValidationError("ring cardinality " + std::to_string(base) + "^" +
                            std::to_string(exp) + " exceeds the supported maximum 2^62");
    }
    r *= base;
  }
  return r;
}

std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t radix, std::size_t dim) {
  std::vector<std::uint64_t> d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d[i] = code % radix;
    code /= radix;
  }
  return d;
}

std::uint64_t encode(std::span<const std::uint64_t> digits, std::uint64_t radix) {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * radix + digits[i] % radix;
  return code;
}

// Sum of c_i s^i, highest degree first: "2g^2+g+1".
std::string print_coefficients(std::span<const std::uint64_t> c, char symbol) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += symbol;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// Remainder of num modulo a monic polynomial den over Z/p (both lowest degree first).
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> num,
                                    const std::vector<std::uint64_t>& den, std::uint64_t p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::uint64_t c = num[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] = submod(num[i - dd + j], mulmod(c, den[j], p), p);
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

// Monic divisor of degree 1..k/2 if one exists, found by exhaustive search.
std::optional<std::vector<std::uint64_t>> find_factor(const std::vector<std::uint64_t>& f,
                                                      std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = checked_power(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      std::vector<std::uint64_t> h = decode(low, p, d);
      h.push_back(1);
      const auto r = poly_rem(f, h, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint64_t c) { return c == 0; })) return h;
    }
  }
  return std::nullopt;
}

// Sums of monomials c*s^e over Z/p, used for GF moduli before the field exists.
std::vector<std::uint64_t> parse_modulus_text(std::string_view text, char symbol,
                                              std::uint64_t p) {
  std::vector<std::uint64_t> c;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::optional<std::uint64_t> {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return std::nullopt;
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % (p * 1000003);
      ++pos;
    }
    return v;
  };
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in modulus", pos);
    }
    first = false;
    std::uint64_t coeff = 1;
    std::size_t degree = 0;
    bool any = false;
    if (auto v = read_uint()) {
      coeff = *v % p;
      any = true;
      skip();
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    skip();
    if (pos < text.size() && text[pos] == symbol) {
      ++pos;
      any = true;
      degree = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        auto e = read_uint();
        if (!e) throw ParseError("expected exponent after '^'", pos);
        degree = static_cast<std::size_t>(*e);
      }
    }
    if (!any) throw ParseError("expected a monomial in modulus", pos);
    if (c.size() <= degree) c.resize(degree + 1, 0);
    c[degree] = negative ? submod(c[degree], coeff, p) : addmod(c[degree], coeff, p);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) throw ParseError("empty modulus", 0);
  return c;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// Ring

Ring::Ring(RingKind kind, std::uint64_t radix, std::size_t dimension)
    : kind_(kind), radix_(radix), dimension_(dimension), card_(checked_power(radix, dimension)) {}

void Ring::finalize() {
  one_ = one_impl();
  if (card_ > kTableCardinality) return;
  std::vector<std::uint32_t> add(card_ * card_);
  std::vector<std::uint32_t> mul(card_ * card_);
  for (std::uint64_t a = 0; a < card_; ++a) {
    const auto da = decode(a, radix_, dimension_);
    for (std::uint64_t b = 0; b < card_; ++b) {
      auto db = decode(b, radix_, dimension_);
      for (std::size_t i = 0; i < dimension_; ++i) db[i] = (da[i] + db[i]) % radix_;
      add[a * card_ + b] = static_cast<std::uint32_t>(encode(db, radix_));
      mul[a * card_ + b] = static_cast<std::uint32_t>(mul_impl(Elem{a}, Elem{b}).code);
    }
  }
  add_table_ = std::move(add);
  mul_table_ = std::move(mul);
}

std::vector<std::uint64_t> Ring::coordinates(Elem a) const {
  return decode(a.code, radix_, dimension_);
}

Elem Ring::from_coordinates(std::span<const std::uint64_t> coords) const {
  if (coords.size() != dimension_) {
    throw PreconditionError("expected " + std::to_string(dimension_) + " coordinates, got " +
                            std::to_string(coords.size()));
  }
  return Elem{encode(coords, radix_)};
}

Elem Ring::element_at(std::uint64_t index) const {
  if (index >= card_) throw PreconditionError("element index out of range");
  return Elem{index};
}

void Ring::check_element(Elem a) const {
  if (a.code >= card_) {
    throw PreconditionError("code " + std::to_string(a.code) + " is not an element of " +
                            describe());
  }
}

Elem Ring::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return Elem{add_table_[a.code * card_ + b.code]};
  if (radix_ == 2) return Elem{a.code ^ b.code};
  std::uint64_t x = a.code, y = b.code, out = 0, scale = 1;
  for (std::size_t i = 0; i < dimension_; ++i) {
    const std::uint64_t d = (x % radix_ + y % radix_) % radix_;
    out += d * scale;
    x /= radix_;
    y /= radix_;
    if (i + 1 < dimension_) scale *= radix_;
  }
  return Elem{out};
}

Elem Ring::neg(Elem a) const {
  if (radix_ == 2) return a;
  std::uint64_t x = a.code, out = 0, scale = 1;
  for (std::size_t i = 0; i < dimension_; ++i) {
    const std::uint64_t d = x % radix_;
    out += ((radix_ - d) % radix_) * scale;
    x /= radix_;
    if (i + 1 < dimension_) scale *= radix_;
  }
  return Elem{out};
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return Elem{mul_table_[a.code * card_ + b.code]};
  return mul_impl(a, b);
}

Elem Ring::pow(Elem a, std::uint64_t e) const {
  Elem r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Ring::from_integer(std::int64_t n) const { return from_integer_impl(n); }

Elem Ring::from_integer_impl(std::int64_t n) const {
  const auto r = static_cast<std::int64_t>(radix_);
  const std::int64_t m = ((n % r) + r) % r;
  return Elem{static_cast<std::uint64_t>(m)};
}

std::optional<Elem> Ring::try_inverse(Elem a) const { return exhaustive_inverse(a); }

bool Ring::is_zero_divisor(Elem a) const { return exhaustive_zero_divisor(a); }

std::optional<Elem> Ring::exhaustive_inverse(Elem a) const {
  for (Elem b : enumerate(*this)) {
    if (mul(a, b) == one_ && mul(b, a) == one_) return b;
  }
  return std::nullopt;
}

bool Ring::exhaustive_zero_divisor(Elem a) const {
  if (is_zero(a)) return true;
  for (Elem b : enumerate(*this)) {
    if (is_zero(b)) continue;
    if (is_zero(mul(a, b)) || is_zero(mul(b, a))) return true;
  }
  return false;
}

std::optional<std::uint64_t> Ring::prime_subfield_order() const noexcept {
  if (is_prime(radix_)) return radix_;
  return std::nullopt;
}

Elem Ring::generator() const {
  throw PreconditionError(describe() + " has no polynomial generator");
}

bool Ring::same_descriptor(const Ring& other) const {
  return this == &other || describe() == other.describe();
}

// ---------------------------------------------------------------------------------------------
// Literal parsing

class ScalarParser {
 public:
  ScalarParser(const Ring& ring, std::string_view text, std::size_t& pos)
      : ring_(ring), text_(text), pos_(pos) {}

  Elem expression() {
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    Elem acc = term();
    if (negative) acc = ring_.neg(acc);
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      const Elem t = term();
      acc = c == '+' ? ring_.add(acc, t) : ring_.sub(acc, t);
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_primary() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    if (c == '[' && ring_.kind() == RingKind::Matrix) return true;
    const auto sym = ring_.symbol();
    return sym && c == *sym;
  }

  Elem term() {
    Elem acc = power();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc = ring_.mul(acc, power());
      } else if (starts_primary()) {
        acc = ring_.mul(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  Elem power() {
    const Elem base = primary();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected exponent after '^'", pos_);
    }
    std::uint64_t e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(peek() - '0');
      if (e > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError("exponent too large", pos_);
      }
      e = e * 10 + d;
      ++pos_;
    }
    return ring_.pow(base, e);
  }

  Elem primary() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Elem ten = ring_.from_integer(10);
      Elem acc = ring_.zero();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        acc = ring_.add(ring_.mul(acc, ten), ring_.from_integer(peek() - '0'));
        ++pos_;
      }
      return acc;
    }
    if (c == '(') {
      ++pos_;
      const Elem inner = expression();
      skip();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == '[' && ring_.kind() == RingKind::Matrix) return grid();
    const auto sym = ring_.symbol();
    if (sym && c == *sym) {
      ++pos_;
      return ring_.generator();
    }
    if (c == '\0') throw ParseError("unexpected end of ring literal", pos_);
    throw ParseError(std::string("unexpected character '") + c + "' in literal for " +
                         ring_.describe(),
                     pos_);
  }

  Elem grid() {
    const auto& mr = static_cast<const MatrixRing&>(ring_);
    const unsigned k = mr.size();
    std::vector<Elem> entries;
    entries.reserve(std::size_t{k} * k);
    expect('[');
    for (unsigned r = 0; r < k; ++r) {
      if (r > 0) expect(',');
      expect('[');
      for (unsigned c = 0; c < k; ++c) {
        if (c > 0) expect(',');
        ScalarParser entry(*mr.base(), text_, pos_);
        entries.push_back(entry.expression());
      }
      expect(']');
    }
    expect(']');
    return mr.from_entries(entries);
  }

  void expect(char c) {
    skip();
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "' in matrix literal (" +
                           ring_.describe() + ")",
                       pos_);
    }
    ++pos_;
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t& pos_;
};

Elem Ring::parse(std::string_view text) const {
  std::size_t pos = 0;
  ScalarParser parser(*this, text, pos);
  const Elem value = parser.expression();
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    throw ParseError("trailing characters in literal '" + std::string(text) + "'", pos);
  }
  return value;
}

// ---------------------------------------------------------------------------------------------
// ZMod

ZModRing::ZModRing(std::uint64_t modulus) : Ring(RingKind::ZMod, modulus, 1) {
  if (modulus < 2) throw ValidationError("ZMod modulus must be at least 2");
  prime_ = is_prime(modulus);
  finalize();
}

Elem ZModRing::mul_impl(Elem a, Elem b) const { return Elem{mulmod(a.code, b.code, modulus())}; }

std::optional<Elem> ZModRing::try_inverse(Elem a) const {
  // Extended Euclid on (a, m).
  std::int64_t old_r = static_cast<std::int64_t>(a.code), r = static_cast<std::int64_t>(modulus());
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - static_cast<i128>(q) * s);
  }
  if (old_r != 1) return std::nullopt;
  const auto m = static_cast<i128>(modulus());
  return Elem{static_cast<std::uint64_t>(((old_s % m) + m) % m)};
}

bool ZModRing::is_zero_divisor(Elem a) const {
  return a.code == 0 || std::gcd(a.code, modulus()) != 1;
}

std::string ZModRing::print(Elem a) const { return std::to_string(a.code); }

std::string ZModRing::describe() const { return "ZMod(" + std::to_string(modulus()) + ")"; }

// ---------------------------------------------------------------------------------------------
// GF

GaloisField::GaloisField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : Ring(RingKind::GF, p, k) {
  if (!is_prime(p)) throw ValidationError("GF characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ValidationError("GF degree must be at least 1");
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() != std::size_t{k} + 1) {
    throw ValidationError("GF modulus " + print_coefficients(modulus, 'g') + " must have degree " +
                          std::to_string(k));
  }
  const std::uint64_t lead_inv = invmod_prime(modulus.back(), p);
  for (auto& c : modulus) c = mulmod(c, lead_inv, p);
  if (auto factor = find_factor(modulus, p)) {
    throw ValidationError("GF modulus " + print_coefficients(modulus, 'g') +
                          " is reducible over Z/" + std::to_string(p) + ": divisible by " +
                          print_coefficients(*factor, 'g'));
  }
  modulus_ = std::move(modulus);
  finalize();
}

Elem GaloisField::mul_impl(Elem a, Elem b) const {
  const std::uint64_t p = characteristic();
  const std::size_t k = degree();
  const auto da = decode(a.code, p, k);
  const auto db = decode(b.code, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = addmod(prod[i + j], mulmod(da[i], db[j], p), p);
    }
  }
  const auto rem = poly_rem(std::move(prod), modulus_, p);
  std::vector<std::uint64_t> digits(k, 0);
  std::copy(rem.begin(), rem.end(), digits.begin());
  return Elem{encode(digits, p)};
}

std::optional<Elem> GaloisField::try_inverse(Elem a) const {
  if (is_zero(a)) return std::nullopt;
  return pow(a, cardinality() - 2);
}

Elem GaloisField::generator() const {
  // g reduced modulo the modulus; differs from the code of "g" only when k = 1.
  std::vector<std::uint64_t> g(std::max<std::size_t>(degree(), 2), 0);
  g[1] = 1;
  auto rem = poly_rem(std::move(g), modulus_, characteristic());
  rem.resize(degree(), 0);
  return Elem{encode(rem, characteristic())};
}

std::string GaloisField::print(Elem a) const {
  return print_coefficients(coordinates(a), 'g');
}

std::string GaloisField::describe() const {
  return "GF(" + std::to_string(characteristic()) + "," + std::to_string(degree()) + "," +
         print_coefficients(modulus_, 'g') + ")";
}

// ---------------------------------------------------------------------------------------------
// TruncPoly

TruncPolyRing::TruncPolyRing(std::uint64_t p, unsigned m) : Ring(RingKind::TruncPoly, p, m) {
  if (!is_prime(p)) {
    throw ValidationError("TruncPoly characteristic " + std::to_string(p) + " is not prime");
  }
  if (m < 2) throw ValidationError("TruncPoly nilpotency order must be at least 2");
  finalize();
}

Elem TruncPolyRing::mul_impl(Elem a, Elem b) const {
  const std::uint64_t p = characteristic();
  const std::size_t m = order();
  const auto da = decode(a.code, p, m);
  const auto db = decode(b.code, p, m);
  std::vector<std::uint64_t> prod(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      prod[i + j] = addmod(prod[i + j], mulmod(da[i], db[j], p), p);
    }
  }
  return Elem{encode(prod, p)};
}

std::optional<Elem> TruncPolyRing::try_inverse(Elem a) const {
  const std::uint64_t p = characteristic();
  const std::size_t m = order();
  const auto da = decode(a.code, p, m);
  if (da[0] == 0) return std::nullopt;
  // Power series inversion: b_j = -a_0^{-1} sum_{i=1..j} a_i b_{j-i}.
  const std::uint64_t c0 = invmod_prime(da[0], p);
  std::vector<std::uint64_t> b(m, 0);
  b[0] = c0;
  for (std::size_t j = 1; j < m; ++j) {
    std::uint64_t s = 0;
    for (std::size_t i = 1; i <= j; ++i) s = addmod(s, mulmod(da[i], b[j - i], p), p);
    b[j] = submod(0, mulmod(c0, s, p), p);
  }
  return Elem{encode(b, p)};
}

bool TruncPolyRing::is_zero_divisor(Elem a) const { return a.code % characteristic() == 0; }

Elem TruncPolyRing::generator() const { return Elem{characteristic()}; }

std::string TruncPolyRing::print(Elem a) const { return print_coefficients(coordinates(a), 'x'); }

std::string TruncPolyRing::describe() const {
  return "TruncPoly(" + std::to_string(characteristic()) + "," + std::to_string(order()) + ")";
}

// ---------------------------------------------------------------------------------------------
// MatrixRing

MatrixRing::MatrixRing(RingPtr base, unsigned size)
    : Ring(RingKind::Matrix, base ? base->radix() : 2,
           base ? std::size_t{size} * size * base->dimension() : 1),
      base_(std::move(base)),
      size_(size) {
  if (!base_) throw ValidationError("MatrixRing needs a base ring");
  if (size_ < 1) throw ValidationError("MatrixRing size must be at least 1");
  finalize();
}

Elem MatrixRing::entry(Elem a, unsigned row, unsigned col) const {
  const std::uint64_t b = base_->cardinality();
  std::uint64_t code = a.code;
  const unsigned idx = row * size_ + col;
  for (unsigned i = 0; i < idx; ++i) code /= b;
  return Elem{code % b};
}

std::vector<Elem> MatrixRing::entries(Elem a) const {
  const std::uint64_t b = base_->cardinality();
  std::vector<Elem> out(std::size_t{size_} * size_);
  std::uint64_t code = a.code;
  for (auto& e : out) {
    e = Elem{code % b};
    code /= b;
  }
  return out;
}

Elem MatrixRing::from_entries(std::span<const Elem> entries) const {
  if (entries.size() != std::size_t{size_} * size_) {
    throw PreconditionError("matrix literal needs " + std::to_string(size_ * size_) + " entries");
  }
  const std::uint64_t b = base_->cardinality();
  std::uint64_t code = 0;
  for (std::size_t i = entries.size(); i-- > 0;) {
    base_->check_element(entries[i]);
    code = code * b + entries[i].code;
  }
  return Elem{code};
}

Elem MatrixRing::mul_impl(Elem a, Elem b) const {
  const auto ea = entries(a);
  const auto eb = entries(b);
  std::vector<Elem> out(ea.size(), base_->zero());
  for (unsigned r = 0; r < size_; ++r) {
    for (unsigned c = 0; c < size_; ++c) {
      Elem acc = base_->zero();
      for (unsigned k = 0; k < size_; ++k) {
        acc = base_->add(acc, base_->mul(ea[r * size_ + k], eb[k * size_ + c]));
      }
      out[r * size_ + c] = acc;
    }
  }
  return from_entries(out);
}

Elem MatrixRing::one_impl() const { return from_integer_impl(1); }

Elem MatrixRing::from_integer_impl(std::int64_t n) const {
  std::vector<Elem> out(std::size_t{size_} * size_, base_->zero());
  const Elem d = base_->from_integer(n);
  for (unsigned i = 0; i < size_; ++i) out[i * size_ + i] = d;
  return from_entries(out);
}

std::optional<Elem> MatrixRing::try_inverse(Elem a) const {
  if (auto inv = inverse(*base_, Matrix(size_, size_, entries(a)))) {
    return from_entries(inv->data());
  }
  return std::nullopt;
}

bool MatrixRing::is_commutative() const noexcept {
  return size_ == 1 && base_->is_commutative();
}

std::string MatrixRing::print(Elem a) const {
  const auto e = entries(a);
  std::string out = "[";
  for (unsigned r = 0; r < size_; ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (unsigned c = 0; c < size_; ++c) {
      if (c > 0) out += ',';
      out += base_->print(e[r * size_ + c]);
    }
    out += ']';
  }
  return out + "]";
}

std::string MatrixRing::describe() const {
  return "MatrixRing(" + base_->describe() + "," + std::to_string(size_) + ")";
}

// ---------------------------------------------------------------------------------------------
// Factories and free functions

RingPtr make_zmod(std::uint64_t modulus) { return std::make_shared<ZModRing>(modulus); }

RingPtr make_gf(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw ValidationError("GF characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ValidationError("GF degree must be at least 1");
  const std::uint64_t count = checked_power(p, k);
  for (std::uint64_t low = 0; low < count; ++low) {
    std::vector<std::uint64_t> f = decode(low, p, k);
    f.push_back(1);
    if (!find_factor(f, p)) return std::make_shared<GaloisField>(p, k, std::move(f));
  }
  throw ValidationError("no irreducible polynomial found");  // unreachable for prime p
}

RingPtr make_gf(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  return std::make_shared<GaloisField>(p, k, std::move(modulus));
}

RingPtr make_gf(std::uint64_t p, unsigned k, std::string_view modulus) {
  if (!is_prime(p)) throw ValidationError("GF characteristic " + std::to_string(p) + " is not prime");
  return make_gf(p, k, parse_modulus_text(modulus, 'g', p));
}

RingPtr make_trunc_poly(std::uint64_t p, unsigned m) {
  return std::make_shared<TruncPolyRing>(p, m);
}

RingPtr make_matrix_ring(RingPtr base, unsigned size) {
  return std::make_shared<MatrixRing>(std::move(base), size);
}

void check_enumeration_guard(const Ring& ring, std::uint64_t guard) {
  if (ring.cardinality() > guard) {
    throw GuardExceeded("enumerating " + ring.describe() + ": cardinality " +
                        std::to_string(ring.cardinality()) + " exceeds guard " +
                        std::to_string(guard));
  }
}

std::vector<Elem> all_elements(const Ring& ring, std::uint64_t guard) {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(std::min(ring.cardinality(), guard)));
  for (Elem e : enumerate(ring, guard)) out.push_back(e);
  return out;
}

Elem formal_derivative(const Ring& ring, Elem a) {
  if (ring.kind() != RingKind::TruncPoly) {
    throw PreconditionError("formal derivative needs a TruncPoly ring, got " + ring.describe());
  }
  const auto& tr = static_cast<const TruncPolyRing&>(ring);
  const std::uint64_t p = tr.characteristic();
  if (tr.order() % p != 0) {
    throw PreconditionError("d/dx is not well defined on " + ring.describe() +
                            ": order is not divisible by the characteristic");
  }
  const auto c = ring.coordinates(a);
  std::vector<std::uint64_t> d(c.size(), 0);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = mulmod(i % p, c[i], p);
  return ring.from_coordinates(d);
}

// ---------------------------------------------------------------------------------------------
// RingElement

namespace {

void require_same(const RingElement& lhs, const RingElement& rhs) {
  if (!lhs.ring()->same_descriptor(*rhs.ring())) {
    throw MismatchError("descriptor mismatch: " + lhs.ring()->describe() + " vs " +
                        rhs.ring()->describe());
  }
}

}  // namespace

RingElement::RingElement(RingPtr ring, Elem value) : ring_(std::move(ring)), value_(value) {
  if (!ring_) throw PreconditionError("RingElement needs a ring");
  ring_->check_element(value_);
}

RingElement RingElement::parse(const RingPtr& ring, std::string_view text) {
  return RingElement(ring, ring->parse(text));
}

RingElement operator+(const RingElement& lhs, const RingElement& rhs) {
  return ring_arith(ArithOp::Add, lhs, rhs);
}

RingElement operator-(const RingElement& lhs, const RingElement& rhs) {
  return ring_arith(ArithOp::Sub, lhs, rhs);
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs) {
  return ring_arith(ArithOp::Mul, lhs, rhs);
}

RingElement operator-(const RingElement& a) { return ring_arith(ArithOp::Neg, a, a); }

bool operator==(const RingElement& lhs, const RingElement& rhs) {
  return lhs.value_ == rhs.value_ && lhs.ring_->same_descriptor(*rhs.ring_);
}

RingElement ring_arith(ArithOp op, const RingElement& lhs, const RingElement& rhs) {
  require_same(lhs, rhs);
  const Ring& r = *lhs.ring();
  switch (op) {
    case ArithOp::Add:
      return {lhs.ring(), r.add(lhs.value(), rhs.value())};
    case ArithOp::Sub:
      return {lhs.ring(), r.sub(lhs.value(), rhs.value())};
    case ArithOp::Mul:
      return {lhs.ring(), r.mul(lhs.value(), rhs.value())};
    case ArithOp::Neg:
      return {lhs.ring(), r.neg(lhs.value())};
  }
  throw PreconditionError("unknown arithmetic operation");
}

std::optional<RingElement> try_inverse(const RingElement& a) {
  if (auto b = a.ring()->try_inverse(a.value())) return RingElement(a.ring(), *b);
  return std::nullopt;
}

bool is_zero_divisor(const RingElement& a) { return a.ring()->is_zero_divisor(a.value()); }

RingElement formal_derivative(const RingElement& a) {
  return {a.ring(), formal_derivative(*a.ring(), a.value())};
}

// ---------------------------------------------------------------------------------------------
// Endomorphisms

std::optional<std::string> check_ring_endomorphism(const Ring& ring,
                                                   const std::function<Elem(Elem)>& f,
                                                   const Guards& guards) {
  if (f(ring.one()) != ring.one()) return "f(1) != 1";
  auto check_pair = [&](Elem a, Elem b) -> std::optional<std::string> {
    if (f(ring.add(a, b)) != ring.add(f(a), f(b))) {
      return "not additive at (" + ring.print(a) + ", " + ring.print(b) + ")";
    }
    if (f(ring.mul(a, b)) != ring.mul(f(a), f(b))) {
      return "not multiplicative at (" + ring.print(a) + ", " + ring.print(b) + ")";
    }
    return std::nullopt;
  };
  const std::uint64_t card = ring.cardinality();
  if (card <= guards.max_pairs / card) {
    for (std::uint64_t a = 0; a < card; ++a) {
      for (std::uint64_t b = 0; b < card; ++b) {
        if (auto err = check_pair(Elem{a}, Elem{b})) return err;
      }
    }
    return std::nullopt;
  }
  if (guards.sample_pairs == 0) {
    throw GuardExceeded("endomorphism check on " + ring.describe() + ": " +
                        std::to_string(card) + "^2 pairs exceed the pair guard and no sample "
                        "budget was supplied");
  }
  std::mt19937_64 rng(guards.sample_seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, card - 1);
  for (std::uint64_t s = 0; s < guards.sample_pairs; ++s) {
    if (auto err = check_pair(Elem{pick(rng)}, Elem{pick(rng)})) return err;
  }
  return std::nullopt;
}

Endomorphism::Endomorphism(RingPtr ring, EndoKind kind, unsigned exponent, Elem subst)
    : ring_(std::move(ring)), kind_(kind), exponent_(exponent), subst_(subst) {
  if (!ring_) throw PreconditionError("endomorphism needs a ring");
}

Endomorphism Endomorphism::identity(RingPtr ring) {
  return Endomorphism(std::move(ring), EndoKind::Identity, 0, Elem{0});
}

Endomorphism Endomorphism::frobenius(RingPtr ring, unsigned e, const Guards& guards) {
  if (!ring || ring->kind() != RingKind::GF) {
    throw ValidationError("Frobenius endomorphism needs a GF ring");
  }
  Endomorphism endo(std::move(ring), EndoKind::FrobeniusPower, e, Elem{0});
  const auto& gf = static_cast<const GaloisField&>(*endo.ring_);
  // Frob^k is the identity, so only e mod k matters.
  endo.frob_power_ = checked_power(gf.characteristic(), e % gf.degree());
  endo.verify(guards);
  endo.build_cache(guards);
  return endo;
}

Endomorphism Endomorphism::substitution(RingPtr ring, Elem u, const Guards& guards) {
  if (!ring || ring->kind() != RingKind::TruncPoly) {
    throw ValidationError("substitution endomorphism needs a TruncPoly ring");
  }
  ring->check_element(u);
  const auto& tr = static_cast<const TruncPolyRing&>(*ring);
  if (!ring->is_zero(ring->pow(u, tr.order()))) {
    throw ValidationError("substitution x -> " + ring->print(u) +
                          " is not an endomorphism: u^" + std::to_string(tr.order()) + " != 0");
  }
  Endomorphism endo(std::move(ring), EndoKind::Substitution, 0, u);
  endo.verify(guards);
  endo.build_cache(guards);
  return endo;
}

Endomorphism Endomorphism::parse(RingPtr ring, std::string_view text, const Guards& guards) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view name = trim(text.substr(0, colon));
  const std::string_view arg = colon == std::string_view::npos ? "" : trim(text.substr(colon + 1));
  if (name == "identity" || name == "id") {
    if (!arg.empty()) throw ParseError("identity takes no argument", colon + 1);
    return identity(std::move(ring));
  }
  if (name == "frobenius" || name == "frob") {
    unsigned e = 1;
    if (!arg.empty()) {
      e = 0;
      for (char c : arg) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("frobenius exponent must be a non-negative integer", colon + 1);
        }
        e = e * 10 + static_cast<unsigned>(c - '0');
      }
    }
    return frobenius(std::move(ring), e, guards);
  }
  if (name == "substitution" || name == "subst") {
    if (arg.empty()) throw ParseError("substitution needs a literal, e.g. substitution:x^2", 0);
    const Elem u = ring->parse(arg);
    return substitution(std::move(ring), u, guards);
  }
  throw ParseError("unknown endomorphism '" + std::string(text) +
                       "' (expected identity, frobenius:<e> or substitution:<literal>)",
                   0);
}

Elem Endomorphism::compute(Elem a) const {
  switch (kind_) {
    case EndoKind::Identity:
      return a;
    case EndoKind::FrobeniusPower:
      return ring_->pow(a, frob_power_);
    case EndoKind::Substitution: {
      const auto c = ring_->coordinates(a);
      Elem r = ring_->zero();
      for (std::size_t i = c.size(); i-- > 0;) {
        r = ring_->add(ring_->mul(r, subst_), ring_->from_integer(static_cast<std::int64_t>(c[i])));
      }
      return r;
    }
  }
  return a;
}

Elem Endomorphism::apply(Elem a) const {
  if (cache_) return (*cache_)[a.code];
  return compute(a);
}

RingElement Endomorphism::apply(const RingElement& a) const {
  if (!a.ring()->same_descriptor(*ring_)) {
    throw MismatchError("endomorphism of " + ring_->describe() + " applied to element of " +
                        a.ring()->describe());
  }
  return {a.ring(), apply(a.value())};
}

void Endomorphism::verify(const Guards& guards) const {
  // Frobenius powers and admissible substitutions are homomorphisms by construction, so a large
  // carrier without a sample budget falls back to a fixed sample instead of refusing.
  Guards g = guards;
  if (g.sample_pairs == 0) g.sample_pairs = 4096;
  if (auto err = check_ring_endomorphism(*ring_, [this](Elem a) { return compute(a); }, g)) {
    throw ValidationError(describe() + " is not a ring endomorphism of " + ring_->describe() +
                          ": " + *err);
  }
}

void Endomorphism::build_cache(const Guards&) {
  if (ring_->cardinality() > kEndoCacheCardinality) return;
  auto table = std::make_shared<std::vector<Elem>>();
  table->reserve(ring_->cardinality());
  for (std::uint64_t c = 0; c < ring_->cardinality(); ++c) table->push_back(compute(Elem{c}));
  cache_ = std::move(table);
}

std::string Endomorphism::describe() const {
  switch (kind_) {
    case EndoKind::Identity:
      return "identity";
    case EndoKind::FrobeniusPower:
      return "frobenius:" + std::to_string(exponent_);
    case EndoKind::Substitution:
      return "substitution:" + ring_->print(subst_);
  }
  return "identity";
}

}  // namespace orekit
