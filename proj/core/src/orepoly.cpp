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

#include "orekit/orepoly.hpp"

#include <cctype>
#include <limits>

#include "orekit/error.hpp"

namespace orekit {
namespace {

void require_context(const ContextPtr& ctx) {
  if (!ctx) throw PreconditionError("polynomial needs a twist context");
}

void require_same(const OrePoly& f, const OrePoly& g) {
  if (f.context() != g.context()) {
    throw MismatchError("polynomials belong to different twist contexts");
  }
}

void check_terms(const TwistContext& ctx, std::size_t count) {
  if (count > ctx.guards().max_terms) {
    throw GuardExceeded("polynomial expansion exceeds the term guard " +
                        std::to_string(ctx.guards().max_terms));
  }
}

// t_i (sum_u e_u u) in normal form, as a term map.
TermMap push_left(const TwistContext& ctx, std::size_t i, const TermMap& p) {
  const Ring& ring = *ctx.ring();
  TermMap out;
  auto accumulate = [&](Word w, Elem c) {
    if (ring.is_zero(c)) return;
    auto [it, inserted] = out.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) out.erase(it);
    }
  };
  for (const auto& [u, e] : p) {
    for (std::size_t j = 0; j < ctx.n(); ++j) {
      const Elem s = ctx.sigma_entry(i, j, e);
      if (ring.is_zero(s)) continue;
      Word w;
      w.reserve(u.size() + 1);
      w.push_back(static_cast<std::uint16_t>(j));
      w.insert(w.end(), u.begin(), u.end());
      accumulate(std::move(w), s);
    }
    accumulate(u, ctx.delta_entry(i, e));
  }
  check_terms(ctx, out.size());
  return out;
}

// Normal form of the word v times the scalar d.
TermMap word_times_scalar(const TwistContext& ctx, const Word& v, Elem d) {
  TermMap p;
  if (ctx.ring()->is_zero(d)) return p;
  p.emplace(Word{}, d);
  for (std::size_t k = v.size(); k-- > 0;) p = push_left(ctx, v[k], p);
  return p;
}

}  // namespace

OrePoly::OrePoly(ContextPtr ctx) : ctx_(std::move(ctx)) { require_context(ctx_); }

OrePoly OrePoly::constant(ContextPtr ctx, Elem c) { return monomial(std::move(ctx), c, {}); }

OrePoly OrePoly::variable(ContextPtr ctx, std::size_t i) {
  require_context(ctx);
  if (i >= ctx->n()) {
    throw PreconditionError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                            std::to_string(ctx->n()));
  }
  const Elem one = ctx->ring()->one();
  return monomial(std::move(ctx), one, Word{static_cast<std::uint16_t>(i)});
}

OrePoly OrePoly::monomial(ContextPtr ctx, Elem c, Word w) {
  OrePoly f(std::move(ctx));
  f.ctx_->ring()->check_element(c);
  for (auto letter : w) {
    if (letter >= f.ctx_->n()) throw PreconditionError("word letter out of range");
  }
  f.add_term(w, c);
  return f;
}

Elem OrePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ctx_->ring()->zero() : it->second;
}

std::size_t OrePoly::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void OrePoly::add_term(const Word& w, Elem c) {
  const Ring& ring = *ctx_->ring();
  if (ring.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) terms_.erase(it);
  }
}

bool operator==(const OrePoly& lhs, const OrePoly& rhs) {
  return lhs.ctx_ == rhs.ctx_ && lhs.terms_ == rhs.terms_;
}

OrePoly poly_add(const OrePoly& f, const OrePoly& g) {
  require_same(f, g);
  OrePoly out = f;
  for (const auto& [w, c] : g.terms()) out.add_term(w, c);
  return out;
}

OrePoly poly_neg(const OrePoly& f) {
  OrePoly out(f.context());
  const Ring& ring = *f.context()->ring();
  for (const auto& [w, c] : f.terms()) out.add_term(w, ring.neg(c));
  return out;
}

OrePoly poly_sub(const OrePoly& f, const OrePoly& g) {
  require_same(f, g);
  return poly_add(f, poly_neg(g));
}

OrePoly scalar_mul(Elem c, const OrePoly& f) {
  OrePoly out(f.context());
  const Ring& ring = *f.context()->ring();
  for (const auto& [w, e] : f.terms()) out.add_term(w, ring.mul(c, e));
  return out;
}

OrePoly poly_mul(const OrePoly& f, const OrePoly& g) {
  require_same(f, g);
  const TwistContext& ctx = *f.context();
  ctx.require_usable();
  const Ring& ring = *ctx.ring();
  OrePoly out(f.context());
  for (const auto& [v, c] : f.terms()) {
    for (const auto& [w, d] : g.terms()) {
      for (const auto& [u, e] : word_times_scalar(ctx, v, d)) {
        Word uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        out.add_term(uw, ring.mul(c, e));
      }
      check_terms(ctx, out.size());
    }
  }
  return out;
}

OrePoly poly_pow(const OrePoly& f, std::uint64_t e) {
  OrePoly result = OrePoly::constant(f.context(), f.context()->ring()->one());
  OrePoly base = f;
  while (e) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return result;
}

OrePoly operator+(const OrePoly& f, const OrePoly& g) { return poly_add(f, g); }
OrePoly operator-(const OrePoly& f, const OrePoly& g) { return poly_sub(f, g); }
OrePoly operator-(const OrePoly& f) { return poly_neg(f); }
OrePoly operator*(const OrePoly& f, const OrePoly& g) { return poly_mul(f, g); }

OrePoly push_variable(const ContextPtr& ctx, std::size_t i, Elem a) {
  require_context(ctx);
  ctx->require_usable();
  if (i >= ctx->n()) throw PreconditionError("variable index out of range");
  ctx->ring()->check_element(a);
  OrePoly out(ctx);
  for (const auto& [w, c] : push_left(*ctx, i, TermMap{{Word{}, a}})) out.add_term(w, c);
  return out;
}

std::pair<Word, Elem> deglex_leading(const OrePoly& f) {
  if (f.is_zero()) throw PreconditionError("the zero polynomial has no leading term");
  const auto& last = *f.terms().rbegin();
  return {last.first, last.second};
}

// ---------------------------------------------------------------------------------------------
// Text

namespace {

class PolyParser {
 public:
  PolyParser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  OrePoly parse() {
    OrePoly f = expression();
    skip();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "' in polynomial", pos_);
    }
    return f;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_primary() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 't') return true;
    if (c == '[' && ctx_->ring()->kind() == RingKind::Matrix) return true;
    const auto sym = ctx_->ring()->symbol();
    return sym && c == *sym;
  }

  OrePoly expression() {
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    OrePoly acc = term();
    if (negative) acc = poly_neg(acc);
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      OrePoly t = term();
      acc = c == '+' ? poly_add(acc, t) : poly_sub(acc, t);
    }
    return acc;
  }

  OrePoly term() {
    OrePoly acc = power();
    while (true) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc = multiply(acc, power());
      } else if (starts_primary()) {
        acc = multiply(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  OrePoly multiply(const OrePoly& f, const OrePoly& g) {
    // A constant on the left needs no commutation.
    if (f.is_constant()) return scalar_mul(f.coeff({}), g);
    return poly_mul(f, g);
  }

  std::uint64_t read_uint() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", pos_);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError("number too large", pos_);
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  OrePoly power() {
    OrePoly base = primary();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    return poly_pow(base, read_uint());
  }

  OrePoly primary() {
    skip();
    const Ring& ring = *ctx_->ring();
    const char c = peek();
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return OrePoly::constant(ctx_, ring.parse(text_.substr(start, pos_ - start)));
    }
    if (c == 't') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected a variable index after 't'", pos_);
      }
      const std::uint64_t idx = read_uint();
      if (idx < 1 || idx > ctx_->n()) {
        throw ParseError("unknown variable t" + std::to_string(idx) + " (n = " +
                             std::to_string(ctx_->n()) + ")",
                         start);
      }
      return OrePoly::variable(ctx_, static_cast<std::size_t>(idx - 1));
    }
    if (c == '(') {
      ++pos_;
      OrePoly inner = expression();
      skip();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == '[' && ring.kind() == RingKind::Matrix) {
      int depth = 0;
      std::size_t end = pos_;
      for (; end < text_.size(); ++end) {
        if (text_[end] == '[') ++depth;
        if (text_[end] == ']' && --depth == 0) break;
      }
      if (end == text_.size()) throw ParseError("unterminated matrix literal", start);
      pos_ = end + 1;
      try {
        return OrePoly::constant(ctx_, ring.parse(text_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.position());
      }
    }
    const auto sym = ring.symbol();
    if (sym && c == *sym) {
      ++pos_;
      return OrePoly::constant(ctx_, ring.generator());
    }
    if (c == '\0') throw ParseError("unexpected end of polynomial", pos_);
    throw ParseError(std::string("unexpected '") + c + "' in polynomial", pos_);
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_coeff(const Ring& ring, Elem c) {
  std::string s = ring.print(c);
  if (s.front() != '[' && s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

OrePoly parse_poly(const ContextPtr& ctx, std::string_view text) {
  require_context(ctx);
  return PolyParser(ctx, text).parse();
}

std::string print_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(w[i] + 1);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string print_poly(const OrePoly& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.context()->ring();
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& [w, c] = *it;
    if (w.empty()) {
      out += ring.print(c);
    } else if (c == ring.one()) {
      out += print_word(w);
    } else {
      out += print_coeff(ring, c) + " " + print_word(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Univariate specialization

ContextPtr univariate_target(const TwistContext& source) {
  const Ring& ring = *source.ring();
  if (source.n() != 2) throw PreconditionError("univariate specialization needs n = 2");
  if (ring.cardinality() > source.guards().max_ring_card) {
    throw GuardExceeded("univariate specialization enumerates the ring; cardinality exceeds guard");
  }
  std::vector<Matrix> alpha;
  std::vector<Elem> d;
  for (Elem a : enumerate(ring, source.guards().max_ring_card)) {
    const Matrix s = source.sigma(a);
    if (!ring.is_zero(s(1, 0)) || s(1, 1) != a) {
      throw PreconditionError("sigma is not of the form [[alpha(a), d(a)], [0, a]] at a = " +
                              ring.print(a));
    }
    if (!is_zero(source.delta(a))) {
      throw PreconditionError("univariate specialization needs delta = 0");
    }
    alpha.emplace_back(1, 1, std::vector<Elem>{s(0, 0)});
    d.push_back(s(0, 1));
  }
  return make_context(source.ring(), table_sigma(std::move(alpha)),
                      coordinate_delta({TableMap{std::move(d)}}), source.guards());
}

OrePoly univariate_specialize(const OrePoly& f, const ContextPtr& target) {
  if (f.context()->n() != 2 || !target || target->n() != 1) {
    throw PreconditionError("univariate specialization maps n = 2 to n = 1");
  }
  if (!f.context()->ring()->same_descriptor(*target->ring())) {
    throw MismatchError("specialization target has a different ring");
  }
  OrePoly out(target);
  for (const auto& [w, c] : f.terms()) {
    Word image;
    for (auto letter : w) {
      if (letter == 0) image.push_back(0);
    }
    out.add_term(image, c);
  }
  return out;
}

}  // namespace orekit
