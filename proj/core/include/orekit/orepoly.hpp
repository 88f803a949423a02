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

// Elements of S = A[t1..tn; sigma, delta] in left normal form: sum of c_w w with the coefficient
// on the left of each word w over {t1..tn}.
//
// Variable indices are 0-based in this API and 1-based in text ("t1") and JSON.

#ifndef OREKIT_OREPOLY_HPP
#define OREKIT_OREPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orekit/rings.hpp"
#include "orekit/twist.hpp"

namespace orekit {

using Word = std::vector<std::uint16_t>;

/// Deglex: shorter words first, then lexicographic with t1 < t2 < ... .
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using TermMap = std::map<Word, Elem, DeglexLess>;

class OrePoly {
 public:
  /// The zero polynomial.
  explicit OrePoly(ContextPtr ctx);

  static OrePoly constant(ContextPtr ctx, Elem c);
  static OrePoly variable(ContextPtr ctx, std::size_t i);
  static OrePoly monomial(ContextPtr ctx, Elem c, Word w);

  const ContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Elem coeff(const Word& w) const;
  /// Longest word length; 0 for constants and for zero.
  std::size_t degree() const noexcept;
  bool is_constant() const noexcept { return degree() == 0; }

  /// Adds c w, dropping the term if it cancels.
  void add_term(const Word& w, Elem c);

  friend bool operator==(const OrePoly& lhs, const OrePoly& rhs);

 private:
  ContextPtr ctx_;
  TermMap terms_;
};

OrePoly poly_add(const OrePoly& f, const OrePoly& g);
OrePoly poly_sub(const OrePoly& f, const OrePoly& g);
OrePoly poly_neg(const OrePoly& f);
/// c f.
OrePoly scalar_mul(Elem c, const OrePoly& f);
/// The product in S, expanded with the commutation rule; term count bounded by guards.max_terms.
OrePoly poly_mul(const OrePoly& f, const OrePoly& g);
OrePoly poly_pow(const OrePoly& f, std::uint64_t e);

OrePoly operator+(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f);
OrePoly operator*(const OrePoly& f, const OrePoly& g);

/// Normal form of t_i a: sum_j sigma_ij(a) t_j + delta_i(a).
OrePoly push_variable(const ContextPtr& ctx, std::size_t i, Elem a);

/// Deglex-maximal word and its coefficient. Throws PreconditionError on zero.
std::pair<Word, Elem> deglex_leading(const OrePoly& f);

/// Grammar (whitespace free between tokens):
///   expr    := ['+'|'-'] term {('+'|'-') term}
///   term    := power {['*'] power}
///   power   := primary ['^' uint]
///   primary := uint | g | x | t<index> | '(' expr ')' | '[' matrix literal ']'
/// Factors multiply in S, so "t1 g" is pushed into normal form.
OrePoly parse_poly(const ContextPtr& ctx, std::string_view text);
/// Deglex-descending terms joined by " + ", e.g. "(g+1) t1^2*t2 + t1 + g".
std::string print_poly(const OrePoly& f);
std::string print_word(const Word& w);

/// Context of the n = 1 target A[t; alpha, d] for a source with sigma(a) = [[alpha(a), d(a)],
/// [0, a]] and zero delta. Throws PreconditionError when the source has another shape.
ContextPtr univariate_target(const TwistContext& source);
/// The homomorphism t1 -> t, t2 -> 1, a -> a.
OrePoly univariate_specialize(const OrePoly& f, const ContextPtr& target);

}  // namespace orekit

#endif  // OREKIT_OREPOLY_HPP
