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

#ifndef OREKIT_MATRIX_HPP
#define OREKIT_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orekit/guards.hpp"
#include "orekit/rings.hpp"

namespace orekit {

/// Column vector over a ring.
using Column = std::vector<Elem>;

/// Dense row-major matrix of element codes. The ring is supplied to every operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Elem fill = Elem{0});
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix diagonal(const Column& d);
  static Matrix column(const Column& c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const noexcept { return data_; }
  Column col(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b);
Column mul(const Ring& ring, const Matrix& a, const Column& v);
Matrix map_entries(const Matrix& m, const std::function<Elem(Elem)>& f);
bool is_zero(const Matrix& m);

Column add(const Ring& ring, const Column& a, const Column& b);
Column sub(const Ring& ring, const Column& a, const Column& b);
/// Each entry multiplied on the right by x.
Column mul_right(const Ring& ring, const Column& a, Elem x);
bool is_zero(const Column& v);

/// Two-sided inverse. Gauss-Jordan with unit pivots first; when no unit pivot exists, exhaustive
/// search over all |A|^(n^2) candidates if that fits guards.max_search, else empty.
std::optional<Matrix> inverse(const Ring& ring, const Matrix& m, const Guards& guards = {});

std::string print_matrix(const Ring& ring, const Matrix& m);
std::string print_column(const Ring& ring, const Column& v);

}  // namespace orekit

#endif  // OREKIT_MATRIX_HPP
