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

#include "orekit/matrix.hpp"

#include <algorithm>
#include <utility>

#include "orekit/error.hpp"

namespace orekit {

Matrix::Matrix(std::size_t rows, std::size_t cols, Elem fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw PreconditionError("matrix data size mismatch");
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::diagonal(const Column& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(const Column& c) { return Matrix(c.size(), 1, c); }

Column Matrix::col(std::size_t c) const {
  Column out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw PreconditionError(std::string("dimension mismatch in ") + what);
}

}  // namespace

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix addition");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.add(a(r, c), b(r, c));
  }
  return out;
}

Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_shape(a.rows() == b.rows() && a.cols() == b.cols(), "matrix subtraction");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.sub(a(r, c), b(r, c));
  }
  return out;
}

Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_shape(a.cols() == b.rows(), "matrix product");
  Matrix out(a.rows(), b.cols(), ring.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(r, k);
      if (ring.is_zero(x)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) = ring.add(out(r, c), ring.mul(x, b(k, c)));
      }
    }
  }
  return out;
}

Column mul(const Ring& ring, const Matrix& a, const Column& v) {
  require_shape(a.cols() == v.size(), "matrix-vector product");
  Column out(a.rows(), ring.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[r] = ring.add(out[r], ring.mul(a(r, k), v[k]));
  }
  return out;
}

Matrix map_entries(const Matrix& m, const std::function<Elem(Elem)>& f) {
  std::vector<Elem> data(m.data().size());
  std::transform(m.data().begin(), m.data().end(), data.begin(), f);
  return Matrix(m.rows(), m.cols(), std::move(data));
}

bool is_zero(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](Elem e) { return e.code == 0; });
}

Column add(const Ring& ring, const Column& a, const Column& b) {
  require_shape(a.size() == b.size(), "column addition");
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

Column sub(const Ring& ring, const Column& a, const Column& b) {
  require_shape(a.size() == b.size(), "column subtraction");
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
  return out;
}

Column mul_right(const Ring& ring, const Column& a, Elem x) {
  Column out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(a[i], x);
  return out;
}

bool is_zero(const Column& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.code == 0; });
}

namespace {

std::optional<Matrix> gauss_jordan(const Ring& ring, Matrix a) {
  const std::size_t n = a.rows();
  Matrix b = Matrix::identity(ring, n);
  auto swap_rows = [n](Matrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<Elem> pivot_inv;
    std::size_t pivot = c;
    for (; pivot < n; ++pivot) {
      if ((pivot_inv = ring.try_inverse(a(pivot, c)))) break;
    }
    if (!pivot_inv) return std::nullopt;
    swap_rows(a, pivot, c);
    swap_rows(b, pivot, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) = ring.mul(*pivot_inv, a(c, k));
      b(c, k) = ring.mul(*pivot_inv, b(c, k));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Elem f = a(r, c);
      if (ring.is_zero(f)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) = ring.sub(a(r, k), ring.mul(f, a(c, k)));
        b(r, k) = ring.sub(b(r, k), ring.mul(f, b(c, k)));
      }
    }
  }
  return b;
}

}  // namespace

std::optional<Matrix> inverse(const Ring& ring, const Matrix& m, const Guards& guards) {
  require_shape(m.rows() == m.cols(), "matrix inverse");
  const std::size_t n = m.rows();
  const Matrix id = Matrix::identity(ring, n);
  if (auto b = gauss_jordan(ring, m)) {
    if (mul(ring, m, *b) == id && mul(ring, *b, m) == id) return b;
  }
  // Over non-local rings a unit pivot may be missing even for invertible matrices.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (count > guards.max_search / ring.cardinality()) return std::nullopt;
    count *= ring.cardinality();
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> data(n * n);
    std::uint64_t x = code;
    for (auto& e : data) {
      e = Elem{x % ring.cardinality()};
      x /= ring.cardinality();
    }
    Matrix b(n, n, std::move(data));
    if (mul(ring, m, b) == id && mul(ring, b, m) == id) return b;
  }
  return std::nullopt;
}

std::string print_matrix(const Ring& ring, const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += ',';
    out += '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += ring.print(m(r, c));
    }
    out += ']';
  }
  return out + "]";
}

std::string print_column(const Ring& ring, const Column& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring.print(v[i]);
  }
  return out + ")";
}

}  // namespace orekit
