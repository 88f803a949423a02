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

#include "orekit/modstruct.hpp"

#include <utility>

#include "orekit/error.hpp"

namespace orekit {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

using Rows = std::vector<std::vector<std::uint64_t>>;

// In-place reduced row echelon form over Z/p; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Rows& a, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t r = row;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[row]);
    const std::uint64_t inv = powmod(a[row][c], p - 2, p);
    for (auto& v : a[row]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        a[i][k] = (a[i][k] + p - mulmod(f, a[row][k], p)) % p;
      }
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

void require_same_context(const ModulePresentation& p1, const ModulePresentation& p2) {
  if (p1.ctx != p2.ctx) throw MismatchError("presentations belong to different twist contexts");
}

Column scale_left(const Ring& ring, Elem a, const Column& u) {
  Column out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = ring.mul(a, u[k]);
  return out;
}

Matrix integer_multiple(const Ring& ring, const Matrix& m, std::uint64_t c) {
  const Elem s = ring.from_integer(static_cast<std::int64_t>(c));
  return map_entries(m, [&](Elem e) { return ring.mul(s, e); });
}

}  // namespace

ModulePresentation make_presentation(ContextPtr ctx, std::vector<Matrix> x) {
  if (!ctx) throw PreconditionError("presentation needs a twist context");
  if (x.size() != ctx->n()) {
    throw PreconditionError("presentation needs " + std::to_string(ctx->n()) + " matrices, got " +
                            std::to_string(x.size()));
  }
  const std::size_t l = x.front().rows();
  if (l < 1) throw PreconditionError("presentation rank must be at least 1");
  for (const auto& m : x) {
    if (m.rows() != l || m.cols() != l) {
      throw PreconditionError("every X_i must be " + std::to_string(l) + "x" + std::to_string(l));
    }
    for (Elem e : m.data()) ctx->ring()->check_element(e);
  }
  return ModulePresentation{std::move(ctx), l, std::move(x)};
}

ModulePresentation module_from_point(ContextPtr ctx, const Point& a) {
  check_point(*ctx, a);
  std::vector<Matrix> x;
  for (Elem ai : a) x.emplace_back(1, 1, std::vector<Elem>{ai});
  return make_presentation(std::move(ctx), std::move(x));
}

Column module_apply(const ModulePresentation& p, std::size_t i, const Column& u) {
  const TwistContext& ctx = *p.ctx;
  const Ring& ring = *ctx.ring();
  if (u.size() != p.rank) {
    throw PreconditionError("vector has " + std::to_string(u.size()) + " entries, rank is " +
                            std::to_string(p.rank));
  }
  if (i >= ctx.n()) throw PreconditionError("variable index out of range");
  Column out(p.rank, ring.zero());
  for (std::size_t m = 0; m < p.rank; ++m) {
    Elem acc = ctx.delta_entry(i, u[m]);
    for (std::size_t j = 0; j < ctx.n(); ++j) {
      for (std::size_t k = 0; k < p.rank; ++k) {
        acc = ring.add(acc, ring.mul(ctx.sigma_entry(i, j, u[k]), p.x[j](m, k)));
      }
    }
    out[m] = acc;
  }
  return out;
}

Column hom_apply(const Ring& ring, const Matrix& m, const Column& u) {
  if (u.size() != m.cols()) throw PreconditionError("dimension mismatch applying a module map");
  Column out(m.rows(), ring.zero());
  for (std::size_t s = 0; s < m.rows(); ++s) {
    for (std::size_t k = 0; k < m.cols(); ++k) out[s] = ring.add(out[s], ring.mul(u[k], m(s, k)));
  }
  return out;
}

std::vector<Matrix> hom_residuals(const Matrix& m, const ModulePresentation& p1,
                                  const ModulePresentation& p2) {
  require_same_context(p1, p2);
  const TwistContext& ctx = *p1.ctx;
  const Ring& ring = *ctx.ring();
  const std::size_t l1 = p1.rank, l2 = p2.rank;
  if (m.rows() != l2 || m.cols() != l1) {
    throw PreconditionError("hom matrix must be " + std::to_string(l2) + "x" + std::to_string(l1));
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    Matrix res(l2, l1, ring.zero());
    for (std::size_t r = 0; r < l2; ++r) {
      for (std::size_t k = 0; k < l1; ++k) {
        Elem lhs = ring.zero();
        for (std::size_t mm = 0; mm < l1; ++mm) {
          lhs = ring.add(lhs, ring.mul(p1.x[i](mm, k), m(r, mm)));
        }
        Elem rhs = ctx.delta_entry(i, m(r, k));
        for (std::size_t j = 0; j < ctx.n(); ++j) {
          for (std::size_t s = 0; s < l2; ++s) {
            rhs = ring.add(rhs, ring.mul(ctx.sigma_entry(i, j, m(s, k)), p2.x[j](r, s)));
          }
        }
        res(r, k) = ring.sub(lhs, rhs);
      }
    }
    out.push_back(std::move(res));
  }
  return out;
}

HomSolution hom_solve(const ModulePresentation& p1, const ModulePresentation& p2) {
  require_same_context(p1, p2);
  const TwistContext& ctx = *p1.ctx;
  ctx.require_usable();
  const Ring& ring = *ctx.ring();
  const Guards& guards = ctx.guards();
  const std::size_t l1 = p1.rank, l2 = p2.rank;
  HomSolution sol;
  sol.rows = l2;
  sol.cols = l1;

  if (const auto p = ring.prime_subfield_order()) {
    const std::size_t d = ring.dimension();
    const std::size_t unknowns = l2 * l1 * d;
    const std::size_t equations = ctx.n() * l2 * l1 * d;
    if (unknowns * equations > guards.max_search) {
      throw GuardExceeded("hom_solve linear system of " + std::to_string(equations) + "x" +
                          std::to_string(unknowns) + " exceeds guard " +
                          std::to_string(guards.max_search));
    }
    // Column u of the system is the residual of the u-th coordinate basis matrix.
    Rows system(equations, std::vector<std::uint64_t>(unknowns, 0));
    for (std::size_t u = 0; u < unknowns; ++u) {
      const std::size_t entry = u / d, c = u % d;
      std::vector<std::uint64_t> coords(d, 0);
      coords[c] = 1;
      Matrix m(l2, l1, ring.zero());
      m(entry / l1, entry % l1) = ring.from_coordinates(coords);
      std::size_t row = 0;
      for (const Matrix& res : hom_residuals(m, p1, p2)) {
        for (Elem e : res.data()) {
          for (auto v : ring.coordinates(e)) system[row++][u] = v;
        }
      }
    }
    const auto pivots = rref(system, unknowns, *p);
    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivots) is_pivot[c] = true;
    Rows kernel;
    for (std::size_t f = 0; f < unknowns; ++f) {
      if (is_pivot[f]) continue;
      std::vector<std::uint64_t> v(unknowns, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (*p - system[r][f]) % *p;
      kernel.push_back(std::move(v));
    }
    rref(kernel, unknowns, *p);
    for (const auto& v : kernel) {
      Matrix m(l2, l1, ring.zero());
      for (std::size_t entry = 0; entry < l2 * l1; ++entry) {
        std::vector<std::uint64_t> coords(v.begin() + static_cast<std::ptrdiff_t>(entry * d),
                                          v.begin() + static_cast<std::ptrdiff_t>((entry + 1) * d));
        m(entry / l1, entry % l1) = ring.from_coordinates(coords);
      }
      sol.basis.push_back(std::move(m));
    }
    sol.linear = true;
    sol.prime = *p;
    sol.dimension = sol.basis.size();
    std::uint64_t count = 1;
    bool fits = true;
    for (std::size_t i = 0; i < sol.dimension && fits; ++i) {
      if (count > UINT64_MAX / *p) fits = false;
      else count *= *p;
    }
    if (fits) sol.count = count;
    return sol;
  }

  // Enumeration over all l2 x l1 matrices.
  const std::uint64_t card = ring.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l1 * l2; ++i) {
    if (total > guards.max_search / card) {
      throw GuardExceeded("hom_solve enumeration of " + std::to_string(card) + "^" +
                          std::to_string(l1 * l2) + " matrices exceeds guard " +
                          std::to_string(guards.max_search));
    }
    total *= card;
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Elem> data(l2 * l1);
    std::uint64_t x = code;
    for (auto& e : data) {
      e = Elem{x % card};
      x /= card;
    }
    Matrix m(l2, l1, std::move(data));
    bool ok = true;
    for (const Matrix& res : hom_residuals(m, p1, p2)) {
      if (!is_zero(res)) {
        ok = false;
        break;
      }
    }
    if (ok) sol.basis.push_back(std::move(m));
  }
  sol.count = sol.basis.size();
  return sol;
}

std::vector<Matrix> all_solutions(const HomSolution& sol, const TwistContext& ctx) {
  if (!sol.linear) return sol.basis;
  const Ring& ring = *ctx.ring();
  if (!sol.count || *sol.count > ctx.guards().max_search) {
    throw GuardExceeded("listing all hom solutions exceeds guard " +
                        std::to_string(ctx.guards().max_search));
  }
  std::vector<Matrix> out;
  out.reserve(*sol.count);
  for (std::uint64_t code = 0; code < *sol.count; ++code) {
    Matrix acc(sol.rows, sol.cols, ring.zero());
    std::uint64_t x = code;
    for (const Matrix& b : sol.basis) {
      acc = add(ring, acc, integer_multiple(ring, b, x % sol.prime));
      x /= sol.prime;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

HomCheck is_module_hom(const Matrix& m, const ModulePresentation& p1,
                       const ModulePresentation& p2) {
  const TwistContext& ctx = *p1.ctx;
  const Ring& ring = *ctx.ring();
  HomCheck check;
  check.residuals = hom_residuals(m, p1, p2);
  for (const Matrix& res : check.residuals) {
    if (!is_zero(res)) check.condition_iii = false;
  }

  const std::uint64_t card = ring.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p1.rank; ++i) {
    if (total > ctx.guards().max_ring_card / card) return check;
    total *= card;
  }
  check.condition_ii_checked = true;
  for (std::uint64_t code = 0; code < total && check.condition_ii; ++code) {
    Column u(p1.rank);
    std::uint64_t x = code;
    for (auto& e : u) {
      e = Elem{x % card};
      x /= card;
    }
    const Column image = hom_apply(ring, m, u);
    for (std::size_t i = 0; i < ctx.n(); ++i) {
      if (hom_apply(ring, m, module_apply(p1, i, u)) != module_apply(p2, i, image)) {
        check.condition_ii = false;
        check.witness_u = u;
        check.witness_i = i;
        break;
      }
    }
  }
  return check;
}

std::optional<std::pair<std::size_t, Elem>> pmt_law_violation(const ModulePresentation& p,
                                                              const Column& u) {
  const TwistContext& ctx = *p.ctx;
  const Ring& ring = *ctx.ring();
  std::vector<Column> tu;
  for (std::size_t j = 0; j < ctx.n(); ++j) tu.push_back(module_apply(p, j, u));
  for (Elem a : enumerate(ring, ctx.guards().max_ring_card)) {
    const Column au = scale_left(ring, a, u);
    for (std::size_t i = 0; i < ctx.n(); ++i) {
      Column rhs = scale_left(ring, ctx.delta_entry(i, a), u);
      for (std::size_t j = 0; j < ctx.n(); ++j) {
        rhs = add(ring, rhs, scale_left(ring, ctx.sigma_entry(i, j, a), tu[j]));
      }
      if (module_apply(p, i, au) != rhs) return std::make_pair(i, a);
    }
  }
  return std::nullopt;
}

}  // namespace orekit
