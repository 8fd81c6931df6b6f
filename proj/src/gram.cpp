#include "sba/gram.hpp"

#include <stdexcept>

#include "sba/poly.hpp"

namespace sba {

Matrix zero_matrix(std::size_t rows, std::size_t cols, const RingPtr& ring) {
  return Matrix(rows, std::vector<Scalar>(cols, Scalar::zero(ring)));
}

Matrix identity_matrix(std::size_t k, const RingPtr& ring) {
  Matrix m = zero_matrix(k, k, ring);
  for (std::size_t i = 0; i < k; ++i) m[i][i] = Scalar::one(ring);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t r = a.size(), mid = b.size(), c = b[0].size();
  RingPtr ring = a[0][0].ring() ? a[0][0].ring() : b[0][0].ring();
  Matrix out = zero_matrix(r, c, ring);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < mid; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

bool is_symmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(m[i][j] == m[j][i])) return false;
  return true;
}

Scalar det(const Matrix& m) {
  std::size_t k = m.size();
  if (k == 0) throw std::invalid_argument("det: empty matrix");
  RingPtr ring;
  for (const auto& row : m) {
    if (row.size() != k) throw std::invalid_argument("det: matrix not square");
    for (const auto& x : row)
      if (x.ring()) ring = x.ring();
  }
  if (!ring) throw std::invalid_argument("det: no ring");

  // Clear denominators row by row.  Within a row, entries usually repeat the
  // same denominator, so scale by the product of the distinct ones and record
  // each of those atoms; the Bareiss value then equals det times the product
  // of all recorded atoms, which can be divided back out one small factor at
  // a time instead of through one very large gcd.
  std::vector<std::vector<Poly>> p(k, std::vector<Poly>(k, Poly::zero(ring)));
  std::vector<Poly> factors;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Poly> atoms;
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j].is_zero()) continue;
      const Poly& dj = m[i][j].den();
      if (dj.is_constant()) continue;
      bool seen = false;
      for (const auto& a : atoms)
        if (a == dj) {
          seen = true;
          break;
        }
      if (!seen) atoms.push_back(dj);
    }
    Poly f = Poly::one(ring);
    for (const auto& a : atoms) f = f * a;
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j].is_zero()) continue;
      auto q = f.divided_exactly_by(m[i][j].den());
      if (!q) throw std::logic_error("det: denominator clearing failed");
      p[i][j] = m[i][j].num() * *q;
    }
    for (auto& a : atoms) factors.push_back(std::move(a));
  }

  // Fraction-free Bareiss elimination with row pivoting.
  int sign = 1;
  Poly prev = Poly::one(ring);
  for (std::size_t col = 0; col + 1 < k; ++col) {
    std::size_t piv = col;
    while (piv < k && p[piv][col].is_zero()) ++piv;
    if (piv == k) return Scalar::zero(ring);
    if (piv != col) {
      std::swap(p[piv], p[col]);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < k; ++i) {
      for (std::size_t j = col + 1; j < k; ++j) {
        Poly t = p[col][col] * p[i][j] - p[i][col] * p[col][j];
        auto q = t.divided_exactly_by(prev);
        if (!q) throw std::logic_error("det: inexact Bareiss division");
        p[i][j] = std::move(*q);
      }
      p[i][col] = Poly::zero(ring);
    }
    prev = p[col][col];
  }
  Poly d = p[k - 1][k - 1];
  if (sign < 0) d = d * mpq_class(-1);
  Poly den = Poly::one(ring);
  for (const auto& f : factors) {
    if (auto q = d.divided_exactly_by(f))
      d = std::move(*q);
    else
      den = den * f;
  }
  return Scalar::frac(std::move(d), std::move(den));
}

int rank_at(const Matrix& m, const std::vector<mpq_class>& point) {
  std::vector<std::vector<mpq_class>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    std::vector<mpq_class> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.is_zero() ? mpq_class(0) : x.eval_q(point));
    a.push_back(std::move(r));
  }
  int rank = 0;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

FpMatrix eval_fp_matrix(const Matrix& m, const std::vector<std::uint64_t>& point,
                        std::uint64_t p) {
  FpMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<std::uint64_t> r;
    r.reserve(row.size());
    for (const auto& x : row) r.push_back(x.is_zero() ? 0 : x.eval_fp(point, p));
    out.push_back(std::move(r));
  }
  return out;
}

FpMatrix fp_mat_mul(const FpMatrix& a, const FpMatrix& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::size_t r = a.size(), mid = b.size(), c = b[0].size();
  FpMatrix out(r, std::vector<std::uint64_t>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      if (a[i][k] == 0) continue;
      std::uint64_t aik = a[i][k];
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] = (out[i][j] + aik * b[k][j]) % p;
    }
  return out;
}

namespace {

// Row echelon reduction mod p; returns pivot columns.
std::vector<std::size_t> echelon_fp(FpMatrix& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = fp_inv(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] * inv) % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_fp(FpMatrix m, std::uint64_t p) {
  return static_cast<int>(echelon_fp(m, p).size());
}

std::vector<std::vector<std::uint64_t>> kernel_fp(FpMatrix m, std::uint64_t p) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = echelon_fp(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    // Back substitution: row r has pivot at pivots[r] with value 1.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint64_t val = m[r][free] % p;
      if (val) v[pivots[r]] = p - val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sba
