#include "cartan235/symcore/linalg.hpp"

#include <utility>

#include "cartan235/error.hpp"

namespace cartan235::symcore {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RationalFunction s;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(s);
    }
  }
  return c;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !(e == RationalFunction(1)) : !e.is_zero()) return false;
    }
  }
  return true;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  Polynomial g = gcd(a, b);
  return a.divide_exact(g) * b;
}

// Multiplies each row by the lcm of its denominators; returns the polynomial
// matrix and the row multipliers.
std::pair<PolyMatrix, std::vector<Polynomial>> clear_denominators(const Matrix& a) {
  PolyMatrix p(a.rows(), std::vector<Polynomial>(a.cols()));
  std::vector<Polynomial> multipliers(a.rows(), Polynomial(1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Polynomial l(1);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) l = lcm(l, a(i, j).denominator());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& e = a(i, j);
      if (e.is_zero()) continue;
      p[i][j] = e.numerator() * l.divide_exact(e.denominator());
    }
    multipliers[i] = std::move(l);
  }
  return {std::move(p), std::move(multipliers)};
}

std::optional<std::size_t> choose_pivot(const PolyMatrix& m, std::size_t k, std::size_t from) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.size(); ++r) {
    if (m[r][k].is_zero()) continue;
    if (!best || m[r][k].size() < m[*best][k].size()) best = r;
  }
  return best;
}

}  // namespace

RationalFunction determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return RationalFunction(1);
  auto [m, multipliers] = clear_denominators(a);
  Polynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    auto pivot = choose_pivot(m, k, k);
    if (!pivot) return RationalFunction();
    if (*pivot != k) {
      std::swap(m[*pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v.scaled(1 / prev.constant_value()) : v.divide_exact(prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  Polynomial denom(1);
  for (const auto& l : multipliers) denom = denom * l;
  return RationalFunction::fraction(m[n - 1][n - 1].scaled(sign), denom);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  auto [p, multipliers] = clear_denominators(a);
  // Augment with the identity and run fraction-free Gauss-Jordan: every
  // division by the previous pivot is exact, and at the end the left block is
  // d I and the right block d P^{-1} with d = +-det P.
  for (std::size_t i = 0; i < n; ++i) {
    p[i].resize(2 * n);
    p[i][n + i] = Polynomial(1);
  }
  Polynomial prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    auto pivot = choose_pivot(p, k, k);
    if (!pivot) return std::nullopt;
    if (*pivot != k) std::swap(p[*pivot], p[k]);
    const Polynomial pk = p[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Polynomial lik = p[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Polynomial v = pk * p[i][j];
        if (!lik.is_zero() && !p[k][j].is_zero()) v -= lik * p[k][j];
        p[i][j] = prev.is_constant() ? v.scaled(1 / prev.constant_value()) : v.divide_exact(prev);
      }
      p[i][k] = Polynomial();
    }
    prev = pk;
  }
  const Polynomial& d = p[n - 1][n - 1];
  // A = diag(L)^{-1} P, so A^{-1} = P^{-1} diag(L).
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p[i][n + j].is_zero()) continue;
      inv(i, j) = RationalFunction::fraction(p[i][n + j] * multipliers[j], d);
    }
  }
  return inv;
}

LinearSolution solve(const Matrix& a, const std::vector<RationalFunction>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<RationalFunction>> m(rows, std::vector<RationalFunction>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      if (!best || m[i][c].term_count() < m[*best][c].term_count()) best = i;
    }
    if (!best) continue;
    std::swap(m[*best], m[r]);
    RationalFunction inv = RationalFunction(1) / m[r][c];
    for (std::size_t j = c; j <= cols; ++j) {
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RationalFunction factor = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= factor * m[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.rank = r;
  out.nullity = cols - r;
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i) {
    if (!m[i][cols].is_zero()) out.consistent = false;
  }
  out.particular.assign(cols, RationalFunction());
  if (out.consistent) {
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) out.particular[pivot_cols[k]] = m[k][cols];
  }
  return out;
}

}  // namespace cartan235::symcore
