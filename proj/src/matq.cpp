#include "helly/matq.hpp"

#include "helly/errors.hpp"

#include <utility>

namespace helly {

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool MatQ::operator<(const MatQ& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    int c = cmp(e_[k], other.e_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::Internal, "matrix product shape mismatch");
  MatQ c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::Internal, "matrix sum shape mismatch");
  MatQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

MatQ operator-(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorKind::Internal, "matrix difference shape mismatch");
  MatQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

MatQ operator*(const Rational& s, const MatQ& a) {
  MatQ c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

VecQ operator*(const MatQ& a, const VecQ& x) {
  if (static_cast<std::size_t>(a.cols()) != x.size()) fail(ErrorKind::Internal, "matrix-vector shape mismatch");
  VecQ y(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) y[i] += a.at(i, j) * x[j];
  return y;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "vector sum shape mismatch");
  VecQ c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "vector difference shape mismatch");
  VecQ c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

VecQ vec_scale(const Rational& s, const VecQ& a) {
  VecQ c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

bool vec_is_zero(const VecQ& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

VecQ vec_zero(int n) { return VecQ(static_cast<std::size_t>(n), Rational(0)); }

Rational det(const MatQ& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Internal, "determinant of non-square matrix");
  int n = a.rows();
  MatQ m = a;
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = 1 / m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col) * inv;
      for (int j = col; j < n; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return d;
}

MatQ mat_inverse(const MatQ& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Internal, "inverse of non-square matrix");
  int n = a.rows();
  MatQ m = a;
  MatQ inv = MatQ::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) { pivot = r; break; }
    if (pivot < 0) fail(ErrorKind::Singular, "singular matrix has no inverse");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational p = 1 / m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= p;
      inv.at(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      Rational factor = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= factor * m.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rational trace(const MatQ& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::Internal, "trace of non-square matrix");
  Rational t(0);
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

bool is_integer_matrix(const MatQ& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_integer(a.at(i, j))) return false;
  return true;
}

MatQ primitive_integer_form(const MatQ& a) {
  mpz_class den_lcm(1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
  mpz_class num_gcd(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      mpz_class scaled = a.at(i, j).get_num() * (den_lcm / a.at(i, j).get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  if (num_gcd == 0) return a;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  MatQ out = scale * a;
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) {
      if (out.at(i, j) == 0) continue;
      if (out.at(i, j) < 0) out = Rational(-1) * out;
      return out;
    }
  return out;
}

int rref(std::vector<VecQ>& rows) {
  if (rows.empty()) return 0;
  std::size_t width = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != width) fail(ErrorKind::Internal, "ragged row set in rref");
  int rank = 0;
  for (std::size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = 1 / rows[rank][col];
    for (std::size_t j = col; j < width; ++j) rows[rank][j] *= inv;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t j = col; j < width; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank, VecQ(width, Rational(0)));
  return rank;
}

int rank(const std::vector<VecQ>& rows) {
  auto copy = rows;
  return rref(copy);
}

bool solve_linear(const MatQ& a, const VecQ& b, VecQ& solution) {
  if (static_cast<std::size_t>(a.rows()) != b.size()) fail(ErrorKind::Internal, "solve_linear shape mismatch");
  int n = a.rows(), m = a.cols();
  std::vector<VecQ> aug(static_cast<std::size_t>(n), VecQ(static_cast<std::size_t>(m) + 1, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = a.at(i, j);
    aug[i][m] = b[i];
  }
  rref(aug);
  // Reduced echelon form with free variables pinned to zero: each
  // pivot row reads x[lead] = rhs, except the pivot may fall in the
  // rhs column, which means the system is inconsistent.
  solution.assign(static_cast<std::size_t>(m), Rational(0));
  for (const auto& row : aug) {
    int lead = -1;
    for (int j = 0; j <= m; ++j)
      if (row[j] != 0) { lead = j; break; }
    if (lead == m) return false;
    if (lead >= 0) solution[lead] = row[m];
  }
  VecQ check = a * solution;
  for (int i = 0; i < n; ++i)
    if (check[i] != b[i]) return false;
  return true;
}

} // namespace helly
