#pragma once

#include "helly/rational.hpp"

#include <cstddef>
#include <vector>

namespace helly {

using VecQ = std::vector<Rational>;
using VecZ = std::vector<std::int64_t>;

// Dense rational matrix, row-major. All arithmetic is exact.
class MatQ {
public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

  static MatQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  MatQ transpose() const;

  bool operator==(const MatQ& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_; }
  bool operator!=(const MatQ& other) const { return !(*this == other); }

  // Lexicographic order on (rows, cols, entries); used for canonical
  // element ordering in group closures.
  bool operator<(const MatQ& other) const;

private:
  int rows_;
  int cols_;
  std::vector<Rational> e_;
};

MatQ operator*(const MatQ& a, const MatQ& b);
MatQ operator+(const MatQ& a, const MatQ& b);
MatQ operator-(const MatQ& a, const MatQ& b);
MatQ operator*(const Rational& s, const MatQ& a);
VecQ operator*(const MatQ& a, const VecQ& x);

VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_scale(const Rational& s, const VecQ& a);
bool vec_is_zero(const VecQ& a);
VecQ vec_zero(int n);

Rational det(const MatQ& a);

// Exact inverse via Gauss-Jordan; throws ErrorKind::Singular.
MatQ mat_inverse(const MatQ& a);

Rational trace(const MatQ& a);

bool is_integer_matrix(const MatQ& a);

// Scales an integer multiple of `a` to the primitive integer matrix
// with positive first nonzero entry. Used to canonicalize conjugators
// that are only defined up to a scalar. Zero matrices pass through.
MatQ primitive_integer_form(const MatQ& a);

// Row-reduce `rows` over Q in place to reduced row echelon form;
// returns the rank. Rows must share a common length.
int rref(std::vector<VecQ>& rows);

int rank(const std::vector<VecQ>& rows);

// Solves A x = b exactly; empty result when inconsistent.
// A may be rectangular; returns one solution (free variables zero).
bool solve_linear(const MatQ& a, const VecQ& b, VecQ& solution);

} // namespace helly
