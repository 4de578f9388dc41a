#include "helly/signed_perm.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace helly {

bool SignedPerm::operator<(const SignedPerm& other) const {
  if (image != other.image) return image < other.image;
  // +1 sorts before -1.
  for (std::size_t i = 0; i < sign.size(); ++i)
    if (sign[i] != other.sign[i]) return sign[i] > other.sign[i];
  return false;
}

SignedPerm sp_identity(int n) {
  SignedPerm p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0);
  p.sign.assign(n, 1);
  return p;
}

MatQ signed_perm_matrix(const SignedPerm& p) {
  int n = p.dim();
  MatQ m(n, n);
  for (int j = 0; j < n; ++j) m.at(p.image[j], j) = p.sign[j];
  return m;
}

bool is_signed_perm_matrix(const MatQ& m) {
  if (m.rows() != m.cols()) return false;
  int n = m.rows();
  std::vector<bool> row_used(n, false);
  for (int j = 0; j < n; ++j) {
    int hits = 0, row = -1;
    for (int i = 0; i < n; ++i) {
      const Rational& v = m.at(i, j);
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      ++hits;
      row = i;
    }
    if (hits != 1 || row_used[row]) return false;
    row_used[row] = true;
  }
  return true;
}

SignedPerm signed_perm_from_matrix(const MatQ& m) {
  if (!is_signed_perm_matrix(m)) fail(ErrorKind::Internal, "matrix is not a signed permutation");
  int n = m.rows();
  SignedPerm p;
  p.image.assign(n, 0);
  p.sign.assign(n, 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m.at(i, j) != 0) {
        p.image[j] = i;
        p.sign[j] = m.at(i, j) == 1 ? 1 : -1;
      }
  return p;
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  int n = a.dim();
  if (b.dim() != n) fail(ErrorKind::Internal, "signed permutation dimension mismatch");
  SignedPerm c;
  c.image.resize(n);
  c.sign.resize(n);
  for (int j = 0; j < n; ++j) {
    c.image[j] = a.image[b.image[j]];
    c.sign[j] = b.sign[j] * a.sign[b.image[j]];
  }
  return c;
}

SignedPerm sp_inverse(const SignedPerm& p) {
  int n = p.dim();
  SignedPerm q;
  q.image.resize(n);
  q.sign.resize(n);
  for (int j = 0; j < n; ++j) {
    q.image[p.image[j]] = j;
    q.sign[p.image[j]] = p.sign[j];
  }
  return q;
}

int sp_order(const SignedPerm& p) {
  SignedPerm cur = p;
  SignedPerm id = sp_identity(p.dim());
  int k = 1;
  while (!(cur == id)) {
    cur = sp_compose(cur, p);
    ++k;
    if (k > 1 << 20) fail(ErrorKind::Internal, "runaway order computation");
  }
  return k;
}

std::int64_t sp_trace(const SignedPerm& p) {
  std::int64_t t = 0;
  for (int j = 0; j < p.dim(); ++j)
    if (p.image[j] == j) t += p.sign[j];
  return t;
}

std::vector<SignedPerm> enumerate_signed_perms(int n, int max_dim) {
  if (n < 1) fail(ErrorKind::InvalidInput, "dimension must be positive");
  if (n > max_dim)
    fail(ErrorKind::DimensionTooLarge,
         "dimension " + std::to_string(n) + " above enumeration cap " + std::to_string(max_dim));
  std::vector<SignedPerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Sign masks count up with coordinate 0 as the most significant
    // bit and +1 encoded as 0, so emission order is lexicographic.
    for (unsigned mask = 0; mask < 1u << n; ++mask) {
      SignedPerm p;
      p.image = perm;
      p.sign.resize(n);
      for (int i = 0; i < n; ++i) p.sign[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<int> signed_perm_orders(int n, int max_dim) {
  std::set<int> orders;
  for (const auto& p : enumerate_signed_perms(n, max_dim)) orders.insert(sp_order(p));
  return std::vector<int>(orders.begin(), orders.end());
}

} // namespace helly
