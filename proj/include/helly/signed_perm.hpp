#pragma once

#include "helly/matq.hpp"

#include <cstdint>
#include <vector>

namespace helly {

// Signed permutation of coordinates: e_j -> sign[j] * e_{image[j]}.
// As matrices these are exactly the linear isometries of max-norm
// space, 2^n * n! of them in dimension n.
struct SignedPerm {
  std::vector<int> image; // a permutation of 0..n-1
  std::vector<int> sign;  // entries +1 or -1

  int dim() const { return static_cast<int>(image.size()); }

  bool operator==(const SignedPerm& other) const { return image == other.image && sign == other.sign; }

  // Lexicographic on (image, sign) with +1 before -1; matches the
  // order enumerate_signed_perms emits, so enumeration index equals
  // lexicographic rank.
  bool operator<(const SignedPerm& other) const;
};

SignedPerm sp_identity(int n);

// Matrix of the signed permutation: column j holds sign[j]*e_{image[j]}.
MatQ signed_perm_matrix(const SignedPerm& p);

bool is_signed_perm_matrix(const MatQ& m);

SignedPerm signed_perm_from_matrix(const MatQ& m);

// compose(a, b) acts as a after b: matrix(compose(a,b)) ==
// matrix(a)*matrix(b).
SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);

SignedPerm sp_inverse(const SignedPerm& p);

int sp_order(const SignedPerm& p);

// Sum of sign[j] over fixed coordinates; equals the matrix trace.
std::int64_t sp_trace(const SignedPerm& p);

inline constexpr int kDefaultMaxSignedPermDim = 6;

// All signed permutations of dimension n in lexicographic order.
// Throws DimensionTooLarge above max_dim (2^n * n! growth).
std::vector<SignedPerm> enumerate_signed_perms(int n, int max_dim = kDefaultMaxSignedPermDim);

// Element orders realized by signed permutations in dimension n,
// sorted ascending (e.g. n=2 -> {1,2,4}; n=3 -> {1,2,3,4,6}).
std::vector<int> signed_perm_orders(int n, int max_dim = kDefaultMaxSignedPermDim);

} // namespace helly
