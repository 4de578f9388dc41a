#pragma once

#include "helly/matq.hpp"

#include <random>
#include <string>
#include <vector>

namespace helly {

// Rational Lie algebra by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k.
struct LieAlgebra {
  int dim = 0;
  std::vector<Rational> c;
  std::string name;

  const Rational& structure(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Rational& structure(int i, int j, int k) {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
};

// Validates antisymmetry and the Jacobi identity exactly; failures
// carry the witness triple.
LieAlgebra make_lie_algebra(int dim, std::vector<Rational> constants, std::string name = "");

LieAlgebra heisenberg_algebra(); // dim 3: [e1,e2] = e3 central

VecQ bracket(const LieAlgebra& g, const VecQ& x, const VecQ& y);

// Subspace in reduced row echelon basis; equal subspaces have equal
// bases.
struct Subspace {
  std::vector<VecQ> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

Subspace span_of(std::vector<VecQ> vectors);
bool subspace_contains(const Subspace& s, const VecQ& v);
bool subspace_equal(const Subspace& a, const Subspace& b);

// g_1 = g, g_{i+1} = [g, g_i]; the list runs until the first
// stabilized term, included once. Nilpotent iff it ends at 0.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

struct NilpotencyReport {
  bool nilpotent = false;
  int nilpotency_class = -1; // number of nonzero series terms
  std::vector<int> dims;     // series dimensions
};

NilpotencyReport is_nilpotent(const LieAlgebra& g);

// Associated graded algebra of a nilpotent algebra: layer i
// represents g_i/g_{i+1}; the bracket of layers i and j lands in
// layer i+j by the filtration property, giving a graded algebra on
// the same total dimension.
struct GradedAlgebra {
  std::vector<std::vector<VecQ>> layers; // representatives, original coordinates
  std::vector<int> weight;               // 1-based layer of each graded basis vector
  LieAlgebra algebra;                    // structure constants in the graded basis
  bool bracket_trivial = false;
};

GradedAlgebra associated_graded(const LieAlgebra& g); // InvalidInput unless nilpotent

// The graded bracket vanishing forces the algebra itself to be
// abelian: triviality means [g_i, g_j] <= g_{i+j+1}, so g_2 = g_3 and
// the series can only stabilize at zero. Returns both facts; their
// implication failing is an internal error.
struct BracketTransfer {
  bool graded_trivial = false;
  bool original_abelian = false;
};

BracketTransfer trivial_bracket_transfer(const LieAlgebra& g);

// Random nilpotent algebra of dimension <= max_dim and class <=
// max_class: a graded template (abelian, two-layer, or a chain with a
// free parameter) pushed through a random unimodular change of basis.
// Always validates exactly before returning.
LieAlgebra random_nilpotent(std::mt19937_64& rng, int max_dim = 5, int max_class = 3);

} // namespace helly
