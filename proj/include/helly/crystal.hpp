#pragma once

#include "helly/matgroup.hpp"
#include "helly/matq.hpp"

#include <string>
#include <vector>

namespace helly {

// Affine generator x -> linear*x + translation of a cocompact group
// of Euclidean motions given in lattice coordinates: linear parts are
// unimodular integer matrices, translations arbitrary rationals.
struct CrystalGenerator {
  MatQ linear;
  VecQ translation;
};

struct CrystalSpec {
  int dim = 0;
  std::vector<CrystalGenerator> generators;
  std::string name;
};

struct AffineIsometry {
  MatQ linear;
  VecQ translation;
};

// Throws InvalidInput on shape mismatch, non-integer or non-unimodular
// point parts.
void validate_crystal_spec(const CrystalSpec& spec);

struct PointGroup {
  FiniteMatrixGroup group;
  std::string source_name;
};

// Image of the spec in GL_n(Z): the closure of the linear parts.
// Assumes honest crystallographic data (the translation lattice is
// the full kernel, so linear parts present the point group).
PointGroup point_group(const CrystalSpec& spec, int max_size = kDefaultMaxGroupSize);

// Positive definite rational form preserved by the whole point group,
// built by averaging g^T g. Witnesses that the group acts by
// isometries of a Euclidean metric without leaving Q.
struct GramCertificate {
  MatQ form;
  std::vector<Rational> leading_minors; // all positive
};

GramCertificate invariant_gram(const PointGroup& pg);

bool preserves_form(const MatQ& g, const MatQ& form);

// Conjugates each generator by phi: x -> (phi A phi^-1) x + phi t.
// Throws InvalidInput unless every conjugated linear part lands in
// the signed permutations, i.e. phi must come from a positive
// conjugacy certificate.
std::vector<AffineIsometry> affine_linf_action(const CrystalSpec& spec, const MatQ& phi);

// Least positive rational multiplier making every translation in the
// generated affine group integral, with the rescaled generators.
// After rescaling the group permutes the unit cubes of the integer
// lattice. Throws DegenerateLattice (as InvalidInput) when the pure
// translations of the action do not span the whole space.
struct TilingAction {
  Rational scale;
  std::vector<AffineIsometry> maps;
};

TilingAction cubical_tiling_action(const std::vector<AffineIsometry>& action,
                                   int max_group_size = kDefaultMaxGroupSize);

// Basis of the rational span of the pure translations of the
// generated affine group (kernel of the point map), found by closing
// coset representatives against the generators. Full rank iff the
// group is cocompact.
std::vector<VecQ> translation_span_basis(const std::vector<AffineIsometry>& action,
                                         int max_group_size = kDefaultMaxGroupSize);

} // namespace helly
