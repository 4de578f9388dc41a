#pragma once

#include "helly/crystal.hpp"
#include "helly/signed_perm.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace helly {

// Decision: a virtually abelian group acts nicely on an injective
// metric space iff its point group conjugates, inside GL_n(Q), into
// the signed permutations. Conjugacy of rational representations is
// equivalent to an injective trace-matching homomorphism existing,
// and a conjugator is recovered exactly by averaging.

struct DecideOptions {
  int max_dim = kDefaultMaxSignedPermDim;
  int max_generators = 4;
  int workers = 1;
  std::uint64_t seed = 0;
  int max_group_size = kDefaultMaxGroupSize;
};

struct OrderObstruction {
  int element_index;                // first offending element, discovery order
  int element_order;
  std::vector<int> ambient_orders;  // orders realized by signed permutations
};

struct CharacterObstruction {
  // Generator-image assignments covered by the exhausted search;
  // equals the full assignment space size, which is the completeness
  // proof for the negative verdict.
  std::uint64_t assignments_covered = 0;
};

struct ObstructionWitness {
  enum class Kind { Order, Character };
  Kind kind;
  std::optional<OrderObstruction> order;
  std::optional<CharacterObstruction> character;
};

struct ConjugacyCertificate {
  // Primitive integer matrix, first nonzero entry positive;
  // phi * elements[k] * phi^-1 == signed_perm_matrix(hom[k]).
  MatQ phi;
  std::vector<SignedPerm> hom; // by element index
};

struct HellyDecision {
  bool helly = false;
  bool precheck_passed = false;
  std::uint64_t assignment_space = 0; // |signed perms|^generators
  std::optional<ConjugacyCertificate> certificate;
  std::optional<ObstructionWitness> obstruction;
};

// First element (in discovery order) whose order no signed
// permutation realizes; nullopt when every order is realizable.
std::optional<OrderObstruction> order_precheck(const FiniteMatrixGroup& group,
                                               const std::vector<int>& ambient_orders);

struct HomSearch {
  std::optional<std::vector<SignedPerm>> hom; // lexicographically first
  std::uint64_t space = 0;
  std::uint64_t covered = 0; // == space when hom is nullopt
};

// Exhaustive search for an injective homomorphism into `targets`
// matching traces elementwise. Generator images are filtered by order
// and trace, extended along discovery chains, then checked against
// the full multiplication table. Workers split the first generator's
// candidates; the reduction keeps the lexicographically first hit, so
// the result is worker-count independent.
HomSearch find_hom_by_character(const FiniteMatrixGroup& group,
                                const std::vector<SignedPerm>& targets, int workers = 1);

// Rational intertwiner T with T*g*T^-1 == hom(g) for all g, found by
// averaging probe matrices (identity, then elementary, then seeded
// random) over the group. Returned in primitive integer form.
MatQ build_intertwiner(const FiniteMatrixGroup& group, const std::vector<SignedPerm>& hom,
                       std::uint64_t seed = 0);

HellyDecision decide_helly(const PointGroup& pg, const DecideOptions& opts = {});

} // namespace helly
