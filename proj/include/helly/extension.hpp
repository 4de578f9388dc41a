#pragma once

#include <string>
#include <vector>

namespace helly {

// Finite group as an explicit multiplication table. Element 0 need
// not be the identity; `identity` points at it.
struct FiniteGroupTable {
  int order = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  int identity = 0;
  std::vector<std::string> labels; // empty or size `order`

  int op(int a, int b) const { return mult[a][b]; }
};

// Validates associativity, identity and inverses exhaustively.
FiniteGroupTable make_group_table(const std::vector<std::vector<int>>& mult,
                                  std::vector<std::string> labels = {});

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable symmetric_group_3();

// Action of G on M by automorphisms: act[g] is the permutation of
// M's elements.
struct GroupAction {
  std::vector<std::vector<int>> act;
};

void validate_action(const FiniteGroupTable& g, const FiniteGroupTable& m, const GroupAction& action);

// Partial map from a subgroup N of G into M: image[n] for n in N,
// -1 outside. Pushing out a short exact sequence 1 -> N -> G -> Q -> 1
// along phi: N -> M yields the unique extension 1 -> M -> G' -> Q -> 1
// receiving a compatible map G -> G'.
struct EquivariantMap {
  std::vector<int> image;
};

struct PushoutResult {
  FiniteGroupTable extended;       // G'
  std::vector<int> embed_m;        // M -> G', injective
  std::vector<int> map_g;          // G -> G', commutes with phi on N
  FiniteGroupTable quotient;       // Q = G/N
  std::vector<int> project_g;      // G -> Q
  std::vector<int> project_ext;    // G' -> Q, kernel = image of M
};

// Hypotheses checked exhaustively, each failure named: NotNormal (N
// is not a normal subgroup), NotHomomorphism (phi), NotEquivariant
// (phi against conjugation and the action), NotCompatible (the action
// restricted to N is not conjugation by phi(n) in M). All reported
// as InvalidInput with the violated hypothesis and a witness in the
// message. |G'| = |M| * |G| / |N|.
PushoutResult pushout_extension(const FiniteGroupTable& g, const std::vector<int>& n_subgroup,
                                const FiniteGroupTable& m, const GroupAction& action,
                                const EquivariantMap& phi);

// Checks that maps form a morphism of short exact sequences:
// left/right squares commute, rows are exact, the downstairs map of
// kernels matches phi. Returns a human-readable witness on failure.
struct SesCheck {
  bool ok = false;
  std::string witness;
};

SesCheck verify_ses_morphism(const FiniteGroupTable& g, const std::vector<int>& n_subgroup,
                             const FiniteGroupTable& m, const EquivariantMap& phi,
                             const PushoutResult& result);

} // namespace helly
