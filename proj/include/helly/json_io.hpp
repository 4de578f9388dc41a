#pragma once

#include "helly/crystal.hpp"
#include "helly/decide.hpp"
#include "helly/extension.hpp"
#include "helly/graph.hpp"
#include "helly/lie.hpp"
#include "helly/norm_polytope.hpp"
#include "helly/word_metric.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace helly {

// All machine-readable input and output is JSON with exact rational
// entries serialized as strings "p" or "p/q"; insertion order is kept
// so identical data always serializes to identical bytes.
using Json = nlohmann::ordered_json;

// Wraps nlohmann parse failures in Error(Parse) with position info.
Json parse_json_text(const std::string& text);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

VecQ vecq_from_json(const Json& j);
Json vecq_to_json(const VecQ& v);

MatQ matq_from_json(const Json& j);
Json matq_to_json(const MatQ& m);

VecZ vecz_from_json(const Json& j);
Json vecz_to_json(const VecZ& v);

// { "dim": n, "generators": [{"linear": [[..]], "translation": [..]}], "name": s }
CrystalSpec crystal_from_json(const Json& j);
Json crystal_to_json(const CrystalSpec& spec);

// { "kind": "abelian", "dim": n, "generators": [[ints]], "name": s }
// { "kind": "pulled_back", "crystal": {..}, "words": [[signed 1-based
//   generator indices]], "name": s }; words default to the single
//   crystal generators.
WordMetricSpec word_metric_from_json(const Json& j);
Json word_metric_to_json(const WordMetricSpec& spec);

// { "n": v, "edges": [[u,v]], "labels": optional } or
// { "cayley": { "mult": [[..]], "generators": [ints] } }.
FiniteGraph graph_from_json(const Json& j);
Json graph_to_json(const FiniteGraph& g);

// Whether the graph payload is a Cayley construction; ball results on
// those carry a boundary caveat in reports.
bool graph_json_is_cayley(const Json& j);

// { "graph": {..} | {"grid": {"dim": n, "m": m}}, "centers": [..],
//   "radii": ["p/q"..], "d": int, "j": int }
ScaledHellyInstance scaled_instance_from_json(const Json& j);

// { "mult": [[..]], "labels": optional }
FiniteGroupTable group_table_from_json(const Json& j);
Json group_table_to_json(const FiniteGroupTable& t);

// { "g": table, "n": [indices], "m": table, "action": [[..]],
//   "phi": [[n_element, m_image]..] }
struct PushoutInput {
  FiniteGroupTable g;
  std::vector<int> n_subgroup;
  FiniteGroupTable m;
  GroupAction action;
  EquivariantMap phi;
};

PushoutInput pushout_input_from_json(const Json& j);

// { "dim": n, "structure": [[["p/q"..]..]..], "name": s } with
// structure[i][j][k] the e_k coefficient of [e_i, e_j].
LieAlgebra lie_from_json(const Json& j);
Json lie_to_json(const LieAlgebra& g);

Json signed_perm_to_json(const SignedPerm& p);
SignedPerm signed_perm_from_json(const Json& j);

Json certificate_to_json(const ConjugacyCertificate& cert);
Json obstruction_to_json(const ObstructionWitness& witness);

Json affine_to_json(const AffineIsometry& map);
AffineIsometry affine_from_json(const Json& j);

Json gram_to_json(const GramCertificate& cert);

Json polytope_to_json(const NormPolytope& p);
NormPolytope polytope_from_json(const Json& j);

Json estimate_to_json(const DirectionalEstimate& e);

Json ball_family_to_json(const BallFamily& family);
BallFamily ball_family_from_json(const Json& j);

} // namespace helly
