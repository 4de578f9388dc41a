#include "helly/json_io.hpp"

#include "helly/errors.hpp"

#include <cstdint>
#include <utility>

namespace helly {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, std::string("expected object with field '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) fail(ErrorKind::InvalidInput, std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorKind::InvalidInput, std::string(what) + ": expected integer");
  return j.get<std::int64_t>();
}

std::string string_from(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::InvalidInput, std::string(what) + ": expected string");
  return j.get<std::string>();
}

void expect_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + ": expected array");
}

std::vector<int> int_vector_from(const Json& j, const char* what) {
  expect_array(j, what);
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(static_cast<int>(int_from(e, what)));
  return out;
}

std::vector<std::vector<int>> int_table_from(const Json& j, const char* what) {
  expect_array(j, what);
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const Json& row : j) out.push_back(int_vector_from(row, what));
  return out;
}

} // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, "rational: expected \"p/q\" string or integer");
}

Json rational_to_json(const Rational& r) { return to_string(r); }

VecQ vecq_from_json(const Json& j) {
  expect_array(j, "vector");
  VecQ v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json vecq_to_json(const VecQ& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(rational_to_json(r));
  return out;
}

MatQ matq_from_json(const Json& j) {
  expect_array(j, "matrix");
  if (j.empty()) fail(ErrorKind::InvalidInput, "matrix: no rows");
  int rows = static_cast<int>(j.size());
  VecQ first = vecq_from_json(j[0]);
  int cols = static_cast<int>(first.size());
  if (cols == 0) fail(ErrorKind::InvalidInput, "matrix: empty row");
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    VecQ row = i == 0 ? first : vecq_from_json(j[i]);
    if (static_cast<int>(row.size()) != cols) fail(ErrorKind::InvalidInput, "matrix: ragged rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = row[k];
  }
  return m;
}

Json matq_to_json(const MatQ& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m.at(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

VecZ vecz_from_json(const Json& j) {
  expect_array(j, "integer vector");
  VecZ v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(int_from(e, "integer vector"));
  return v;
}

Json vecz_to_json(const VecZ& v) {
  Json out = Json::array();
  for (std::int64_t x : v) out.push_back(x);
  return out;
}

CrystalSpec crystal_from_json(const Json& j) {
  CrystalSpec spec;
  spec.dim = static_cast<int>(int_from(field(j, "dim"), "dim"));
  const Json& gens = field(j, "generators");
  expect_array(gens, "generators");
  for (const Json& g : gens) {
    CrystalGenerator cg;
    cg.linear = matq_from_json(field(g, "linear"));
    cg.translation = vecq_from_json(field(g, "translation"));
    spec.generators.push_back(std::move(cg));
  }
  if (j.contains("name")) spec.name = string_from(j["name"], "name");
  return spec;
}

Json crystal_to_json(const CrystalSpec& spec) {
  Json out;
  out["dim"] = spec.dim;
  Json gens = Json::array();
  for (const CrystalGenerator& g : spec.generators) {
    Json jg;
    jg["linear"] = matq_to_json(g.linear);
    jg["translation"] = vecq_to_json(g.translation);
    gens.push_back(std::move(jg));
  }
  out["generators"] = std::move(gens);
  out["name"] = spec.name;
  return out;
}

WordMetricSpec word_metric_from_json(const Json& j) {
  WordMetricSpec spec;
  std::string kind = string_from(field(j, "kind"), "kind");
  if (kind == "abelian") {
    spec.kind = WordMetricSpec::Kind::Abelian;
    spec.abelian.dim = static_cast<int>(int_from(field(j, "dim"), "dim"));
    const Json& gens = field(j, "generators");
    expect_array(gens, "generators");
    for (const Json& g : gens) spec.abelian.generators.push_back(vecz_from_json(g));
  } else if (kind == "pulled_back") {
    spec.kind = WordMetricSpec::Kind::PulledBack;
    spec.pulled.crystal = crystal_from_json(field(j, "crystal"));
    if (j.contains("words")) {
      const Json& words = j["words"];
      expect_array(words, "words");
      for (const Json& w : words) spec.pulled.words.push_back(int_vector_from(w, "words"));
    } else {
      for (int i = 0; i < static_cast<int>(spec.pulled.crystal.generators.size()); ++i)
        spec.pulled.words.push_back({i + 1});
    }
  } else {
    fail(ErrorKind::InvalidInput, "kind: expected \"abelian\" or \"pulled_back\"");
  }
  if (j.contains("name")) spec.name = string_from(j["name"], "name");
  return spec;
}

Json word_metric_to_json(const WordMetricSpec& spec) {
  Json out;
  if (spec.kind == WordMetricSpec::Kind::Abelian) {
    out["kind"] = "abelian";
    out["dim"] = spec.abelian.dim;
    Json gens = Json::array();
    for (const VecZ& g : spec.abelian.generators) gens.push_back(vecz_to_json(g));
    out["generators"] = std::move(gens);
  } else {
    out["kind"] = "pulled_back";
    out["crystal"] = crystal_to_json(spec.pulled.crystal);
    Json words = Json::array();
    for (const std::vector<int>& w : spec.pulled.words) {
      Json jw = Json::array();
      for (int s : w) jw.push_back(s);
      words.push_back(std::move(jw));
    }
    out["words"] = std::move(words);
  }
  out["name"] = spec.name;
  return out;
}

FiniteGraph graph_from_json(const Json& j) {
  if (graph_json_is_cayley(j)) {
    const Json& c = j["cayley"];
    auto mult = int_table_from(field(c, "mult"), "cayley mult");
    auto generators = int_vector_from(field(c, "generators"), "cayley generators");
    return cayley_graph(mult, generators);
  }
  int n = static_cast<int>(int_from(field(j, "n"), "n"));
  const Json& edges = field(j, "edges");
  expect_array(edges, "edges");
  std::vector<std::pair<int, int>> edge_list;
  for (const Json& e : edges) {
    expect_array(e, "edge");
    if (e.size() != 2) fail(ErrorKind::InvalidInput, "edge: expected [u, v]");
    edge_list.emplace_back(static_cast<int>(int_from(e[0], "edge")),
                           static_cast<int>(int_from(e[1], "edge")));
  }
  FiniteGraph g = make_graph(n, edge_list);
  if (j.contains("labels")) {
    const Json& labels = j["labels"];
    expect_array(labels, "labels");
    if (static_cast<int>(labels.size()) != n) fail(ErrorKind::InvalidInput, "labels: wrong length");
    for (const Json& l : labels) g.labels.push_back(string_from(l, "labels"));
  }
  return g;
}

Json graph_to_json(const FiniteGraph& g) {
  Json out;
  out["n"] = g.n;
  Json edges = Json::array();
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  if (!g.labels.empty()) out["labels"] = g.labels;
  return out;
}

bool graph_json_is_cayley(const Json& j) { return j.is_object() && j.contains("cayley"); }

ScaledHellyInstance scaled_instance_from_json(const Json& j) {
  ScaledHellyInstance instance;
  const Json& jg = field(j, "graph");
  if (jg.is_object() && jg.contains("grid")) {
    const Json& grid = jg["grid"];
    int dim = static_cast<int>(int_from(field(grid, "dim"), "grid dim"));
    int m = static_cast<int>(int_from(field(grid, "m"), "grid m"));
    GridBoxReport report = grid_box_helly(dim, m);
    if (!report.distances_match) fail(ErrorKind::Internal, "grid distances disagree with the max metric");
    instance.graph = std::move(report.graph);
  } else {
    instance.graph = graph_from_json(jg);
  }
  instance.centers = int_vector_from(field(j, "centers"), "centers");
  const Json& radii = field(j, "radii");
  expect_array(radii, "radii");
  for (const Json& r : radii) instance.radii.push_back(rational_from_json(r));
  instance.d = int_from(field(j, "d"), "d");
  instance.j = int_from(field(j, "j"), "j");
  return instance;
}

FiniteGroupTable group_table_from_json(const Json& j) {
  auto mult = int_table_from(field(j, "mult"), "mult");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& jl = j["labels"];
    expect_array(jl, "labels");
    for (const Json& l : jl) labels.push_back(string_from(l, "labels"));
  }
  return make_group_table(mult, std::move(labels));
}

Json group_table_to_json(const FiniteGroupTable& t) {
  Json out;
  out["order"] = t.order;
  out["mult"] = t.mult;
  out["identity"] = t.identity;
  if (!t.labels.empty()) out["labels"] = t.labels;
  return out;
}

PushoutInput pushout_input_from_json(const Json& j) {
  PushoutInput input;
  input.g = group_table_from_json(field(j, "g"));
  input.n_subgroup = int_vector_from(field(j, "n"), "n");
  input.m = group_table_from_json(field(j, "m"));
  input.action.act = int_table_from(field(j, "action"), "action");
  const Json& phi = field(j, "phi");
  expect_array(phi, "phi");
  input.phi.image.assign(input.g.order, -1);
  for (const Json& pair : phi) {
    expect_array(pair, "phi pair");
    if (pair.size() != 2) fail(ErrorKind::InvalidInput, "phi: expected [n_element, m_image] pairs");
    int a = static_cast<int>(int_from(pair[0], "phi"));
    int b = static_cast<int>(int_from(pair[1], "phi"));
    if (a < 0 || a >= input.g.order) fail(ErrorKind::InvalidInput, "phi: domain element out of range");
    if (b < 0 || b >= input.m.order) fail(ErrorKind::InvalidInput, "phi: image element out of range");
    input.phi.image[a] = b;
  }
  return input;
}

LieAlgebra lie_from_json(const Json& j) {
  int dim = static_cast<int>(int_from(field(j, "dim"), "dim"));
  if (dim <= 0) fail(ErrorKind::InvalidInput, "dim: expected positive");
  const Json& structure = field(j, "structure");
  expect_array(structure, "structure");
  if (static_cast<int>(structure.size()) != dim) fail(ErrorKind::InvalidInput, "structure: wrong outer length");
  std::vector<Rational> constants(static_cast<std::size_t>(dim) * dim * dim);
  for (int i = 0; i < dim; ++i) {
    const Json& plane = structure[i];
    expect_array(plane, "structure");
    if (static_cast<int>(plane.size()) != dim) fail(ErrorKind::InvalidInput, "structure: wrong middle length");
    for (int jj = 0; jj < dim; ++jj) {
      VecQ row = vecq_from_json(plane[jj]);
      if (static_cast<int>(row.size()) != dim) fail(ErrorKind::InvalidInput, "structure: wrong inner length");
      for (int k = 0; k < dim; ++k)
        constants[(static_cast<std::size_t>(i) * dim + jj) * dim + k] = row[k];
    }
  }
  std::string name = j.contains("name") ? string_from(j["name"], "name") : std::string();
  return make_lie_algebra(dim, std::move(constants), std::move(name));
}

Json lie_to_json(const LieAlgebra& g) {
  Json out;
  out["dim"] = g.dim;
  Json structure = Json::array();
  for (int i = 0; i < g.dim; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < g.dim; ++j) {
      Json row = Json::array();
      for (int k = 0; k < g.dim; ++k) row.push_back(rational_to_json(g.structure(i, j, k)));
      plane.push_back(std::move(row));
    }
    structure.push_back(std::move(plane));
  }
  out["structure"] = std::move(structure);
  out["name"] = g.name;
  return out;
}

Json signed_perm_to_json(const SignedPerm& p) {
  Json out;
  Json image = Json::array();
  Json sign = Json::array();
  for (std::size_t i = 0; i < p.image.size(); ++i) {
    image.push_back(p.image[i]);
    sign.push_back(p.sign[i]);
  }
  out["image"] = std::move(image);
  out["sign"] = std::move(sign);
  return out;
}

SignedPerm signed_perm_from_json(const Json& j) {
  SignedPerm p;
  for (const Json& e : field(j, "image")) p.image.push_back(static_cast<int>(int_from(e, "image")));
  for (const Json& e : field(j, "sign")) p.sign.push_back(static_cast<int>(int_from(e, "sign")));
  if (p.image.size() != p.sign.size()) fail(ErrorKind::InvalidInput, "signed permutation: image/sign length mismatch");
  return p;
}

Json certificate_to_json(const ConjugacyCertificate& cert) {
  Json out;
  out["phi"] = matq_to_json(cert.phi);
  Json hom = Json::array();
  for (std::size_t k = 0; k < cert.hom.size(); ++k) {
    Json entry = signed_perm_to_json(cert.hom[k]);
    Json tagged;
    tagged["element"] = static_cast<int>(k);
    tagged["image"] = std::move(entry["image"]);
    tagged["sign"] = std::move(entry["sign"]);
    hom.push_back(std::move(tagged));
  }
  out["hom"] = std::move(hom);
  return out;
}

Json obstruction_to_json(const ObstructionWitness& witness) {
  Json out;
  if (witness.kind == ObstructionWitness::Kind::Order) {
    out["kind"] = "order";
    out["element_index"] = witness.order->element_index;
    out["element_order"] = witness.order->element_order;
    out["ambient_orders"] = witness.order->ambient_orders;
  } else {
    out["kind"] = "character";
    out["assignments_covered"] = witness.character->assignments_covered;
  }
  return out;
}

Json affine_to_json(const AffineIsometry& map) {
  Json out;
  out["linear"] = matq_to_json(map.linear);
  out["translation"] = vecq_to_json(map.translation);
  return out;
}

AffineIsometry affine_from_json(const Json& j) {
  AffineIsometry map;
  map.linear = matq_from_json(field(j, "linear"));
  map.translation = vecq_from_json(field(j, "translation"));
  return map;
}

Json gram_to_json(const GramCertificate& cert) {
  Json out;
  out["form"] = matq_to_json(cert.form);
  out["leading_minors"] = vecq_to_json(cert.leading_minors);
  return out;
}

Json polytope_to_json(const NormPolytope& p) {
  Json out;
  out["dim"] = p.dim;
  Json vertices = Json::array();
  for (const VecQ& v : p.vertices) vertices.push_back(vecq_to_json(v));
  out["vertices"] = std::move(vertices);
  return out;
}

NormPolytope polytope_from_json(const Json& j) {
  NormPolytope p;
  p.dim = static_cast<int>(int_from(field(j, "dim"), "dim"));
  for (const Json& v : field(j, "vertices")) p.vertices.push_back(vecq_from_json(v));
  return p;
}

Json estimate_to_json(const DirectionalEstimate& e) {
  Json out;
  out["direction"] = vecz_to_json(e.direction);
  Json samples = Json::array();
  for (const DirectionalSample& s : e.samples) {
    Json js;
    js["k"] = s.k;
    js["distance"] = s.distance;
    samples.push_back(std::move(js));
  }
  out["samples"] = std::move(samples);
  out["lower"] = rational_to_json(e.lower);
  out["upper"] = rational_to_json(e.upper);
  out["surrogate_constant"] = rational_to_json(e.surrogate_constant);
  out["constants_are_surrogates"] = e.constants_are_surrogates;
  return out;
}

Json ball_family_to_json(const BallFamily& family) {
  Json out;
  Json balls = Json::array();
  for (const Ball& b : family.balls) {
    Json jb;
    jb["center"] = b.center;
    jb["radius"] = b.radius;
    balls.push_back(std::move(jb));
  }
  out["balls"] = std::move(balls);
  return out;
}

BallFamily ball_family_from_json(const Json& j) {
  BallFamily family;
  for (const Json& b : field(j, "balls")) {
    Ball ball;
    ball.center = static_cast<int>(int_from(field(b, "center"), "center"));
    ball.radius = static_cast<int>(int_from(field(b, "radius"), "radius"));
    family.balls.push_back(ball);
  }
  return family;
}

} // namespace helly
