#include "helly/extension.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace helly {

namespace {

std::string pair_witness(const char* hypothesis, int a, int b) {
  return std::string(hypothesis) + " (witness " + std::to_string(a) + ", " + std::to_string(b) + ")";
}

} // namespace

FiniteGroupTable make_group_table(const std::vector<std::vector<int>>& mult,
                                  std::vector<std::string> labels) {
  int order = static_cast<int>(mult.size());
  if (order < 1) fail(ErrorKind::InvalidInput, "empty multiplication table");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != order)
      fail(ErrorKind::InvalidInput, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order) fail(ErrorKind::InvalidInput, "table entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != order)
    fail(ErrorKind::InvalidInput, "label count does not match order");

  FiniteGroupTable g;
  g.order = order;
  g.mult = mult;
  g.labels = std::move(labels);

  g.identity = -1;
  for (int e = 0; e < order && g.identity < 0; ++e) {
    bool id = true;
    for (int x = 0; x < order && id; ++x)
      if (mult[e][x] != x || mult[x][e] != x) id = false;
    if (id) g.identity = e;
  }
  if (g.identity < 0) fail(ErrorKind::InvalidInput, "table has no identity");

  g.inverse.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (mult[x][y] == g.identity && mult[y][x] == g.identity) { g.inverse[x] = y; break; }
    if (g.inverse[x] < 0) fail(ErrorKind::InvalidInput, "element without inverse");
  }

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          fail(ErrorKind::InvalidInput, "table is not associative");
  return g;
}

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) fail(ErrorKind::InvalidInput, "cyclic group order must be positive");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("r" + std::to_string(i));
    for (int j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  }
  return make_group_table(mult, labels);
}

FiniteGroupTable symmetric_group_3() {
  // Permutations of {0,1,2} in lexicographic one-line order.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> mult(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int compose[3];
      for (int x = 0; x < 3; ++x) compose[x] = perms[a][perms[b][x]];
      mult[a][b] = index_of(compose);
    }
  return make_group_table(mult, {"e", "(12)", "(01)", "(012)", "(021)", "(02)"});
}

void validate_action(const FiniteGroupTable& g, const FiniteGroupTable& m, const GroupAction& action) {
  if (static_cast<int>(action.act.size()) != g.order)
    fail(ErrorKind::InvalidInput, "action size does not match acting group");
  for (const auto& perm : action.act) {
    if (static_cast<int>(perm.size()) != m.order)
      fail(ErrorKind::InvalidInput, "action permutation size does not match module");
    std::vector<bool> hit(m.order, false);
    for (int v : perm) {
      if (v < 0 || v >= m.order) fail(ErrorKind::InvalidInput, "action value out of range");
      hit[v] = true;
    }
    for (bool h : hit)
      if (!h) fail(ErrorKind::InvalidInput, "action permutation is not a bijection");
  }
  for (int x = 0; x < m.order; ++x)
    if (action.act[g.identity][x] != x)
      fail(ErrorKind::InvalidInput, "identity must act trivially");
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int x = 0; x < m.order; ++x)
        if (action.act[g.op(a, b)][x] != action.act[a][action.act[b][x]])
          fail(ErrorKind::InvalidInput, pair_witness("action is not a homomorphism", a, b));
  for (int a = 0; a < g.order; ++a)
    for (int x = 0; x < m.order; ++x)
      for (int y = 0; y < m.order; ++y)
        if (action.act[a][m.op(x, y)] != m.op(action.act[a][x], action.act[a][y]))
          fail(ErrorKind::InvalidInput, pair_witness("action is not by automorphisms", a, x));
}

namespace {

struct Semidirect {
  // (m, g) indexed as m * |G| + g; product
  // (m1,g1)(m2,g2) = (m1 * (g1.m2), g1 g2).
  const FiniteGroupTable* m;
  const FiniteGroupTable* g;
  const GroupAction* action;

  int order() const { return m->order * g->order; }
  int make(int mm, int gg) const { return mm * g->order + gg; }
  int m_part(int x) const { return x / g->order; }
  int g_part(int x) const { return x % g->order; }
  int op(int x, int y) const {
    int m1 = m_part(x), g1 = g_part(x), m2 = m_part(y), g2 = g_part(y);
    return make(m->op(m1, action->act[g1][m2]), g->op(g1, g2));
  }
  int identity() const { return make(m->identity, g->identity); }
  int inverse(int x) const {
    int mm = m_part(x), gg = g_part(x);
    int gi = g->inverse[gg];
    return make(action->act[gi][m->inverse[mm]], gi);
  }
};

// Quotient of a concrete group (given by op lambdas) by a subgroup,
// using least-index coset representatives as the element order.
struct Cosets {
  std::vector<int> rep_of;     // element -> least element of its coset
  std::vector<int> index_of;   // element -> coset index
  std::vector<int> reps;       // coset index -> representative
};

template <typename Op>
Cosets left_cosets(int order, const std::vector<int>& subgroup, Op&& op) {
  Cosets c;
  c.rep_of.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    if (c.rep_of[x] >= 0) continue;
    int rep = x; // elements scan ascending, so x is the least member
    for (int k : subgroup) {
      int y = op(x, k);
      if (c.rep_of[y] >= 0 && c.rep_of[y] != rep)
        fail(ErrorKind::Internal, "cosets are not disjoint");
      c.rep_of[y] = rep;
    }
    if (c.rep_of[x] != rep) fail(ErrorKind::Internal, "subgroup does not contain identity");
  }
  c.index_of.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    if (c.rep_of[x] == x) {
      c.index_of[x] = static_cast<int>(c.reps.size());
      c.reps.push_back(x);
    }
  }
  for (int x = 0; x < order; ++x) c.index_of[x] = c.index_of[c.rep_of[x]];
  return c;
}

} // namespace

PushoutResult pushout_extension(const FiniteGroupTable& g, const std::vector<int>& n_subgroup,
                                const FiniteGroupTable& m, const GroupAction& action,
                                const EquivariantMap& phi) {
  // Hypothesis 1: N is a normal subgroup of G.
  std::set<int> n_set(n_subgroup.begin(), n_subgroup.end());
  if (n_set.empty()) fail(ErrorKind::InvalidInput, "NotNormal: empty subgroup");
  for (int x : n_set)
    if (x < 0 || x >= g.order) fail(ErrorKind::InvalidInput, "NotNormal: element out of range");
  if (!n_set.count(g.identity)) fail(ErrorKind::InvalidInput, "NotNormal: subgroup misses the identity");
  for (int a : n_set) {
    if (!n_set.count(g.inverse[a]))
      fail(ErrorKind::InvalidInput, pair_witness("NotNormal: not closed under inverse", a, g.inverse[a]));
    for (int b : n_set)
      if (!n_set.count(g.op(a, b)))
        fail(ErrorKind::InvalidInput, pair_witness("NotNormal: not closed under product", a, b));
  }
  for (int x = 0; x < g.order; ++x)
    for (int a : n_set)
      if (!n_set.count(g.op(g.op(x, a), g.inverse[x])))
        fail(ErrorKind::InvalidInput, pair_witness("NotNormal: conjugation escapes", x, a));

  validate_action(g, m, action);

  // Hypothesis 2: phi is a homomorphism defined exactly on N.
  if (static_cast<int>(phi.image.size()) != g.order)
    fail(ErrorKind::InvalidInput, "map image size must match the group order");
  for (int x = 0; x < g.order; ++x) {
    bool in_n = n_set.count(x) > 0;
    if (in_n && (phi.image[x] < 0 || phi.image[x] >= m.order))
      fail(ErrorKind::InvalidInput, "map undefined or out of range on the subgroup");
    if (!in_n && phi.image[x] != -1)
      fail(ErrorKind::InvalidInput, "map defined outside the subgroup");
  }
  for (int a : n_set)
    for (int b : n_set)
      if (phi.image[g.op(a, b)] != m.op(phi.image[a], phi.image[b]))
        fail(ErrorKind::InvalidInput, pair_witness("NotHomomorphism", a, b));

  // Hypothesis 3: phi intertwines conjugation with the action.
  for (int x = 0; x < g.order; ++x)
    for (int a : n_set) {
      int conj = g.op(g.op(x, a), g.inverse[x]);
      if (phi.image[conj] != action.act[x][phi.image[a]])
        fail(ErrorKind::InvalidInput, pair_witness("NotEquivariant", x, a));
    }

  // Hypothesis 4: on N the action is conjugation through phi.
  for (int a : n_set)
    for (int y = 0; y < m.order; ++y) {
      int conj = m.op(m.op(phi.image[a], y), m.inverse[phi.image[a]]);
      if (action.act[a][y] != conj)
        fail(ErrorKind::InvalidInput, pair_witness("NotCompatible", a, y));
    }

  Semidirect sd{&m, &g, &action};

  // K = {(phi(n)^-1, n)} is normal in the semidirect product; the
  // pushout is the quotient by K.
  std::vector<int> k_members;
  for (int a : n_set) k_members.push_back(sd.make(m.inverse[phi.image[a]], a));
  std::sort(k_members.begin(), k_members.end());
  {
    std::set<int> k_set(k_members.begin(), k_members.end());
    for (int x : k_members)
      for (int y : k_members)
        if (!k_set.count(sd.op(x, y))) fail(ErrorKind::Internal, "kernel is not a subgroup");
    for (int x = 0; x < sd.order(); ++x)
      for (int k : k_members)
        if (!k_set.count(sd.op(sd.op(x, k), sd.inverse(x))))
          fail(ErrorKind::Internal, "kernel is not normal in the semidirect product");
  }

  Cosets cosets = left_cosets(sd.order(), k_members, [&](int x, int k) { return sd.op(x, k); });
  int ext_order = static_cast<int>(cosets.reps.size());
  if (ext_order * static_cast<int>(n_set.size()) != sd.order())
    fail(ErrorKind::Internal, "pushout order mismatch");

  PushoutResult result;
  std::vector<std::vector<int>> ext_mult(ext_order, std::vector<int>(ext_order));
  for (int i = 0; i < ext_order; ++i)
    for (int j = 0; j < ext_order; ++j)
      ext_mult[i][j] = cosets.index_of[sd.op(cosets.reps[i], cosets.reps[j])];
  std::vector<std::string> ext_labels;
  for (int i = 0; i < ext_order; ++i) {
    int rep = cosets.reps[i];
    ext_labels.push_back("[m" + std::to_string(sd.m_part(rep)) + " g" + std::to_string(sd.g_part(rep)) + "]");
  }
  result.extended = make_group_table(ext_mult, ext_labels);

  result.embed_m.resize(m.order);
  for (int y = 0; y < m.order; ++y) result.embed_m[y] = cosets.index_of[sd.make(y, g.identity)];
  result.map_g.resize(g.order);
  for (int x = 0; x < g.order; ++x) result.map_g[x] = cosets.index_of[sd.make(m.identity, x)];

  Cosets g_cosets = left_cosets(g.order, std::vector<int>(n_set.begin(), n_set.end()),
                                [&](int x, int k) { return g.op(x, k); });
  int q_order = static_cast<int>(g_cosets.reps.size());
  std::vector<std::vector<int>> q_mult(q_order, std::vector<int>(q_order));
  for (int i = 0; i < q_order; ++i)
    for (int j = 0; j < q_order; ++j)
      q_mult[i][j] = g_cosets.index_of[g.op(g_cosets.reps[i], g_cosets.reps[j])];
  result.quotient = make_group_table(q_mult);
  result.project_g = g_cosets.index_of;

  // G' -> Q through the G-part of any coset representative; verify
  // the choice of representative does not matter.
  result.project_ext.assign(ext_order, -1);
  for (int x = 0; x < sd.order(); ++x) {
    int target = g_cosets.index_of[sd.g_part(x)];
    int& slot = result.project_ext[cosets.index_of[x]];
    if (slot < 0) slot = target;
    else if (slot != target) fail(ErrorKind::Internal, "projection is not constant on cosets");
  }

  // Post-conditions: injectivity, commuting square, exact row.
  std::set<int> m_image(result.embed_m.begin(), result.embed_m.end());
  if (m_image.size() != static_cast<std::size_t>(m.order))
    fail(ErrorKind::Internal, "module does not embed");
  for (int a : n_set)
    if (result.map_g[a] != result.embed_m[phi.image[a]])
      fail(ErrorKind::Internal, "left square does not commute");
  for (int i = 0; i < ext_order; ++i) {
    bool in_kernel = result.project_ext[i] == result.quotient.identity;
    if (in_kernel != (m_image.count(i) > 0)) fail(ErrorKind::Internal, "row is not exact");
  }
  return result;
}

SesCheck verify_ses_morphism(const FiniteGroupTable& g, const std::vector<int>& n_subgroup,
                             const FiniteGroupTable& m, const EquivariantMap& phi,
                             const PushoutResult& result) {
  auto bad = [](std::string w) { return SesCheck{false, std::move(w)}; };
  const FiniteGroupTable& ext = result.extended;
  const FiniteGroupTable& q = result.quotient;

  if (static_cast<int>(result.embed_m.size()) != m.order) return bad("module map has wrong size");
  if (static_cast<int>(result.map_g.size()) != g.order) return bad("group map has wrong size");
  if (static_cast<int>(result.project_g.size()) != g.order) return bad("projection has wrong size");
  if (static_cast<int>(result.project_ext.size()) != ext.order) return bad("extension projection has wrong size");
  auto in_range = [](const std::vector<int>& v, int order) {
    for (int x : v)
      if (x < 0 || x >= order) return false;
    return true;
  };
  if (!in_range(result.embed_m, ext.order) || !in_range(result.map_g, ext.order) ||
      !in_range(result.project_g, q.order) || !in_range(result.project_ext, q.order))
    return bad("a map value is out of range");

  for (int a = 0; a < m.order; ++a)
    for (int b = 0; b < m.order; ++b)
      if (result.embed_m[m.op(a, b)] != ext.op(result.embed_m[a], result.embed_m[b]))
        return bad(pair_witness("module map is not a homomorphism", a, b));
  std::set<int> m_image(result.embed_m.begin(), result.embed_m.end());
  if (m_image.size() != static_cast<std::size_t>(m.order)) return bad("module map is not injective");

  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (result.map_g[g.op(a, b)] != ext.op(result.map_g[a], result.map_g[b]))
        return bad(pair_witness("group map is not a homomorphism", a, b));

  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (result.project_g[g.op(a, b)] != q.op(result.project_g[a], result.project_g[b]))
        return bad(pair_witness("quotient projection is not a homomorphism", a, b));
  for (int a = 0; a < ext.order; ++a)
    for (int b = 0; b < ext.order; ++b)
      if (result.project_ext[ext.op(a, b)] != q.op(result.project_ext[a], result.project_ext[b]))
        return bad(pair_witness("extension projection is not a homomorphism", a, b));

  std::set<int> n_set(n_subgroup.begin(), n_subgroup.end());
  for (int x = 0; x < g.order; ++x) {
    bool in_n = n_set.count(x) > 0;
    if (in_n && result.project_g[x] != q.identity)
      return bad("subgroup does not map to the quotient identity (witness " + std::to_string(x) + ")");
    if (!in_n && result.project_g[x] == q.identity)
      return bad("projection kernel exceeds the subgroup (witness " + std::to_string(x) + ")");
  }
  std::set<int> q_hit(result.project_g.begin(), result.project_g.end());
  if (q_hit.size() != static_cast<std::size_t>(q.order)) return bad("projection is not surjective");

  for (int a : n_set)
    if (result.map_g[a] != result.embed_m[phi.image[a]])
      return bad("left square does not commute (witness " + std::to_string(a) + ")");
  for (int x = 0; x < g.order; ++x)
    if (result.project_ext[result.map_g[x]] != result.project_g[x])
      return bad("right square does not commute (witness " + std::to_string(x) + ")");

  for (int i = 0; i < ext.order; ++i) {
    bool in_kernel = result.project_ext[i] == q.identity;
    if (in_kernel != (m_image.count(i) > 0))
      return bad("bottom row is not exact (witness " + std::to_string(i) + ")");
  }
  return SesCheck{true, ""};
}

} // namespace helly
