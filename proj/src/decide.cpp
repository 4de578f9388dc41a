#include "helly/decide.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace helly {

std::optional<OrderObstruction> order_precheck(const FiniteMatrixGroup& group,
                                               const std::vector<int>& ambient_orders) {
  for (int i = 0; i < group.size(); ++i)
    if (!std::binary_search(ambient_orders.begin(), ambient_orders.end(), group.orders[i]))
      return OrderObstruction{i, group.orders[i], ambient_orders};
  return std::nullopt;
}

namespace {

// Input generator slots deduplicated: equal generator matrices share
// one element index, so one image assignment.
std::vector<int> distinct_generator_slots(const FiniteMatrixGroup& group) {
  std::vector<int> slots;
  for (int idx : group.generator_indices)
    if (std::find(slots.begin(), slots.end(), idx) == slots.end()) slots.push_back(idx);
  return slots;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct SearchContext {
  const FiniteMatrixGroup* group;
  const std::vector<SignedPerm>* targets;
  std::vector<int> slots;                    // element index per slot
  std::vector<int> slot_of_gen;              // slot per input generator position
  std::vector<std::vector<int>> candidates;  // target indices per slot, ascending
  std::vector<std::int64_t> element_traces;
  std::vector<std::uint64_t> subspace;       // |targets|^(slots-1-j)
};

// Builds hom along discovery chains from the slot assignment, then
// checks traces, the full multiplication table and injectivity.
bool leaf_check(const SearchContext& ctx, const std::vector<int>& pick,
                std::vector<SignedPerm>& hom) {
  const FiniteMatrixGroup& g = *ctx.group;
  const auto& targets = *ctx.targets;
  int n = g.dim;

  hom.assign(g.size(), sp_identity(n));
  for (int k = 1; k < g.size(); ++k)
    hom[k] = sp_compose(hom[g.parent[k]], targets[pick[ctx.slot_of_gen[g.parent_gen[k]]]]);

  for (std::size_t s = 0; s < ctx.slots.size(); ++s)
    if (!(hom[ctx.slots[s]] == targets[pick[s]])) return false;
  for (int k = 0; k < g.size(); ++k)
    if (sp_trace(hom[k]) != ctx.element_traces[k]) return false;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (!(hom[g.mult[i][j]] == sp_compose(hom[i], hom[j]))) return false;
  std::set<SignedPerm> images(hom.begin(), hom.end());
  if (images.size() != hom.size()) return false;
  return true;
}

// Depth-first over candidate images from `slot` on. `covered` counts
// complete assignments ruled out, including filtered ones, so that an
// exhausted search accounts for the whole space.
bool search_from(const SearchContext& ctx, int slot, std::vector<int>& pick,
                 std::uint64_t& covered, std::vector<SignedPerm>& hom) {
  int width = static_cast<int>(ctx.targets->size());
  if (slot == static_cast<int>(ctx.slots.size())) {
    if (leaf_check(ctx, pick, hom)) return true;
    covered += 1;
    return false;
  }
  const auto& cands = ctx.candidates[slot];
  covered += ctx.subspace[slot] * static_cast<std::uint64_t>(width - cands.size());
  for (int c : cands) {
    pick[slot] = c;
    if (search_from(ctx, slot + 1, pick, covered, hom)) return true;
  }
  return false;
}

} // namespace

HomSearch find_hom_by_character(const FiniteMatrixGroup& group,
                                const std::vector<SignedPerm>& targets, int workers) {
  SearchContext ctx;
  ctx.group = &group;
  ctx.targets = &targets;
  ctx.slots = distinct_generator_slots(group);
  ctx.slot_of_gen.assign(group.generator_indices.size(), -1);
  for (std::size_t j = 0; j < group.generator_indices.size(); ++j)
    for (std::size_t s = 0; s < ctx.slots.size(); ++s)
      if (ctx.slots[s] == group.generator_indices[j]) {
        ctx.slot_of_gen[j] = static_cast<int>(s);
        break;
      }
  int g = static_cast<int>(ctx.slots.size());
  int width = static_cast<int>(targets.size());

  ctx.element_traces.reserve(group.size());
  for (const auto& m : group.elements) ctx.element_traces.push_back(to_int64(trace(m)));

  std::vector<int> target_orders(width);
  std::vector<std::int64_t> target_traces(width);
  for (int t = 0; t < width; ++t) {
    target_orders[t] = sp_order(targets[t]);
    target_traces[t] = sp_trace(targets[t]);
  }
  ctx.candidates.resize(g);
  for (int s = 0; s < g; ++s) {
    int elem = ctx.slots[s];
    for (int t = 0; t < width; ++t)
      if (target_orders[t] == group.orders[elem] && target_traces[t] == ctx.element_traces[elem])
        ctx.candidates[s].push_back(t);
  }
  ctx.subspace.resize(g);
  for (int s = 0; s < g; ++s) ctx.subspace[s] = pow_u64(width, g - 1 - s);

  HomSearch result;
  result.space = pow_u64(width, g);

  const auto& first = ctx.candidates[0];
  int usable = std::max(1, std::min<int>(workers, static_cast<int>(first.size())));

  if (usable <= 1) {
    std::uint64_t covered = ctx.subspace[0] * static_cast<std::uint64_t>(width - first.size());
    std::vector<int> pick(g, 0);
    std::vector<SignedPerm> hom;
    bool found = false;
    for (int c : first) {
      pick[0] = c;
      if (search_from(ctx, 1, pick, covered, hom)) { found = true; break; }
    }
    if (found) result.hom = std::move(hom);
    result.covered = result.hom ? 0 : covered; // only meaningful on exhaustion
    return result;
  }

  // Block-partition the first slot's candidates; block order equals
  // candidate order, so the first successful block holds the global
  // lexicographic minimum.
  struct WorkerOut {
    std::optional<std::vector<SignedPerm>> hom;
    std::uint64_t covered = 0;
  };
  std::vector<WorkerOut> outs(usable);
  std::vector<std::thread> threads;
  int per = static_cast<int>(first.size()) / usable;
  int extra = static_cast<int>(first.size()) % usable;
  int begin = 0;
  for (int w = 0; w < usable; ++w) {
    int count = per + (w < extra ? 1 : 0);
    int end = begin + count;
    threads.emplace_back([&ctx, &outs, &first, g, w, begin, end]() {
      std::vector<int> pick(g, 0);
      std::vector<SignedPerm> hom;
      for (int i = begin; i < end; ++i) {
        pick[0] = first[i];
        if (search_from(ctx, 1, pick, outs[w].covered, hom)) {
          outs[w].hom = hom;
          return;
        }
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();

  std::uint64_t covered = ctx.subspace[0] * static_cast<std::uint64_t>(width - first.size());
  for (int w = 0; w < usable; ++w) {
    covered += outs[w].covered;
    if (!result.hom && outs[w].hom) result.hom = outs[w].hom;
  }
  result.covered = result.hom ? 0 : covered; // only meaningful on exhaustion
  return result;
}

MatQ build_intertwiner(const FiniteMatrixGroup& group, const std::vector<SignedPerm>& hom,
                       std::uint64_t seed) {
  int n = group.dim;
  std::vector<MatQ> hom_mats;
  hom_mats.reserve(hom.size());
  for (const auto& h : hom) hom_mats.push_back(signed_perm_matrix(h));
  std::vector<MatQ> inverses;
  inverses.reserve(group.size());
  for (int k = 0; k < group.size(); ++k) inverses.push_back(group.elements[group.inverse[k]]);

  auto average = [&](const MatQ& probe) {
    MatQ t(n, n);
    for (int k = 0; k < group.size(); ++k) t = t + hom_mats[k] * probe * inverses[k];
    return t;
  };

  std::vector<MatQ> probes;
  probes.push_back(MatQ::identity(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatQ e(n, n);
      e.at(i, j) = 1;
      probes.push_back(e);
    }
  std::mt19937_64 rng(seed);
  for (int r = 0; r < 16; ++r) {
    MatQ x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
    probes.push_back(x);
  }

  for (const auto& probe : probes) {
    MatQ t = average(probe);
    if (det(t) != 0) return primitive_integer_form(t);
  }
  fail(ErrorKind::Internal, "no invertible intertwiner among probes");
}

HellyDecision decide_helly(const PointGroup& pg, const DecideOptions& opts) {
  const FiniteMatrixGroup& group = pg.group;
  int n = group.dim;

  std::vector<int> slots = distinct_generator_slots(group);
  if (static_cast<int>(slots.size()) > opts.max_generators)
    fail(ErrorKind::BudgetExceeded,
         std::to_string(slots.size()) + " generators above search cap " +
             std::to_string(opts.max_generators));

  std::vector<SignedPerm> targets = enumerate_signed_perms(n, opts.max_dim);
  std::set<int> order_set;
  for (const auto& t : targets) order_set.insert(sp_order(t));
  std::vector<int> ambient_orders(order_set.begin(), order_set.end());

  HellyDecision decision;
  decision.assignment_space = pow_u64(targets.size(), static_cast<int>(slots.size()));

  if (auto obstruction = order_precheck(group, ambient_orders)) {
    decision.helly = false;
    decision.precheck_passed = false;
    ObstructionWitness witness;
    witness.kind = ObstructionWitness::Kind::Order;
    witness.order = *obstruction;
    decision.obstruction = witness;
    return decision;
  }
  decision.precheck_passed = true;

  HomSearch search = find_hom_by_character(group, targets, opts.workers);
  if (!search.hom) {
    if (search.covered != search.space)
      fail(ErrorKind::Internal, "exhausted search did not cover the assignment space");
    decision.helly = false;
    ObstructionWitness witness;
    witness.kind = ObstructionWitness::Kind::Character;
    witness.character = CharacterObstruction{search.covered};
    decision.obstruction = witness;
    return decision;
  }

  MatQ phi = build_intertwiner(group, *search.hom, opts.seed);
  MatQ phi_inv = mat_inverse(phi);
  for (int k = 0; k < group.size(); ++k)
    if (phi * group.elements[k] * phi_inv != signed_perm_matrix((*search.hom)[k]))
      fail(ErrorKind::Internal, "intertwiner does not conjugate the group");

  decision.helly = true;
  decision.certificate = ConjugacyCertificate{phi, *search.hom};
  return decision;
}

} // namespace helly
