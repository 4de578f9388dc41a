#pragma once

#include "helly/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helly {

// Simple undirected graph with precomputed shortest-path distances.
// dist[u][v] == -1 marks unreachable pairs; balls never cross
// components, so disconnected inputs are handled componentwise.
struct FiniteGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;      // sorted neighbor lists
  std::vector<std::vector<int>> dist;
  std::vector<std::string> labels;        // empty or size n
};

FiniteGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Largest finite distance.
int diameter(const FiniteGraph& g);

FiniteGraph path_graph(int vertices);
FiniteGraph cycle_graph(int vertices);
FiniteGraph complete_graph(int vertices);
FiniteGraph star_graph(int leaves);
FiniteGraph hypercube_graph(int dims);

// Cayley graph of a finite group given by its multiplication table,
// with edges x -> x*g. The generator set must be inverse-closed so
// the graph is undirected.
FiniteGraph cayley_graph(const std::vector<std::vector<int>>& mult,
                         const std::vector<int>& generators);

struct Ball {
  int center = 0;
  int radius = 0;
};

// At most one ball per center (smaller radius wins: it is the binding
// constraint), centers ascending.
struct BallFamily {
  std::vector<Ball> balls;
};

BallFamily canonical_family(const FiniteGraph& g, const std::vector<Ball>& balls);

bool balls_pairwise_intersect(const FiniteGraph& g, const BallFamily& family);

// Least-index vertex lying in every ball of the family.
std::optional<int> solve_ball_family(const FiniteGraph& g, const BallFamily& family);

struct HellyVerdict {
  bool helly = false;
  // Pairwise intersecting family with empty intersection; the
  // lexicographically first one over (center-ordered radius choices,
  // absent < 0 < 1 < ...), identical for both search strategies.
  std::optional<BallFamily> counterexample;
  std::uint64_t nodes_examined = 0;
};

inline constexpr int kDefaultHellyVertexCap = 12;

// Exhaustive test over canonical families with radii up to the
// diameter. Depth-first with two sound prunes: a ball that misses an
// already chosen ball kills the subtree (those families are not
// pairwise intersecting), and an empty running intersection is
// already a counterexample since dropping the remaining centers
// keeps the family pairwise intersecting. Throws BudgetExceeded above
// the vertex cap.
HellyVerdict is_helly(const FiniteGraph& g, int max_vertices = kDefaultHellyVertexCap);

// Same verdict by plain enumeration of all radius assignments, no
// pruning. Exists to cross-check is_helly on small graphs.
HellyVerdict is_helly_unpruned(const FiniteGraph& g, int max_vertices = 8);

// Box graph on {0..m}^n under the max metric: vertices adjacent when
// every coordinate differs by at most 1. Verifies exhaustively that
// graph distance equals the max metric, which makes balls coordinate
// boxes; boxes satisfy the Helly property by interval intersection in
// each coordinate.
struct GridBoxReport {
  int n = 0;
  int m = 0;
  std::uint64_t pairs_checked = 0;
  bool distances_match = false;
  FiniteGraph graph;
};

GridBoxReport grid_box_helly(int n, int m, int max_vertices = 4096);

// Ball family at scale d with headroom 1/(2j): integer radii
// R_i = ceil((r_i + 1/(2j)) * d). A solution realizes the normalized
// radii r_i within 1/(2j) + 1/d.
struct ScaledHellyInstance {
  FiniteGraph graph;
  std::vector<int> centers;
  std::vector<Rational> radii;
  std::int64_t d = 1;
  std::int64_t j = 1;
};

void validate_scaled_instance(const ScaledHellyInstance& instance);

std::vector<std::int64_t> scaled_radii(const ScaledHellyInstance& instance);

struct ScaledHellyResult {
  bool solved = false;
  int solution = -1;
  std::vector<std::int64_t> radii_scaled;
  std::vector<Rational> residuals;  // dist(x, x_i)/d - r_i, when solved
  Rational residual_bound;          // 1/(2j) + 1/d
};

// Solves the integer-radius family; an unsolvable instance is a
// genuine negative finding (the base graph is not Helly at this
// configuration), reported with solved = false rather than an error.
ScaledHellyResult scaled_helly_check(const ScaledHellyInstance& instance);

} // namespace helly
