#pragma once

#include "helly/matq.hpp"

#include <vector>

namespace helly {

// Finite group of invertible rational matrices, closed under
// multiplication, with full multiplication table. Element 0 is the
// identity; discovery order (breadth-first over right multiplication
// by the generators, in input order) is the canonical element order,
// so equal inputs always produce identical tables.
struct FiniteMatrixGroup {
  int dim = 0;
  std::vector<MatQ> elements;
  // elements[k] == elements[parent[k]] * gen(parent_gen[k]); identity
  // has parent -1. Lets homomorphisms extend from generator images.
  std::vector<int> parent;
  std::vector<int> parent_gen;
  // One entry per input generator (duplicates collapse to one index).
  std::vector<int> generator_indices;
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<int> orders;

  int size() const { return static_cast<int>(elements.size()); }
};

inline constexpr int kDefaultMaxGroupSize = 10000;

// Breadth-first closure of the generated group. Throws InvalidInput
// for empty input, shape mismatches or singular generators, and
// GroupTooLarge when the closure passes max_size.
FiniteMatrixGroup close_group(const std::vector<MatQ>& generators, int max_size = kDefaultMaxGroupSize);

// Multiplicative order of each element, computed from the table.
std::vector<int> element_orders(const FiniteMatrixGroup& group);

} // namespace helly
