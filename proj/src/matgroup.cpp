#include "helly/matgroup.hpp"

#include "helly/errors.hpp"

#include <map>
#include <string>

namespace helly {

FiniteMatrixGroup close_group(const std::vector<MatQ>& generators, int max_size) {
  if (generators.empty()) fail(ErrorKind::InvalidInput, "no generators given");
  int n = generators[0].rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      fail(ErrorKind::InvalidInput, "generators must be square matrices of one size");
    if (det(g) == 0) fail(ErrorKind::InvalidInput, "singular generator");
  }

  FiniteMatrixGroup group;
  group.dim = n;
  std::map<MatQ, int> index;
  auto add = [&](const MatQ& m, int parent, int parent_gen) {
    group.elements.push_back(m);
    group.parent.push_back(parent);
    group.parent_gen.push_back(parent_gen);
    index.emplace(m, group.size() - 1);
    if (group.size() > max_size)
      fail(ErrorKind::GroupTooLarge,
           "group closure exceeded " + std::to_string(max_size) + " elements");
  };

  add(MatQ::identity(n), -1, -1);
  for (int head = 0; head < group.size(); ++head) {
    MatQ current = group.elements[head];
    for (int j = 0; j < static_cast<int>(generators.size()); ++j) {
      MatQ next = current * generators[j];
      if (!index.count(next)) add(next, head, j);
    }
  }

  for (const auto& g : generators) group.generator_indices.push_back(index.at(g));

  int order = group.size();
  group.mult.assign(order, std::vector<int>(order, -1));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      auto it = index.find(group.elements[i] * group.elements[j]);
      if (it == index.end()) fail(ErrorKind::Internal, "closure is not closed under products");
      group.mult[i][j] = it->second;
    }

  group.inverse.assign(order, -1);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (group.mult[i][j] == 0) { group.inverse[i] = j; break; }
  for (int i = 0; i < order; ++i)
    if (group.inverse[i] < 0) fail(ErrorKind::Internal, "element without inverse");

  group.orders.assign(order, 0);
  for (int i = 0; i < order; ++i) {
    int k = 1, cur = i;
    while (cur != 0) { cur = group.mult[cur][i]; ++k; }
    group.orders[i] = k;
  }

  return group;
}

std::vector<int> element_orders(const FiniteMatrixGroup& group) { return group.orders; }

} // namespace helly
