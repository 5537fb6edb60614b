#include "divalg/groups/morphism.hpp"

namespace divalg::groups {

std::vector<Elem> greedy_generators(const FiniteGroupTable& g) {
  std::vector<Elem> by_order(g.order());
  for (Elem x = 0; x < g.order(); ++x) by_order[x] = x;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  Subgroup current{g.identity()};
  for (Elem x : by_order) {
    if (current.size() == g.order()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = g.generated(gens);
  }
  return gens;
}

}  // namespace divalg::groups
