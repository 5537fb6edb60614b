#pragma once

// Injective homomorphism search by generator images.  The target only needs
// order(), identity(), mul(a, b) and element_order(a), so it can be given
// implicitly instead of as a table.

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "divalg/groups/table.hpp"

namespace divalg::groups {

/// Greedy generating set: elements by descending order, kept when new.
std::vector<Elem> greedy_generators(const FiniteGroupTable& g);

template <class Target>
bool verify_monomorphism(const FiniteGroupTable& g, const Target& t, const std::vector<std::uint64_t>& images) {
  if (images.size() != g.order()) return false;
  std::vector<std::uint64_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (images[g.mul(a, b)] != t.mul(images[a], images[b])) return false;
    }
  }
  return true;
}

/// Images of all elements of g under some monomorphism into t, verified by a
/// full table check, or nullopt if none exists.
template <class Target>
std::optional<std::vector<std::uint64_t>> find_monomorphism(const FiniteGroupTable& g, const Target& t) {
  if (t.order() % g.order() != 0) return std::nullopt;
  const std::vector<Elem> gens = greedy_generators(g);
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  std::vector<std::vector<std::uint64_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto want = static_cast<std::uint64_t>(g.element_order(gens[i]));
    for (std::uint64_t x = 0; x < t.order(); ++x) {
      if (static_cast<std::uint64_t>(t.element_order(x)) == want) candidates[i].push_back(x);
    }
  }

  struct State {
    std::vector<std::uint64_t> image;
    std::unordered_map<std::uint64_t, Elem> preimage;
  };
  std::vector<std::uint64_t> chosen(gens.size());

  // Extends a consistent partial map on <gens[0..level)> by gens[level] -> img.
  auto extend = [&](State& s, std::size_t level) {
    std::vector<Elem> queue;
    for (Elem x = 0; x < g.order(); ++x) {
      if (s.image[x] != kUnset) queue.push_back(x);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Elem x = queue[qi];
      for (std::size_t j = 0; j <= level; ++j) {
        const Elem y = g.mul(x, gens[j]);
        const std::uint64_t img = t.mul(s.image[x], chosen[j]);
        if (s.image[y] == kUnset) {
          auto [it, inserted] = s.preimage.emplace(img, y);
          if (!inserted) return false;
          s.image[y] = img;
          queue.push_back(y);
        } else if (s.image[y] != img) {
          return false;
        }
      }
    }
    return true;
  };

  State root;
  root.image.assign(g.order(), kUnset);
  root.image[g.identity()] = t.identity();
  root.preimage.emplace(t.identity(), g.identity());

  std::optional<std::vector<std::uint64_t>> result;
  auto search = [&](auto&& self, const State& s, std::size_t level) -> bool {
    if (level == gens.size()) {
      if (verify_monomorphism(g, t, s.image)) {
        result = s.image;
        return true;
      }
      return false;
    }
    for (std::uint64_t c : candidates[level]) {
      if (s.preimage.count(c)) continue;
      chosen[level] = c;
      State next = s;
      if (!extend(next, level)) continue;
      if (self(self, next, level + 1)) return true;
    }
    return false;
  };
  search(search, root, 0);
  return result;
}

template <class Target>
bool are_isomorphic(const FiniteGroupTable& g, const Target& t) {
  return g.order() == t.order() && find_monomorphism(g, t).has_value();
}

}  // namespace divalg::groups
