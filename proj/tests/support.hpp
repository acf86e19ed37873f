#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "zdlab/builders.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/ring.hpp"

namespace support {

using zdlab::Element;
using zdlab::ElementSet;
using zdlab::FiniteRing;

inline ElementSet set(std::initializer_list<int> xs) {
  ElementSet out;
  for (int x : xs) out.push_back(static_cast<Element>(x));
  return out;
}

inline FiniteRing t2() { return zdlab::first_row_ring(2, 2); }
inline FiniteRing u3() { return zdlab::first_row_ring(2, 3); }

// One ring per class for every order up to `max_order`.
inline const std::vector<FiniteRing>& enumerated(std::size_t max_order = 8) {
  static std::vector<std::vector<FiniteRing>> cache(9);
  auto& slot = cache.at(max_order);
  if (slot.empty()) {
    for (std::size_t n = 1; n <= max_order; ++n) {
      zdlab::EnumerationTask task;
      task.order = n;
      for (auto& r : zdlab::enumerate_rings(task)) slot.push_back(r);
    }
  }
  return slot;
}

// Copy of `ring` with the nonzero elements permuted at random.
inline FiniteRing relabel(const FiniteRing& ring, std::mt19937& rng,
                          std::vector<Element>* map_out = nullptr) {
  const std::size_t n = ring.order();
  std::vector<Element> map(n);
  std::iota(map.begin(), map.end(), Element{0});
  std::shuffle(map.begin() + 1, map.end(), rng);
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = static_cast<Element>(a), y = static_cast<Element>(b);
      add[map[a] * n + map[b]] = map[ring.add(x, y)];
      mul[map[a] * n + map[b]] = map[ring.mul(x, y)];
    }
  }
  if (map_out) *map_out = map;
  return zdlab::validate_ring(n, std::move(add), std::move(mul), ring.label() + "'");
}

}  // namespace support
