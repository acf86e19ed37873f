#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdlab/ring.hpp"

namespace zdlab {

/// Isomorphism type of a finite abelian group, Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k.
///
/// Elements of the labeled group are coordinate vectors (a_1, ..., a_k),
/// 0 <= a_i < d_i, indexed in mixed radix with the last coordinate least
/// significant. `generators[i]` is the index of the i-th basis vector.
struct AdditiveGroupShape {
  std::vector<std::size_t> invariant_factors;
  std::vector<Element> generators;

  std::size_t order() const;
  // "Z_4xZ_2" style, largest factor first; "0" for the trivial group.
  std::string name() const;

  friend bool operator==(const AdditiveGroupShape&,
                         const AdditiveGroupShape&) = default;
};

// All abelian groups of order n; cyclic first, then by number of factors.
std::vector<AdditiveGroupShape> abelian_group_shapes(std::size_t n);

// Addition table of the labeled group of a shape (flat, row-major).
std::vector<Element> group_addition_table(const AdditiveGroupShape& shape);

struct EnumerationStats {
  std::atomic<std::uint64_t> search_nodes{0};
  std::atomic<std::uint64_t> raw_structures{0};
  std::atomic<std::uint64_t> classes{0};
};

struct EnumerationTask {
  std::size_t order = 0;
  // Restrict to one group shape; all shapes of `order` when unset.
  std::optional<AdditiveGroupShape> shape;
  // One representative per isomorphism class instead of every table.
  bool dedup = true;
  // Worker threads; shards are (shape, first structure constant).
  std::size_t shards = 1;
  // Orders above caps.enumeration_default require this.
  bool allow_large = false;
  SizeCaps caps = {};
  EnumerationStats* stats = nullptr;
};

/// Every ring structure on each additive group of the task's order.
///
/// Products of basis generators (structure constants) are chosen subject to
/// gcd(d_i, d_j) * (g_i g_j) = 0, extended bilinearly, and kept when
/// associative on generator triples; every yielded table is then validated
/// in full. Without dedup the rings come out in search order (shape, then
/// shard, then depth-first). With dedup each class is represented by its
/// lexicographically least multiplication table over all additive
/// automorphisms, sorted by shape then table. Throws OrderTooLarge.
std::vector<FiniteRing> enumerate_rings(const EnumerationTask& task);

// Streaming form; `sink` sees rings in the same order as above.
void enumerate_rings(const EnumerationTask& task,
                     const std::function<void(const FiniteRing&)>& sink);

FiniteRing opposite_ring(const FiniteRing& ring);

// Per-element invariants preserved by ring isomorphisms; the sorted multiset
// of signatures is a ring invariant.
struct ElementSignature {
  std::uint32_t additive_order = 0;
  std::uint32_t left_annihilator = 0;
  std::uint32_t right_annihilator = 0;
  std::uint32_t square_order = 0;  // additive order of x^2
  bool square_zero = false;
  bool idempotent = false;
  bool left_identity = false;
  bool right_identity = false;

  friend auto operator<=>(const ElementSignature&,
                          const ElementSignature&) = default;
};

std::vector<ElementSignature> element_signatures(const FiniteRing& ring);

/// Whether a bijection preserving + and * exists.
///
/// Backtracks over images of an additive generating set, matching element
/// signatures and checking multiplicativity on every pair as soon as both
/// images are determined.
bool is_isomorphic(const FiniteRing& a, const FiniteRing& b);

// The isomorphism a -> b when one exists (image of each element of a).
std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& a,
                                                     const FiniteRing& b);

}  // namespace zdlab
