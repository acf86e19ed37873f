#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdlab/error.hpp"

namespace zdlab {

// Elements are indices 0..n-1 into the Cayley tables; 0 is always the
// additive identity.
using Element = std::uint16_t;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

// Row-major square table as accepted from callers and the JSON format.
using Table = std::vector<std::vector<std::int64_t>>;

struct SizeCaps {
  std::size_t builder = 4096;
  std::size_t enumeration = 16;
  // Orders above this need an explicit opt-in from the caller.
  std::size_t enumeration_default = 8;

  // Reads ZDLAB_BUILD_CAP / ZDLAB_ENUM_CAP, falling back to the defaults.
  static SizeCaps from_env();
};

/// A finite (not necessarily unital or commutative) ring given by its
/// addition and multiplication tables.
///
/// Instances only come out of validate_ring(), so every FiniteRing satisfies
/// the ring axioms. Copies share the immutable tables.
class FiniteRing {
 public:
  std::size_t order() const noexcept { return data_->order; }

  Element add(Element a, Element b) const noexcept {
    return data_->add[std::size_t{a} * data_->order + b];
  }
  Element mul(Element a, Element b) const noexcept {
    return data_->mul[std::size_t{a} * data_->order + b];
  }
  Element neg(Element a) const noexcept { return data_->neg[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  std::span<const Element> add_table() const noexcept { return data_->add; }
  std::span<const Element> mul_table() const noexcept { return data_->mul; }

  const std::string& label() const noexcept { return data_->label; }

  // Optional human-readable element names (matrix notation for builder
  // families). Empty when the ring carries none.
  const std::vector<std::string>& names() const noexcept {
    return data_->names;
  }
  std::string element_name(Element x) const;

  FiniteRing with_label(std::string label) const;
  FiniteRing with_names(std::vector<std::string> names) const;

  // Table equality; labels and names are provenance and do not count.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> add;
    std::vector<Element> mul;
    std::vector<Element> neg;
    std::string label;
    std::vector<std::string> names;
  };

  explicit FiniteRing(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend FiniteRing validate_ring(std::size_t, std::vector<Element>,
                                  std::vector<Element>, std::string,
                                  std::vector<std::string>);
};

/// Checks the ring axioms exhaustively (O(n^3)) and returns the ring.
/// Throws RingError with BadEntry, NotAbelianGroup, NotAssociative or
/// NotDistributive; the latter two carry the (i, j, k) witness.
FiniteRing validate_ring(const Table& add, const Table& mul,
                         std::string label = {},
                         std::vector<std::string> names = {});

// Same, over flat row-major tables of size order*order.
FiniteRing validate_ring(std::size_t order, std::vector<Element> add,
                         std::vector<Element> mul, std::string label = {},
                         std::vector<std::string> names = {});

// {a : a x = 0}
ElementSet left_annihilator(const FiniteRing& ring, std::size_t x);
// {a : x a = 0}
ElementSet right_annihilator(const FiniteRing& ring, std::size_t x);

struct ElementSets {
  ElementSet left_zero_divisors;   // Z_l: x != 0 with x y = 0 for some y != 0
  ElementSet right_zero_divisors;  // Z_r: x != 0 with y x = 0 for some y != 0
  ElementSet zero_divisors;        // Z(R)* = Z_l u Z_r
  ElementSet left_identities;
  ElementSet right_identities;
  std::optional<Element> two_sided_identity;

  // Left (right) identities that are not two-sided.
  ElementSet proper_left_identities() const;
  ElementSet proper_right_identities() const;
  // Every one-sided identity is the two-sided identity (vacuous when there
  // are none).
  bool one_sided_identities_are_two_sided() const;
};

ElementSets element_sets(const FiniteRing& ring);

bool is_commutative(const FiniteRing& ring);

bool is_left_identity(const FiniteRing& ring, Element e);
bool is_right_identity(const FiniteRing& ring, Element e);

// Additive order of x.
std::size_t additive_order(const FiniteRing& ring, Element x);

// Sorted-set helpers used throughout.
bool contains(const ElementSet& set, Element x);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

}  // namespace zdlab
