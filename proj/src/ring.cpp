#include "zdlab/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <sstream>

namespace zdlab {

namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << ", " << j << ", " << k << ")";
  return os.str();
}

std::vector<Element> flatten(const Table& table, std::size_t n,
                             const char* what) {
  if (table.size() != n) {
    throw RingError(ErrorKind::BadEntry,
                    std::string(what) + " table has wrong number of rows");
  }
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw RingError(ErrorKind::BadEntry,
                      std::string(what) + " table is not square at row " +
                          std::to_string(i),
                      {static_cast<std::uint32_t>(i)});
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        throw RingError(ErrorKind::BadEntry,
                        std::string(what) + " entry out of range at " +
                            std::to_string(i) + "," + std::to_string(j),
                        {static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j)});
      }
      flat.push_back(static_cast<Element>(v));
    }
  }
  return flat;
}

}  // namespace

SizeCaps SizeCaps::from_env() {
  SizeCaps caps;
  caps.builder = env_size("ZDLAB_BUILD_CAP", caps.builder);
  caps.enumeration = env_size("ZDLAB_ENUM_CAP", caps.enumeration);
  return caps;
}

std::string FiniteRing::element_name(Element x) const {
  if (x < data_->names.size()) return data_->names[x];
  return std::to_string(x);
}

FiniteRing FiniteRing::with_label(std::string label) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->label = std::move(label);
  return FiniteRing(std::move(copy));
}

FiniteRing FiniteRing::with_names(std::vector<std::string> names) const {
  if (!names.empty() && names.size() != order()) {
    throw RingError(ErrorKind::BadEntry, "name list length differs from order");
  }
  auto copy = std::make_shared<Data>(*data_);
  copy->names = std::move(names);
  return FiniteRing(std::move(copy));
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  return a.data_->order == b.data_->order && a.data_->add == b.data_->add &&
         a.data_->mul == b.data_->mul;
}

FiniteRing validate_ring(const Table& add, const Table& mul, std::string label,
                         std::vector<std::string> names) {
  const std::size_t n = add.size();
  if (n == 0) throw RingError(ErrorKind::BadEntry, "empty table");
  if (mul.size() != n) {
    throw RingError(ErrorKind::BadEntry, "add and mul dimensions differ");
  }
  if (n > 65536) throw RingError(ErrorKind::TooLarge, "order exceeds 65536");
  return validate_ring(n, flatten(add, n, "add"), flatten(mul, n, "mul"),
                       std::move(label), std::move(names));
}

FiniteRing validate_ring(std::size_t n, std::vector<Element> add,
                         std::vector<Element> mul, std::string label,
                         std::vector<std::string> names) {
  if (n == 0) throw RingError(ErrorKind::BadEntry, "empty table");
  if (add.size() != n * n || mul.size() != n * n) {
    throw RingError(ErrorKind::BadEntry, "table size is not order^2");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n || mul[i] >= n) {
      throw RingError(ErrorKind::BadEntry, "entry out of range",
                      {static_cast<std::uint32_t>(i / n),
                       static_cast<std::uint32_t>(i % n)});
    }
  }
  if (!names.empty() && names.size() != n) {
    throw RingError(ErrorKind::BadEntry, "name list length differs from order");
  }
  auto A = [&](std::size_t i, std::size_t j) -> std::size_t {
    return add[i * n + j];
  };
  auto M = [&](std::size_t i, std::size_t j) -> std::size_t {
    return mul[i * n + j];
  };

  // (R, +): identity 0, commutative, rows are permutations, associative.
  std::vector<Element> neg(n, 0);
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (A(0, i) != i) {
      throw RingError(ErrorKind::NotAbelianGroup,
                      "0 is not the additive identity at " + std::to_string(i),
                      {static_cast<std::uint32_t>(i)});
    }
    std::fill(seen.begin(), seen.end(), 0);
    bool found_inverse = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (A(i, j) != A(j, i)) {
        throw RingError(ErrorKind::NotAbelianGroup,
                        "addition is not commutative at " + std::to_string(i) +
                            "," + std::to_string(j),
                        {static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j)});
      }
      if (seen[A(i, j)]) {
        throw RingError(ErrorKind::NotAbelianGroup,
                        "row " + std::to_string(i) + " is not a permutation",
                        {static_cast<std::uint32_t>(i)});
      }
      seen[A(i, j)] = 1;
      if (A(i, j) == 0) {
        neg[i] = static_cast<Element>(j);
        found_inverse = true;
      }
    }
    if (!found_inverse) {
      throw RingError(ErrorKind::NotAbelianGroup,
                      "no additive inverse for " + std::to_string(i),
                      {static_cast<std::uint32_t>(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = A(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (A(ij, k) != A(i, A(j, k))) {
          throw RingError(ErrorKind::NotAbelianGroup,
                          "addition is not associative at " + triple(i, j, k),
                          {static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k)});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (M(0, i) != 0 || M(i, 0) != 0) {
      throw RingError(ErrorKind::NotDistributive,
                      "product with 0 is nonzero at " + std::to_string(i),
                      {0, static_cast<std::uint32_t>(i), 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = M(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (M(ij, k) != M(i, M(j, k))) {
          throw RingError(ErrorKind::NotAssociative,
                          "multiplication is not associative at " +
                              triple(i, j, k),
                          {static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k)});
        }
        if (M(i, A(j, k)) != A(ij, M(i, k))) {
          throw RingError(ErrorKind::NotDistributive,
                          "left distributivity fails at " + triple(i, j, k),
                          {static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k)});
        }
        if (M(A(i, j), k) != A(M(i, k), M(j, k))) {
          throw RingError(ErrorKind::NotDistributive,
                          "right distributivity fails at " + triple(i, j, k),
                          {static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k)});
        }
      }
    }
  }

  auto data = std::make_shared<FiniteRing::Data>();
  data->order = n;
  data->add = std::move(add);
  data->mul = std::move(mul);
  data->neg = std::move(neg);
  data->label = std::move(label);
  data->names = std::move(names);
  return FiniteRing(std::move(data));
}

namespace {

void check_index(const FiniteRing& ring, std::size_t x) {
  if (x >= ring.order()) {
    throw RingError(ErrorKind::IndexOutOfRange,
                    "element " + std::to_string(x) + " not in ring of order " +
                        std::to_string(ring.order()),
                    {static_cast<std::uint32_t>(x)});
  }
}

}  // namespace

ElementSet left_annihilator(const FiniteRing& ring, std::size_t x) {
  check_index(ring, x);
  ElementSet out;
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (ring.mul(static_cast<Element>(a), static_cast<Element>(x)) == 0) {
      out.push_back(static_cast<Element>(a));
    }
  }
  return out;
}

ElementSet right_annihilator(const FiniteRing& ring, std::size_t x) {
  check_index(ring, x);
  ElementSet out;
  for (std::size_t a = 0; a < ring.order(); ++a) {
    if (ring.mul(static_cast<Element>(x), static_cast<Element>(a)) == 0) {
      out.push_back(static_cast<Element>(a));
    }
  }
  return out;
}

bool is_left_identity(const FiniteRing& ring, Element e) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    if (ring.mul(e, static_cast<Element>(x)) != x) return false;
  }
  return true;
}

bool is_right_identity(const FiniteRing& ring, Element e) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    if (ring.mul(static_cast<Element>(x), e) != x) return false;
  }
  return true;
}

ElementSets element_sets(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  ElementSets sets;
  std::vector<char> right(n, 0);
  for (std::size_t x = 1; x < n; ++x) {
    bool left = false;
    for (std::size_t y = 1; y < n; ++y) {
      if (ring.mul(static_cast<Element>(x), static_cast<Element>(y)) == 0) {
        left = true;
        right[y] = 1;
      }
    }
    if (left) sets.left_zero_divisors.push_back(static_cast<Element>(x));
  }
  for (std::size_t y = 1; y < n; ++y) {
    if (right[y]) sets.right_zero_divisors.push_back(static_cast<Element>(y));
  }
  sets.zero_divisors =
      set_union(sets.left_zero_divisors, sets.right_zero_divisors);

  // 0 is excluded even for the zero ring.
  for (std::size_t e = 1; e < n; ++e) {
    const auto el = static_cast<Element>(e);
    if (is_left_identity(ring, el)) sets.left_identities.push_back(el);
    if (is_right_identity(ring, el)) sets.right_identities.push_back(el);
  }
  const ElementSet both =
      set_intersection(sets.left_identities, sets.right_identities);
  if (!both.empty()) sets.two_sided_identity = both.front();
  return sets;
}

ElementSet ElementSets::proper_left_identities() const {
  if (two_sided_identity) return {};
  return left_identities;
}

ElementSet ElementSets::proper_right_identities() const {
  if (two_sided_identity) return {};
  return right_identities;
}

bool ElementSets::one_sided_identities_are_two_sided() const {
  return proper_left_identities().empty() && proper_right_identities().empty();
}

bool is_commutative(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring.mul(static_cast<Element>(i), static_cast<Element>(j)) !=
          ring.mul(static_cast<Element>(j), static_cast<Element>(i))) {
        return false;
      }
    }
  }
  return true;
}

std::size_t additive_order(const FiniteRing& ring, Element x) {
  std::size_t k = 1;
  for (Element acc = x; acc != 0; acc = ring.add(acc, x)) ++k;
  return k;
}

bool contains(const ElementSet& set, Element x) {
  return std::binary_search(set.begin(), set.end(), x);
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace zdlab
