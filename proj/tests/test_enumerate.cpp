#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zdlab/enumerate.hpp"

using namespace zdlab;

namespace {

std::vector<std::size_t> factors_of(const AdditiveGroupShape& s) { return s.invariant_factors; }

std::vector<FiniteRing> run(std::size_t order, bool dedup, std::size_t shards = 1,
                            std::optional<AdditiveGroupShape> shape = std::nullopt) {
  EnumerationTask task;
  task.order = order;
  task.dedup = dedup;
  task.shards = shards;
  task.shape = std::move(shape);
  return enumerate_rings(task);
}

std::set<std::vector<Element>> mul_tables(const std::vector<FiniteRing>& rings) {
  std::set<std::vector<Element>> out;
  for (const FiniteRing& r : rings) out.emplace(r.mul_table().begin(), r.mul_table().end());
  return out;
}

// Frozen from the full-table oracle (tests/oracle): ring structures on a
// fixed labeled group, and their isomorphism classes.
struct ShapeCount {
  std::vector<std::size_t> factors;
  std::size_t raw;
  std::size_t classes;
};
const std::vector<ShapeCount> kOracleCounts = {
    {{2}, 2, 2},  {{3}, 3, 2},    {{4}, 4, 3}, {{2, 2}, 28, 8},  {{5}, 5, 2},
    {{6}, 6, 4},  {{7}, 7, 2},    {{8}, 8, 4}, {{2, 4}, 60, 20}, {{2, 2, 2}, 1688, 28},
};

}  // namespace

TEST_CASE("abelian group shapes") {
  auto shapes = abelian_group_shapes(8);
  REQUIRE(shapes.size() == 3);
  CHECK(factors_of(shapes[0]) == std::vector<std::size_t>{8});
  CHECK(factors_of(shapes[1]) == std::vector<std::size_t>{2, 4});
  CHECK(factors_of(shapes[2]) == std::vector<std::size_t>{2, 2, 2});
  CHECK(shapes[1].name() == "Z_4xZ_2");
  CHECK(shapes[1].order() == 8);
  CHECK(abelian_group_shapes(12).size() == 2);
  CHECK(abelian_group_shapes(16).size() == 5);
  CHECK(abelian_group_shapes(7).size() == 1);
  CHECK(abelian_group_shapes(1).size() == 1);
  CHECK(abelian_group_shapes(1)[0].name() == "0");
}

TEST_CASE("group tables follow the mixed-radix labeling") {
  for (std::size_t n : {4u, 6u, 8u, 9u, 12u}) {
    for (const auto& s : abelian_group_shapes(n)) {
      std::vector<int> f(s.invariant_factors.begin(), s.invariant_factors.end());
      const auto table = group_addition_table(s);
      CHECK(std::vector<int>(table.begin(), table.end()) == oracle::product_group(f));
      // Generators are the unit coordinate vectors.
      for (std::size_t i = 0; i < s.generators.size(); ++i) {
        std::size_t expected = 1;
        for (std::size_t j = i + 1; j < f.size(); ++j) expected *= f[j];
        CHECK(s.generators[i] == expected);
      }
    }
  }
}

TEST_CASE("class counts per order") {
  const std::vector<std::size_t> expected = {1, 2, 2, 11, 2, 4, 2, 52};
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(run(n, true).size() == expected[n - 1]);
  }
}

TEST_CASE("raw structures equal the oracle's full-table search") {
  for (const ShapeCount& sc : kOracleCounts) {
    std::size_t n = 1;
    for (auto d : sc.factors) n *= d;
    CAPTURE(n);
    const auto shapes = abelian_group_shapes(n);
    const auto shape = std::find_if(shapes.begin(), shapes.end(), [&](const auto& s) {
      return s.invariant_factors == sc.factors;
    });
    REQUIRE(shape != shapes.end());
    const auto raw = run(n, false, 1, *shape);
    CHECK(raw.size() == sc.raw);
    CHECK(run(n, true, 1, *shape).size() == sc.classes);
    // Same labeled group, so the table sets must agree exactly.
    std::vector<int> f(sc.factors.begin(), sc.factors.end());
    std::set<std::vector<Element>> expected;
    for (const auto& m : oracle::ring_multiplications(static_cast<int>(n), oracle::product_group(f))) {
      expected.emplace(m.begin(), m.end());
    }
    CHECK(mul_tables(raw) == expected);
  }
}

TEST_CASE("dedup keeps one ring per class") {
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto classes = run(n, true);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        CHECK_FALSE(is_isomorphic(classes[i], classes[j]));
      }
    }
    if (n <= 6) {
      for (const FiniteRing& r : run(n, false)) {
        CHECK(std::count_if(classes.begin(), classes.end(),
                            [&](const FiniteRing& c) { return is_isomorphic(c, r); }) == 1);
      }
    }
  }
}

TEST_CASE("labels name the order and group") {
  const auto rings = run(4, true);
  CHECK(rings.front().label() == "R4[Z_4]#1");
  CHECK(run(4, false).back().label().rfind("raw4[Z_2xZ_2]#", 0) == 0);
}

TEST_CASE("output does not depend on the shard count") {
  for (bool dedup : {true, false}) {
    const auto one = run(8, dedup, 1);
    const auto many = run(8, dedup, 3);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i] == many[i]);
      CHECK(one[i].label() == many[i].label());
    }
  }
}

TEST_CASE("streaming matches the returned list") {
  EnumerationTask task;
  task.order = 6;
  std::vector<FiniteRing> streamed;
  enumerate_rings(task, [&](const FiniteRing& r) { streamed.push_back(r); });
  CHECK(streamed == enumerate_rings(task));
}

TEST_CASE("statistics are collected") {
  EnumerationStats stats;
  EnumerationTask task;
  task.order = 4;
  task.stats = &stats;
  enumerate_rings(task);
  CHECK(stats.classes == 11);
  CHECK(stats.raw_structures == 32);
  CHECK(stats.search_nodes > 0);
}

TEST_CASE("order limits") {
  EnumerationTask task;
  task.order = 9;
  CHECK_THROWS_AS(enumerate_rings(task), RingError);
  task.order = 17;
  task.allow_large = true;
  try {
    enumerate_rings(task);
    FAIL("accepted");
  } catch (const RingError& e) {
    CHECK(e.kind() == ErrorKind::OrderTooLarge);
  }
  task.order = 0;
  CHECK_THROWS_AS(enumerate_rings(task), RingError);
}

TEST_CASE("opposite ring") {
  const FiniteRing t2 = support::t2();
  const FiniteRing op = opposite_ring(t2);
  CHECK(op.label() == "op(first_row(2,2))");
  CHECK(opposite_ring(op) == t2);
  CHECK(opposite_ring(op).label() == t2.label());
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(op.mul(a, b) == t2.mul(b, a));
  CHECK_FALSE(is_isomorphic(t2, op));
  CHECK(is_isomorphic(cyclic_ring(6), opposite_ring(cyclic_ring(6))));
}

TEST_CASE("isomorphism search returns a structure-preserving bijection") {
  std::mt19937 rng(7);
  for (const FiniteRing& r : support::enumerated(8)) {
    std::vector<Element> map;
    const FiniteRing s = support::relabel(r, rng, &map);
    const auto found = find_isomorphism(r, s);
    REQUIRE(found);
    const auto& phi = *found;
    std::vector<Element> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
    for (Element a = 0; a < r.order(); ++a) {
      for (Element b = 0; b < r.order(); ++b) {
        CHECK(phi[r.add(a, b)] == s.add(phi[a], phi[b]));
        CHECK(phi[r.mul(a, b)] == s.mul(phi[a], phi[b]));
      }
    }
  }
  CHECK_FALSE(find_isomorphism(cyclic_ring(4), null_ring({2, 2})));
  CHECK_FALSE(is_isomorphic(cyclic_ring(4), cyclic_ring(5)));
}

TEST_CASE("element signatures are invariant") {
  std::mt19937 rng(3);
  for (const FiniteRing& r : support::enumerated(6)) {
    auto a = element_signatures(r);
    auto b = element_signatures(support::relabel(r, rng));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  const auto z6 = element_signatures(cyclic_ring(6));
  CHECK(z6[1].left_identity);
  CHECK(z6[1].idempotent);
  CHECK(z6[3].idempotent);
  CHECK(z6[2].additive_order == 3);
  CHECK(z6[3].left_annihilator == 3);
}
