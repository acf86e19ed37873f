#include <algorithm>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "zdlab/graph.hpp"
#include "zdlab/serialize.hpp"
#include "zdlab/verify.hpp"

using namespace zdlab;

namespace {

constexpr int kCases = 300;

// Every raw ring structure of orders 2..8, the pool the generator draws from.
const std::vector<FiniteRing>& raw_pool() {
  static const std::vector<FiniteRing> pool = [] {
    std::vector<FiniteRing> out;
    for (std::size_t n = 2; n <= 8; ++n) {
      EnumerationTask task;
      task.order = n;
      task.dedup = false;
      for (auto& r : enumerate_rings(task)) out.push_back(r);
    }
    return out;
  }();
  return pool;
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

// A raw table, a small product or a family ring; possibly reversed, always
// relabeled.
FiniteRing random_ring(std::mt19937& rng) {
  static const std::vector<FiniteRing> families = family_rings();
  FiniteRing r = pick(raw_pool(), rng);
  switch (rng() % 4) {
    case 0: {
      FiniteRing small = pick(raw_pool(), rng);
      while (small.order() > 4) small = pick(raw_pool(), rng);
      r = direct_product(pick(support::enumerated(4), rng), small);
      break;
    }
    case 1:
      r = pick(families, rng);
      break;
    default:
      break;
  }
  if (rng() % 2) r = opposite_ring(r);
  return support::relabel(r, rng);
}

struct Summary {
  std::size_t vertices, edges, loops, sinks, sources, clique;
  std::uint32_t max_finite;
  bool unreachable;
  bool operator==(const Summary&) const = default;
};

Summary summarize(const FiniteRing& r) {
  const ZdGraph g = build_graph(r);
  const DistanceMatrix d = distances(g.digraph());
  return {g.vertices().size(), g.digraph().edge_count(), g.loops().size(),
          sinks(g).size(),     sources(g).size(),        clique_number(g.digraph()),
          d.max_finite(),      d.has_unreachable_pair()};
}

}  // namespace

TEST_CASE("relabeling is an isomorphism and keeps every graph invariant") {
  std::mt19937 rng(20261016);
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    const FiniteRing s = support::relabel(r, rng);
    CHECK(is_isomorphic(r, s));
    CHECK(summarize(r) == summarize(s));
  }
}

TEST_CASE("the opposite ring reverses the graph") {
  std::mt19937 rng(11);
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    const FiniteRing op = opposite_ring(r);
    CHECK(opposite_ring(op) == r);
    const ZdGraph g = build_graph(r);
    const ZdGraph h = build_graph(op);
    CHECK(h.digraph() == g.digraph().reversed());
    CHECK(h.loops() == g.loops());
    CHECK(sinks(h) == sources(g));
    CHECK(sources(h) == sinks(g));
    CHECK(element_sets(op).left_identities == element_sets(r).right_identities);
  }
}

TEST_CASE("edges are exactly the zero products and distances are a metric") {
  std::mt19937 rng(5);
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    const ZdGraph g = build_graph(r);
    const Digraph& d = g.digraph();
    const std::size_t v = d.vertex_count();
    for (std::size_t a = 0; a < v; ++a) {
      CHECK(d.label(a) != 0);
      for (std::size_t b = 0; b < v; ++b) {
        CHECK(d.has_edge(a, b) == (a != b && r.mul(d.label(a), d.label(b)) == 0));
      }
    }
    // Every nonzero element outside the graph is a non zero divisor.
    for (Element x = 1; x < r.order(); ++x) {
      if (d.position(x)) continue;
      for (Element y = 1; y < r.order(); ++y) {
        CHECK(r.mul(x, y) != 0);
        CHECK(r.mul(y, x) != 0);
      }
    }
    const DistanceMatrix dist = distances(d);
    for (std::size_t a = 0; a < v; ++a) {
      CHECK(dist.at(a, a) == 0);
      for (std::size_t b = 0; b < v; ++b) {
        if (d.has_edge(a, b)) CHECK(dist.at(a, b) == 1);
        for (std::size_t c = 0; c < v; ++c) {
          const auto ab = dist.at(a, b), bc = dist.at(b, c);
          if (ab != DistanceMatrix::kInfinite && bc != DistanceMatrix::kInfinite) {
            CHECK(dist.at(a, c) <= ab + bc);
          }
        }
      }
    }
  }
}

TEST_CASE("left identities split the ring") {
  std::mt19937 rng(99);
  int split = 0;
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    for (Element e : element_sets(r).left_identities) {
      const auto d = decompose(r, e);
      CHECK(d.ideal.size() * d.corner.size() == r.order());
      CHECK(is_isomorphic(subring(r, d.corner), quotient_ring(r, d.ideal)));
      for (Element x = 0; x < r.order(); ++x) {
        const auto [a, b] = d.splitting[x];
        CHECK(r.add(a, b) == x);
        CHECK(r.mul(a, e) == a);
        CHECK(r.mul(b, e) == 0);
      }
      ++split;
    }
  }
  CHECK(split > 50);
}

TEST_CASE("rings survive a JSON round trip") {
  std::mt19937 rng(1);
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    const FiniteRing back = ring_from_json_text(ring_to_line(r));
    CHECK(back == r);
    CHECK(back.label() == r.label());
    CHECK(back.names() == r.names());
  }
  const FiniteRing t2 = support::t2();
  CHECK(ring_from_json(ring_to_json(t2)).names() == t2.names());
}

TEST_CASE("no per-ring claim fails on random rings") {
  std::mt19937 rng(42);
  for (int i = 0; i < kCases / 3; ++i) {
    const FiniteRing r = random_ring(rng);
    CAPTURE(r.label());
    for (const auto& rep : check_ring(r)) CHECK_MESSAGE(rep.verdict != Verdict::Fail, rep.claim);
    const ZdGraph g = build_graph(r);
    // Strong connectivity tracks whether the identities are two-sided.
    CHECK(strongly_connected(g.digraph()) == element_sets(r).one_sided_identities_are_two_sided());
  }
}

TEST_CASE("every relabeled ring lands in exactly one enumerated class") {
  std::mt19937 rng(8);
  const auto& classes = support::enumerated(8);
  for (int i = 0; i < kCases; ++i) {
    const FiniteRing r = support::relabel(pick(raw_pool(), rng), rng);
    CAPTURE(r.label());
    CHECK(std::count_if(classes.begin(), classes.end(),
                        [&](const FiniteRing& c) { return is_isomorphic(c, r); }) == 1);
  }
}
