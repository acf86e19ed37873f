#include "zdlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "zdlab/builders.hpp"

namespace zdlab {

Digraph::Digraph(std::vector<Element> labels)
    : labels_(std::move(labels)),
      out_(labels_.size()),
      in_(labels_.size()),
      matrix_(labels_.size() * labels_.size(), 0) {}

void Digraph::add_edge(std::size_t from, std::size_t to) {
  const std::size_t v = labels_.size();
  if (from >= v || to >= v || from == to) {
    throw RingError(ErrorKind::IndexOutOfRange, "bad edge endpoints");
  }
  char& slot = matrix_[from * v + to];
  if (slot) return;
  slot = 1;
  ++edge_count_;
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(out_[from], to);
  insert_sorted(in_[to], from);
}

std::optional<std::size_t> Digraph::position(Element label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<Element, Element>> Digraph::edges() const {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(edge_count_);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    for (std::size_t w : out_[v]) out.emplace_back(labels_[v], labels_[w]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph Digraph::reversed() const {
  Digraph r(labels_);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    for (std::size_t w : out_[v]) r.add_edge(w, v);
  }
  return r;
}

std::uint32_t DistanceMatrix::max_finite() const {
  std::uint32_t best = 0;
  for (std::size_t i = 0; i < v_; ++i) {
    for (std::size_t j = 0; j < v_; ++j) {
      const auto d = dist_[i * v_ + j];
      if (i != j && d != kInfinite) best = std::max(best, d);
    }
  }
  return best;
}

bool DistanceMatrix::has_unreachable_pair() const {
  return std::find(dist_.begin(), dist_.end(), kInfinite) != dist_.end();
}

std::optional<std::uint32_t> DistanceMatrix::diameter() const {
  if (has_unreachable_pair()) return std::nullopt;
  return max_finite();
}

DistanceMatrix distances(const Digraph& g) {
  const std::size_t v = g.vertex_count();
  std::vector<std::uint32_t> dist(v * v, DistanceMatrix::kInfinite);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < v; ++s) {
    std::uint32_t* row = dist.data() + s * v;
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : g.out(x)) {
        if (row[y] == DistanceMatrix::kInfinite) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return DistanceMatrix(v, std::move(dist));
}

namespace {

std::vector<char> reach(const Digraph& g, std::size_t start, bool forward,
                        bool undirected) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    auto visit = [&](const std::vector<std::size_t>& next) {
      for (std::size_t y : next) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    };
    if (forward || undirected) visit(g.out(x));
    if (!forward || undirected) visit(g.in(x));
  }
  return seen;
}

bool all_set(const std::vector<char>& v) {
  return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
}

}  // namespace

bool strongly_connected(const Digraph& g) {
  if (g.vertex_count() == 0) return true;
  return all_set(reach(g, 0, true, false)) && all_set(reach(g, 0, false, false));
}

bool weakly_connected(const Digraph& g) {
  if (g.vertex_count() == 0) return true;
  return all_set(reach(g, 0, true, true));
}

std::vector<std::size_t> sink_positions(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.in(v).empty() && g.out(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> source_positions(const Digraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.out(v).empty() && g.in(v).empty()) out.push_back(v);
  }
  return out;
}

namespace {

// Bron-Kerbosch with pivoting on the mutual-adjacency graph.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Digraph& g) : g_(g) {}

  std::size_t run() {
    std::vector<std::size_t> p(g_.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    expand(0, p, {});
    return best_;
  }

 private:
  bool mutual(std::size_t a, std::size_t b) const {
    return g_.has_edge(a, b) && g_.has_edge(b, a);
  }

  void expand(std::size_t size, std::vector<std::size_t> p,
              std::vector<std::size_t> x) {
    best_ = std::max(best_, size);
    if (p.empty()) return;
    if (size + p.size() <= best_) return;
    std::size_t pivot = p.front();
    std::size_t pivot_degree = 0;
    for (const auto* pool : {&p, &x}) {
      for (std::size_t u : *pool) {
        std::size_t d = 0;
        for (std::size_t w : p) d += (w != u && mutual(u, w)) ? 1 : 0;
        if (d >= pivot_degree) {
          pivot_degree = d;
          pivot = u;
        }
      }
    }
    const std::vector<std::size_t> branch = [&] {
      std::vector<std::size_t> out;
      for (std::size_t v : p) {
        if (v == pivot || !mutual(pivot, v)) out.push_back(v);
      }
      return out;
    }();
    for (std::size_t v : branch) {
      std::vector<std::size_t> np, nx;
      for (std::size_t w : p) {
        if (w != v && mutual(v, w)) np.push_back(w);
      }
      for (std::size_t w : x) {
        if (mutual(v, w)) nx.push_back(w);
      }
      expand(size + 1, std::move(np), std::move(nx));
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const Digraph& g_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const Digraph& g) { return CliqueSearch(g).run(); }

bool is_network(const Digraph& g) {
  const auto sinks = sink_positions(g);
  const auto sources = source_positions(g);
  if (sinks.size() != 1 || sources.size() != 1) return false;
  const std::size_t k = sinks.front();
  const std::size_t c = sources.front();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != c && !g.has_edge(c, v)) return false;
    if (v != k && !g.has_edge(v, k)) return false;
  }
  return true;
}

bool small_digraphs_isomorphic(const Digraph& a, const Digraph& b) {
  const std::size_t v = a.vertex_count();
  if (v != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (v > 9) {
    throw RingError(ErrorKind::TooLarge, "brute-force digraph isomorphism beyond 9 vertices");
  }
  std::vector<std::size_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < v && ok; ++i) {
      for (std::size_t j = 0; j < v && ok; ++j) {
        if (i != j && a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

ZdGraph build_graph(const FiniteRing& ring) {
  const ElementSets sets = element_sets(ring);
  Digraph graph(sets.zero_divisors);
  ElementSet loops;
  const auto& vs = sets.zero_divisors;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (ring.mul(vs[i], vs[i]) == 0) loops.push_back(vs[i]);
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i != j && ring.mul(vs[i], vs[j]) == 0) graph.add_edge(i, j);
    }
  }
  return ZdGraph(ring, std::move(graph), std::move(loops));
}

namespace {

ElementSet to_labels(const Digraph& g, const std::vector<std::size_t>& positions) {
  ElementSet out;
  for (std::size_t p : positions) out.push_back(g.label(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ElementSet sinks(const ZdGraph& g) {
  return to_labels(g.digraph(), sink_positions(g.digraph()));
}

ElementSet sources(const ZdGraph& g) {
  return to_labels(g.digraph(), source_positions(g.digraph()));
}

DegreeReport degree_report(const ZdGraph& g, Element x) {
  const auto pos = g.digraph().position(x);
  if (!pos) {
    throw RingError(ErrorKind::VertexNotInGraph,
                    std::to_string(x) + " is not a vertex", {x});
  }
  DegreeReport r;
  r.out_simple = g.digraph().out(*pos).size();
  r.in_simple = g.digraph().in(*pos).size();
  r.has_loop = contains(g.loops(), x);
  return r;
}

ElementSet strongly_right_invertible(const FiniteRing& ring) {
  const ElementSets sets = element_sets(ring);
  if (sets.proper_left_identities().empty()) return {};
  ElementSet out;
  const std::size_t n = ring.order();
  for (std::size_t r = 1; r < n; ++r) {
    bool ok = true;
    for (Element e : sets.left_identities) {
      std::size_t solutions = 0;
      for (std::size_t s = 0; s < n && solutions < 2; ++s) {
        if (ring.mul(static_cast<Element>(r), static_cast<Element>(s)) == e) ++solutions;
      }
      if (solutions != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<Element>(r));
  }
  return out;
}

ElementSet strongly_left_invertible(const FiniteRing& ring) {
  const ElementSets sets = element_sets(ring);
  if (sets.proper_right_identities().empty()) return {};
  ElementSet out;
  const std::size_t n = ring.order();
  for (std::size_t r = 1; r < n; ++r) {
    bool ok = true;
    for (Element e : sets.right_identities) {
      std::size_t solutions = 0;
      for (std::size_t s = 0; s < n && solutions < 2; ++s) {
        if (ring.mul(static_cast<Element>(s), static_cast<Element>(r)) == e) ++solutions;
      }
      if (solutions != 1) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<Element>(r));
  }
  return out;
}

EndpointSets endpoint_sets(const FiniteRing& ring, const ZdGraph& g) {
  const ElementSets sets = element_sets(ring);
  EndpointSets out;
  out.sinks = sinks(g);
  out.sources = sources(g);
  out.algebraic_sinks = set_difference(sets.right_zero_divisors, sets.left_zero_divisors);
  out.algebraic_sources = set_difference(sets.left_zero_divisors, sets.right_zero_divisors);
  out.middle = set_intersection(sets.right_zero_divisors, sets.left_zero_divisors);
  out.inv_r = strongly_right_invertible(ring);
  out.inv_l = strongly_left_invertible(ring);
  if (ring.order() >= 5 &&
      (out.sinks != out.algebraic_sinks || out.sources != out.algebraic_sources)) {
    throw RingError(ErrorKind::InternalInvariantViolation,
                    "graph sinks/sources differ from Z_r - Z_l / Z_l - Z_r in " +
                        ring.label());
  }
  return out;
}

ClosureCheck semigroup_closure_check(const ElementSet& set, const FiniteRing& ring,
                                     Side side) {
  ClosureCheck out;
  for (Element a : set) {
    for (Element b : set) {
      if (!contains(set, ring.mul(a, b))) {
        out.closed = false;
        out.closure_witness = {a, b};
        break;
      }
    }
    if (!out.closed) break;
  }
  std::vector<long> preimage(ring.order(), -1);
  for (Element a : set) {
    std::fill(preimage.begin(), preimage.end(), -1);
    for (Element x : set) {
      const Element p = side == Side::Left ? ring.mul(a, x) : ring.mul(x, a);
      if (preimage[p] >= 0) {
        out.cancellative = false;
        out.cancellation_witness = {a, static_cast<Element>(preimage[p]), x};
        return out;
      }
      preimage[p] = x;
    }
  }
  return out;
}

std::int64_t bipartite_edge_count(const FiniteRing& ring, const ElementSet& from,
                                  const ElementSet& to, EdgeConvention convention) {
  std::int64_t count = 0;
  for (Element m : from) {
    for (Element n : to) {
      if (ring.mul(m, n) != 0) continue;
      if (m != n || convention == EdgeConvention::WithLoops) ++count;
    }
  }
  return count;
}

EdgeCount claimed_edge_count(const FiniteRing& ring, Element e,
                             EdgeConvention convention) {
  if (e == 0 || e >= ring.order() || !is_left_identity(ring, e)) {
    throw RingError(ErrorKind::NotLeftIdentity,
                    std::to_string(e) + " is not a left identity", {e});
  }
  const LeftIdentityDecomposition d = decompose(ring, e);
  const ElementSet ideal_star(d.ideal.begin() + 1, d.ideal.end());
  const ElementSet corner_star(d.corner.begin() + 1, d.corner.end());
  ElementSet mixed;
  for (Element a : corner_star) {
    for (Element b : ideal_star) mixed.push_back(ring.add(a, b));
  }
  std::sort(mixed.begin(), mixed.end());
  mixed.erase(std::unique(mixed.begin(), mixed.end()), mixed.end());

  const auto i = static_cast<std::int64_t>(d.ideal.size());
  const std::int64_t to_ideal = bipartite_edge_count(ring, corner_star, ideal_star, convention);
  const std::int64_t to_mixed = bipartite_edge_count(ring, corner_star, mixed, convention);
  const std::int64_t inside = bipartite_edge_count(ring, corner_star, corner_star, convention);

  EdgeCount out;
  out.claimed = i * (i - 1 + to_ideal + to_mixed + (2 - i) * inside);
  const ZdGraph g = build_graph(ring);
  out.actual = static_cast<std::int64_t>(g.digraph().edge_count());
  if (convention == EdgeConvention::WithLoops) {
    out.actual += static_cast<std::int64_t>(g.loops().size());
  }
  return out;
}

}  // namespace zdlab
