#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "zdlab/ring.hpp"

namespace zdlab {

/// Simple directed graph (no loops, no multi-edges) on labeled vertices.
/// Vertices are addressed by position 0..V-1; labels are element indices.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::vector<Element> labels);

  void add_edge(std::size_t from, std::size_t to);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Element>& labels() const noexcept { return labels_; }
  Element label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> position(Element label) const;

  bool has_edge(std::size_t from, std::size_t to) const {
    return matrix_[from * labels_.size() + to] != 0;
  }
  // Sorted by position.
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }

  // (from, to) label pairs, sorted.
  std::vector<std::pair<Element, Element>> edges() const;

  Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<Element> labels_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<char> matrix_;
  std::size_t edge_count_ = 0;
};

/// All-pairs directed distances over vertex positions.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t vertices, std::vector<std::uint32_t> dist)
      : v_(vertices), dist_(std::move(dist)) {}

  std::size_t vertex_count() const noexcept { return v_; }
  std::uint32_t at(std::size_t from, std::size_t to) const { return dist_[from * v_ + to]; }

  // Largest finite distance between distinct vertices (0 when none).
  std::uint32_t max_finite() const;
  bool has_unreachable_pair() const;
  // nullopt encodes an infinite diameter.
  std::optional<std::uint32_t> diameter() const;

 private:
  std::size_t v_ = 0;
  std::vector<std::uint32_t> dist_;
};

// BFS from every vertex.
DistanceMatrix distances(const Digraph& g);

// Every ordered pair of vertices is joined by a directed path; vacuously
// true for the empty graph.
bool strongly_connected(const Digraph& g);
bool weakly_connected(const Digraph& g);

// Positive in-degree, zero out-degree (positions).
std::vector<std::size_t> sink_positions(const Digraph& g);
std::vector<std::size_t> source_positions(const Digraph& g);

// Largest set of vertices pairwise joined in both directions.
std::size_t clique_number(const Digraph& g);

// Exactly one sink k and one source c, c -> v for all v != c and v -> k for
// all v != k.
bool is_network(const Digraph& g);

// Isomorphism of small digraphs by trying every vertex bijection.
bool small_digraphs_isomorphic(const Digraph& a, const Digraph& b);

/// The directed zero-divisor graph: vertices Z(R)*, edge x -> y iff x != y
/// and x y = 0. Squares-to-zero are kept apart as loops and never enter
/// degrees, sinks, sources or distances.
class ZdGraph {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const Digraph& digraph() const noexcept { return graph_; }
  const ElementSet& vertices() const noexcept { return graph_.labels(); }
  const ElementSet& loops() const noexcept { return loops_; }

 private:
  ZdGraph(FiniteRing ring, Digraph graph, ElementSet loops)
      : ring_(std::move(ring)), graph_(std::move(graph)), loops_(std::move(loops)) {}

  FiniteRing ring_;
  Digraph graph_;
  ElementSet loops_;

  friend ZdGraph build_graph(const FiniteRing& ring);
};

ZdGraph build_graph(const FiniteRing& ring);

// Element-labeled sinks and sources of the zero-divisor graph.
ElementSet sinks(const ZdGraph& g);
ElementSet sources(const ZdGraph& g);

struct DegreeReport {
  std::size_t out_simple = 0;
  std::size_t in_simple = 0;
  bool has_loop = false;

  std::size_t out_with_loop() const { return out_simple + (has_loop ? 1 : 0); }
  std::size_t in_with_loop() const { return in_simple + (has_loop ? 1 : 0); }
};

// Throws VertexNotInGraph.
DegreeReport degree_report(const ZdGraph& g, Element x);

struct EndpointSets {
  ElementSet sinks;              // from the graph
  ElementSet sources;            // from the graph
  ElementSet algebraic_sinks;    // Z_r - Z_l
  ElementSet algebraic_sources;  // Z_l - Z_r
  ElementSet inv_r;              // strongly right invertible
  ElementSet inv_l;              // strongly left invertible
  ElementSet middle;             // Z_r n Z_l
};

/// Sinks and sources computed from the graph and from the zero-divisor sets.
/// For |R| >= 5 the two routes must agree; a disagreement throws
/// InternalInvariantViolation. Smaller rings may legitimately differ and keep
/// both answers.
EndpointSets endpoint_sets(const FiniteRing& ring, const ZdGraph& g);

// Elements r such that, for every left identity e, r s = e has exactly one
// solution s. Empty unless the ring has a proper left identity.
ElementSet strongly_right_invertible(const FiniteRing& ring);
// Dual: s r = e uniquely for every right identity e.
ElementSet strongly_left_invertible(const FiniteRing& ring);

enum class Side { Left, Right };

struct ClosureCheck {
  bool closed = true;
  bool cancellative = true;
  // (a, b) with a b outside the set, or (a, x, y) with a x = a y (left) /
  // x a = y a (right) and x != y.
  std::vector<Element> closure_witness;
  std::vector<Element> cancellation_witness;
};

ClosureCheck semigroup_closure_check(const ElementSet& set, const FiniteRing& ring,
                                     Side side);

enum class EdgeConvention { Simple, WithLoops };

struct EdgeCount {
  std::int64_t claimed = 0;
  std::int64_t actual = 0;
};

// Number of pairs (m, n) in M x N with m n = 0, m != n unless loops are
// counted, in which case m = n with m^2 = 0 also counts.
std::int64_t bipartite_edge_count(const FiniteRing& ring, const ElementSet& from,
                                  const ElementSet& to, EdgeConvention convention);

/// Evaluates the edge-count formula
///   |I| [ |I| - 1 + E(R_e*, I_e*) + E(R_e*, R_e* + I_e*) + (2 - |I|) E(R_e) ]
/// for the left identity e next to the directly counted edges of Gamma(R),
/// both under the same convention. Throws NotLeftIdentity.
EdgeCount claimed_edge_count(const FiniteRing& ring, Element e,
                             EdgeConvention convention);

}  // namespace zdlab
