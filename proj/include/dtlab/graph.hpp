#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "dtlab/core.hpp"

namespace dtlab {

// Undirected edge, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::set<Vertex>;
using VertexList = std::vector<Vertex>;
using EdgeSet = std::set<Edge>;

// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, duplicates or endpoints outside [1,n].
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  // Index of the edge in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex x) const;
  int degree(Vertex x) const { return static_cast<int>(neighbors(x).size()); }
  int max_degree() const;
  bool contains_vertex(Vertex x) const { return x >= 1 && x <= n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Largest n accepted by the exhaustive solvers.
inline constexpr int kExactVertexLimit = 24;

bool is_vertex_cover(const Graph& g, const VertexSet& cover);
std::size_t covered_edge_count(const Graph& g, const VertexSet& cover);
EdgeSet uncovered_edges(const Graph& g, const VertexSet& cover);

// Minimum number of covered edges an alpha-partial cover needs: ceil((1-alpha)m).
std::size_t partial_cover_threshold(std::size_t m, const Rational& alpha);
bool is_partial_vertex_cover(const Graph& g, const VertexSet& cover, const Rational& alpha);

// Branch and bound on the highest-degree remaining vertex with a maximal-matching
// lower bound. Throws GuardError when n > kExactVertexLimit.
VertexSet min_vertex_cover_exact(const Graph& g);

// Matching-based 2-approximation: scan edges in order, take both endpoints of
// every edge still uncovered.
VertexSet greedy_vertex_cover(const Graph& g);

// Smallest set covering at least ceil((1-alpha)m) edges; among those of minimum
// size the lexicographically first. alpha must lie in [0,1).
VertexSet min_partial_vertex_cover_exact(const Graph& g, const Rational& alpha);

// Adds both endpoints of every uncovered edge. Throws PreconditionError unless
// the input is an alpha-partial cover.
VertexSet upgrade_partial_cover(const Graph& g, const VertexSet& cover, const Rational& alpha);

// E(center; excluded): edges at center that avoid every excluded vertex.
EdgeSet restricted_edge_neighborhood(const Graph& g, Vertex center, std::span<const Vertex> excluded);
// V(center; excluded): neighbours of center other than the excluded ones.
VertexSet restricted_vertex_neighborhood(const Graph& g, Vertex center,
                                         std::span<const Vertex> excluded);

struct EdgePartition {
  bool covers = false;          // union of the parts equals E
  std::vector<EdgeSet> parts;   // parts[k] = E(C[k]; C[0..k-1])
};

EdgePartition check_edge_partition(const Graph& g, std::span<const Vertex> order);

// Simple graph with every degree <= d, deterministic in seed.
Graph random_bounded_degree_graph(int n, int d, std::uint64_t seed);

bool is_connected(const Graph& g);
// Relabels so that the edge list is lexicographically smallest over all vertex
// permutations. Exhaustive; intended for n <= 8.
Graph canonical_form(const Graph& g);
// One representative per isomorphism class of graphs on exactly n vertices.
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

}  // namespace dtlab
