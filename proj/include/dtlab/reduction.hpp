#pragma once

#include "dtlab/dtree.hpp"
#include "dtlab/gadget.hpp"
#include "dtlab/graph.hpp"

namespace dtlab {

struct ConstructionReport {
  DecisionTree tree;
  std::size_t size = 0;
  std::size_t claimed_bound = 0;
  VertexSet cover_used;
};

// Tree for IsEdge_G from a vertex cover: a 0-spine over C ascending, and under
// the 1-branch of the kappa-th cover vertex a chain over V_kappa, each of whose
// 1-branches checks that the n-2 other vertices are all 0.
// Size k + m + m(n-2); claimed bound k + m + mn.
// Throws PreconditionError if C is not a cover.
ConstructionReport build_isedge_tree(const Graph& g, const VertexSet& cover);

// Same shape for ell-IsEdge with Dup checks: Dup(cover vertex) right after the
// spine node, and Dup(w) after the all-0 check of an accepted neighbour w.
// Size (ell+1)(k+m) + m(n-2); claimed bound (ell+1)(k+m) + mn.
ConstructionReport build_ell_isedge_tree(const Graph& g, const VertexSet& cover, int ell);

// Vertices queried on the path of 0^n. Requires T to agree with IsEdge on D_G.
// Also checks |T| >= |result| + m.
VertexSet extract_cover_from_isedge_tree(const DecisionTree& t, const Graph& g);

// Vertices of the 0^N path in path order whose restricted edge neighbourhood
// E_kappa is nonempty. Requires T to agree with ell-IsEdge on ell-D_G.
VertexSet extract_cover_from_ell_tree(const DecisionTree& t, const Graph& g, int ell);

struct PartialExtraction {
  EdgeSet accepted;  // E' = {e : T(ell-Ind[e]) = 1}
  VertexSet cover;   // covers every edge of E'
  Rational distance;
};

// Requires dist(T, ell-IsEdge) < alpha/4 under the hard distribution.
PartialExtraction extract_partial_cover_from_errtree(const DecisionTree& t, const Graph& g, int ell,
                                                     const Rational& alpha);

// Spine vertices of the 0^N path, in order, with their E_kappa.
struct SpineVertex {
  Vertex vertex = 0;
  EdgeSet part;
};
std::vector<SpineVertex> spine_partition(const DecisionTree& t, const Graph& g, int ell);

}  // namespace dtlab
