#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtlab/bits.hpp"
#include "dtlab/dtree.hpp"
#include "dtlab/graph.hpp"

namespace dtlab {

// Block-major layout of the amplified input: block j in 0..ell holds
// v_1^(j)..v_n^(j), and v_i^(j) sits at coordinate j*n + i.
struct GadgetIndex {
  int n = 0;
  int ell = 0;

  GadgetIndex() = default;
  GadgetIndex(int n_, int ell_);

  std::size_t N() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(ell + 1); }
  Coord coord(Vertex i, int block) const;
  // Inverse of coord: (vertex, block).
  std::pair<Vertex, int> locate(Coord c) const;
  Vertex vertex_of(Coord c) const { return locate(c).first; }
};

// Throws std::invalid_argument when e is not an edge of g.
BitString edge_indicator(const Graph& g, const Edge& e);
bool isedge_eval(const Graph& g, const BitString& v);

BitString ell_ind(const Graph& g, int ell, const Edge& e);
// Single pass over x.
bool ell_isedge_eval(const Graph& g, int ell, const BitString& x);

// The ell coordinates of v_i^(1)..v_i^(ell), ascending.
std::vector<Coord> dup_vars(Vertex i, const GadgetIndex& idx);

BoolFunction isedge_function(const Graph& g);
BoolFunction ell_isedge_function(const Graph& g, int ell);

// Text form with '|' between blocks, e.g. "1100|1100|1100".
std::string format_gadget_input(const BitString& x, const GadgetIndex& idx);

}  // namespace dtlab
