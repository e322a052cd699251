#include "dtlab/gadget.hpp"

#include <string>

namespace dtlab {

GadgetIndex::GadgetIndex(int n_, int ell_) : n(n_), ell(ell_) {
  if (n_ < 0 || ell_ < 0) throw std::invalid_argument("gadget index needs n >= 0 and ell >= 0");
}

Coord GadgetIndex::coord(Vertex i, int block) const {
  if (i < 1 || i > n || block < 0 || block > ell)
    throw std::out_of_range("no coordinate for v_" + std::to_string(i) + "^(" + std::to_string(block) + ")");
  return block * n + i;
}

std::pair<Vertex, int> GadgetIndex::locate(Coord c) const {
  if (c < 1 || static_cast<std::size_t>(c) > N())
    throw std::out_of_range("coordinate " + std::to_string(c) + " outside the gadget layout");
  return {(c - 1) % n + 1, (c - 1) / n};
}

namespace {

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
}

}  // namespace

BitString edge_indicator(const Graph& g, const Edge& e) {
  require_edge(g, e);
  BitString out(static_cast<std::size_t>(g.n()));
  out.set(e.u);
  out.set(e.v);
  return out;
}

bool isedge_eval(const Graph& g, const BitString& v) {
  if (v.size() != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("IsEdge expects " + std::to_string(g.n()) + " bits, got " + std::to_string(v.size()));
  Vertex a = 0, b = 0;
  for (Vertex i = 1; i <= g.n(); ++i) {
    if (!v[i]) continue;
    if (!a)
      a = i;
    else if (!b)
      b = i;
    else
      return false;
  }
  return b != 0 && g.has_edge(a, b);
}

BitString ell_ind(const Graph& g, int ell, const Edge& e) {
  require_edge(g, e);
  GadgetIndex idx(g.n(), ell);
  BitString out(idx.N());
  for (int j = 0; j <= ell; ++j) {
    out.set(idx.coord(e.u, j));
    out.set(idx.coord(e.v, j));
  }
  return out;
}

bool ell_isedge_eval(const Graph& g, int ell, const BitString& x) {
  GadgetIndex idx(g.n(), ell);
  if (x.size() != idx.N())
    throw std::invalid_argument("ell-IsEdge expects " + std::to_string(idx.N()) + " bits, got " +
                                std::to_string(x.size()));
  Vertex a = 0, b = 0;
  for (Vertex i = 1; i <= g.n(); ++i) {
    if (!x[i]) continue;
    if (!a)
      a = i;
    else if (!b)
      b = i;
    else
      return false;
  }
  if (!b || !g.has_edge(a, b)) return false;
  for (int j = 1; j <= ell; ++j)
    if (!x[j * g.n() + a] || !x[j * g.n() + b]) return false;
  return true;
}

std::vector<Coord> dup_vars(Vertex i, const GadgetIndex& idx) {
  if (i < 1 || i > idx.n) throw std::out_of_range("vertex " + std::to_string(i) + " outside the gadget");
  std::vector<Coord> out;
  for (int j = 1; j <= idx.ell; ++j) out.push_back(idx.coord(i, j));
  return out;
}

BoolFunction isedge_function(const Graph& g) {
  return BoolFunction(static_cast<std::size_t>(g.n()), [g](const BitString& v) { return isedge_eval(g, v); });
}

BoolFunction ell_isedge_function(const Graph& g, int ell) {
  GadgetIndex idx(g.n(), ell);
  return BoolFunction(idx.N(), [g, ell](const BitString& x) { return ell_isedge_eval(g, ell, x); });
}

std::string format_gadget_input(const BitString& x, const GadgetIndex& idx) {
  if (x.size() != idx.N()) throw std::invalid_argument("input length does not match the gadget layout");
  std::string out;
  for (int j = 0; j <= idx.ell; ++j) {
    if (j) out += '|';
    for (Vertex i = 1; i <= idx.n; ++i) out += x[idx.coord(i, j)] ? '1' : '0';
  }
  return out;
}

}  // namespace dtlab
