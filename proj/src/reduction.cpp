#include "dtlab/reduction.hpp"

#include <algorithm>

#include "dtlab/coreset.hpp"

namespace dtlab {

namespace {

void require_cover(const Graph& g, const VertexSet& cover) {
  if (!is_vertex_cover(g, cover)) throw PreconditionError("the given vertex set is not a vertex cover");
}

DecisionTree dup_check(const std::vector<Coord>& dups, DecisionTree pass) {
  for (auto it = dups.rbegin(); it != dups.rend(); ++it)
    pass = DecisionTree::node(*it, DecisionTree::leaf(false), pass, NodeRole::dup);
  return pass;
}

// Under the 1-branch of w: every vertex other than c and w must read 0, then
// Dup(w) must read all 1.
DecisionTree accept_neighbor(const Graph& g, const GadgetIndex& idx, Vertex c, Vertex w) {
  DecisionTree t = dup_check(dup_vars(w, idx), DecisionTree::leaf(true));
  for (Vertex u = g.n(); u >= 1; --u) {
    if (u == c || u == w) continue;
    t = DecisionTree::node(idx.coord(u, 0), t, DecisionTree::leaf(false), NodeRole::rest);
  }
  return t;
}

}  // namespace

ConstructionReport build_ell_isedge_tree(const Graph& g, const VertexSet& cover, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be >= 0");
  require_cover(g, cover);
  const GadgetIndex idx(g.n(), ell);
  const VertexList order(cover.begin(), cover.end());

  DecisionTree t = DecisionTree::leaf(false);
  for (std::size_t kappa = order.size(); kappa-- > 0;) {
    const Vertex c = order[kappa];
    const auto earlier = std::span<const Vertex>(order).subspan(0, kappa);
    const VertexSet nbrs = restricted_vertex_neighborhood(g, c, earlier);
    DecisionTree chain = DecisionTree::leaf(false);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
      chain = DecisionTree::node(idx.coord(*it, 0), chain, accept_neighbor(g, idx, c, *it), NodeRole::neighbor);
    DecisionTree branch = dup_check(dup_vars(c, idx), chain);
    t = DecisionTree::node(idx.coord(c, 0), t, branch, NodeRole::spine);
  }

  ConstructionReport r;
  r.tree = t;
  r.size = t.size();
  const std::size_t k = cover.size(), m = g.m(), n = static_cast<std::size_t>(g.n());
  r.claimed_bound = static_cast<std::size_t>(ell + 1) * (k + m) + m * n;
  r.cover_used = cover;
  if (r.size > r.claimed_bound) throw std::logic_error("constructed tree exceeds its size bound");
  return r;
}

ConstructionReport build_isedge_tree(const Graph& g, const VertexSet& cover) {
  return build_ell_isedge_tree(g, cover, 0);
}

std::vector<SpineVertex> spine_partition(const DecisionTree& t, const Graph& g, int ell) {
  const GadgetIndex idx(g.n(), ell);
  const Path pi = path_of(t, BitString(idx.N()));
  std::vector<SpineVertex> out;
  VertexList seen;
  for (const auto& lit : pi) {
    const Vertex v = idx.vertex_of(lit.var);
    out.push_back({v, restricted_edge_neighborhood(g, v, seen)});
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
  }
  return out;
}

namespace {

void require_agreement(const DecisionTree& t, const LabeledPointSet& d, const char* what) {
  if (static_cast<std::size_t>(t.max_var()) > d.arity())
    throw PreconditionError(std::string("tree queries variables beyond the arity of ") + what);
  for (const auto& p : d.points())
    if (evaluate(t, p.x) != p.label)
      throw PreconditionError(std::string("tree disagrees with ") + what + " at " + p.x.str());
}

}  // namespace

VertexSet extract_cover_from_isedge_tree(const DecisionTree& t, const Graph& g) {
  require_agreement(t, build_D_G(g), "IsEdge on D_G");
  VertexSet out;
  for (const auto& sv : spine_partition(t, g, 0)) out.insert(sv.vertex);
  if (!is_vertex_cover(g, out)) throw PreconditionError("the 0-path does not query a vertex cover");
  if (t.size() < out.size() + g.m()) throw std::logic_error("tree smaller than |cover| + m");
  return out;
}

VertexSet extract_cover_from_ell_tree(const DecisionTree& t, const Graph& g, int ell) {
  if (ell == 0)
    require_agreement(t, build_D_G(g), "IsEdge on D_G");
  else
    require_agreement(t, build_ell_D_G(g, ell), "ell-IsEdge on ell-D_G");
  VertexSet out;
  for (const auto& sv : spine_partition(t, g, ell))
    if (!sv.part.empty()) out.insert(sv.vertex);
  if (!is_vertex_cover(g, out)) throw PreconditionError("the 0-path does not query a vertex cover");
  return out;
}

PartialExtraction extract_partial_cover_from_errtree(const DecisionTree& t, const Graph& g, int ell,
                                                     const Rational& alpha) {
  const Distribution dist = hard_distribution(g, ell);
  PartialExtraction out;
  out.distance = tree_error(t, dist);
  if (out.distance >= alpha / 4)
    throw PreconditionError("tree error " + to_string(out.distance) + " is not below alpha/4 = " +
                            to_string(alpha / 4));
  for (const auto& e : g.edges())
    if (evaluate(t, ell_ind(g, ell, e))) out.accepted.insert(e);
  for (const auto& sv : spine_partition(t, g, ell))
    for (const auto& e : sv.part)
      if (out.accepted.count(e)) {
        out.cover.insert(sv.vertex);
        break;
      }
  for (const auto& e : out.accepted)
    if (!out.cover.count(e.u) && !out.cover.count(e.v))
      throw std::logic_error("extracted set misses an accepted edge");
  return out;
}

}  // namespace dtlab
