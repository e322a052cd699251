#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "dtlab/coreset.hpp"
#include "dtlab/gadget.hpp"
#include "dtlab/minimize.hpp"
#include "dtlab/reduction.hpp"

using namespace dtlab;

namespace {

VertexSet vs(std::initializer_list<Vertex> v) { return VertexSet(v); }

void check_agrees_everywhere(const DecisionTree& t, const Graph& g, int ell) {
  const GadgetIndex idx(g.n(), ell);
  for (const auto& x : full_cube(idx.N())) REQUIRE(evaluate(t, x) == ell_isedge_eval(g, ell, x));
}

std::size_t exact_size(std::size_t n, std::size_t m, std::size_t k, int ell) {
  return static_cast<std::size_t>(ell + 1) * (k + m) + m * (n - 2);
}

}  // namespace

TEST_CASE("IsEdge trees from covers") {
  auto e = build_isedge_tree(corpus::single_edge(), vs({1}));
  CHECK(e.size <= 4);
  CHECK(e.claimed_bound == 4);
  check_agrees_everywhere(e.tree, corpus::single_edge(), 0);

  auto paw = build_isedge_tree(corpus::paw(), vs({1, 4}));
  CHECK(paw.size <= 22);
  CHECK(paw.size == 2 + 4 + 4 * 2);
  check_agrees_everywhere(paw.tree, corpus::paw(), 0);

  auto empty = build_isedge_tree(corpus::edgeless(3), {});
  CHECK(empty.size == 0);
  CHECK(empty.tree.is_leaf());
  CHECK_FALSE(empty.tree.label());

  CHECK_THROWS_AS(build_isedge_tree(corpus::paw(), vs({1})), PreconditionError);
}

TEST_CASE("ell-IsEdge trees from covers") {
  CHECK(build_ell_isedge_tree(corpus::paw(), vs({1, 4}), 0).tree == build_isedge_tree(corpus::paw(), vs({1, 4})).tree);
  auto e = build_ell_isedge_tree(corpus::single_edge(), vs({1}), 1);
  CHECK(e.size <= 6);
  check_agrees_everywhere(e.tree, corpus::single_edge(), 1);
  auto paw = build_ell_isedge_tree(corpus::paw(), vs({1, 4}), 2);
  CHECK(paw.size <= 34);
  CHECK(paw.size == 3 * 6 + 4 * 2);
  check_agrees_everywhere(paw.tree, corpus::paw(), 2);
}

TEST_CASE("constructed trees are exact for every cover of every small graph") {
  for (const auto& g : corpus::all_graphs(4)) {
    for (int ell = 0; ell <= 2; ++ell) {
      for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
        VertexSet c;
        for (Vertex v = 1; v <= g.n(); ++v)
          if ((s >> (v - 1)) & 1u) c.insert(v);
        if (!is_vertex_cover(g, c)) continue;
        auto r = build_ell_isedge_tree(g, c, ell);
        const std::size_t n = static_cast<std::size_t>(g.n());
        CHECK(r.size == exact_size(n, g.m(), c.size(), ell));
        CHECK(r.size <= r.claimed_bound);
        CHECK(r.tree.size() == r.size);
        check_agrees_everywhere(r.tree, g, ell);
      }
    }
  }
}

TEST_CASE("cover extraction from IsEdge trees") {
  auto paw = corpus::paw();
  auto t = build_isedge_tree(paw, vs({1, 4})).tree;
  CHECK(extract_cover_from_isedge_tree(t, paw) == vs({1, 4}));
  CHECK_THROWS_AS(extract_cover_from_isedge_tree(DecisionTree::leaf(false), paw), PreconditionError);
  auto best = dtsize_exact(isedge_function(paw));
  auto c = extract_cover_from_isedge_tree(best.tree, paw);
  CHECK(is_vertex_cover(paw, c));
  CHECK(c.size() >= 2);
  CHECK(best.size >= c.size() + paw.m());
}

TEST_CASE("cover extraction from ell-IsEdge trees") {
  auto paw = corpus::paw();
  for (int ell = 1; ell <= 2; ++ell) {
    auto full = build_ell_isedge_tree(paw, vs({1, 2, 3, 4}), ell);
    auto c = extract_cover_from_ell_tree(full.tree, paw, ell);
    CHECK(is_vertex_cover(paw, c));
    CHECK(c.size() <= 4);
    CHECK(c.size() == 3);  // the last spine vertex has no edges left
  }
  auto single = corpus::single_edge();
  auto best = dtsize_exact(ell_isedge_function(single, 1));
  auto c = extract_cover_from_ell_tree(best.tree, single, 1);
  CHECK((c == vs({1}) || c == vs({2})));
  CHECK(best.size >= 4);
  CHECK_THROWS_AS(extract_cover_from_ell_tree(DecisionTree::leaf(false), single, 1), PreconditionError);
}

TEST_CASE("extraction inequality on exact minimum trees") {
  for (const auto& g : corpus::all_graphs(4)) {
    for (int ell = 0; ell <= 2; ++ell) {
      const GadgetIndex idx(g.n(), ell);
      if (idx.N() > 12) continue;
      auto best = dtsize_exact(ell_isedge_function(g, ell));
      auto c = extract_cover_from_ell_tree(best.tree, g, ell);
      CHECK(is_vertex_cover(g, c));
      CHECK(static_cast<std::size_t>(ell + 1) * (c.size() + g.m()) <= best.size);
    }
  }
}

TEST_CASE("spine partition of a constructed tree") {
  auto paw = corpus::paw();
  auto t = build_ell_isedge_tree(paw, vs({1, 4}), 1).tree;
  auto spine = spine_partition(t, paw, 1);
  REQUIRE(spine.size() == 2);
  CHECK(spine[0].vertex == 1);
  CHECK(spine[0].part == EdgeSet{{1, 2}, {1, 4}});
  CHECK(spine[1].vertex == 4);
  CHECK(spine[1].part == EdgeSet{{2, 4}, {3, 4}});
}

TEST_CASE("partial covers from trees with small error") {
  auto paw = corpus::paw();
  auto exact = build_ell_isedge_tree(paw, vs({1, 4}), 1).tree;
  auto r = extract_partial_cover_from_errtree(exact, paw, 1, Rational(1, 4));
  CHECK(r.accepted.size() == paw.m());
  CHECK(is_vertex_cover(paw, r.cover));
  CHECK(r.distance == 0);

  CHECK_THROWS_AS(extract_partial_cover_from_errtree(DecisionTree::leaf(false), paw, 1, Rational(1, 4)),
                  PreconditionError);

  auto dist = hard_distribution(paw, 1);
  auto front = min_error_front(dist, dtsize_over_set(dist.support()).size);
  const auto* e = front.smallest_within(Rational(1, 64));
  REQUIRE(e != nullptr);
  auto p = extract_partial_cover_from_errtree(e->tree, paw, 1, Rational(1, 4));
  CHECK(covered_edge_count(paw, p.cover) >= 3);
}
