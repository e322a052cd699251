#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "dtlab/coreset.hpp"
#include "dtlab/dtree.hpp"
#include "dtlab/gadget.hpp"
#include "random_tree.hpp"

using namespace dtlab;

namespace {

DecisionTree leaf(bool b) { return DecisionTree::leaf(b); }
DecisionTree node(Coord v, DecisionTree z, DecisionTree o) { return DecisionTree::node(v, z, o); }
BitString bits(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("evaluate") {
  CHECK_FALSE(evaluate(leaf(false), bits("1010")));
  CHECK(evaluate(node(1, leaf(false), leaf(true)), bits("10")));
  CHECK_THROWS_AS(evaluate(node(3, leaf(false), leaf(true)), bits("10")), std::out_of_range);
  auto t = node(2, node(1, leaf(false), leaf(true)), leaf(true));
  CHECK(t.size() == 2);
  CHECK(t.depth() == 2);
  CHECK(t.max_var() == 2);
}

TEST_CASE("path_of") {
  CHECK(path_of(leaf(true), bits("0")).empty());
  auto chain = node(1, node(2, leaf(false), leaf(true)), leaf(true));
  CHECK(path_of(chain, bits("00")) == Path{{1, false}, {2, false}});
  CHECK(path_of(chain, bits("10")) == Path{{1, true}});
}

TEST_CASE("paths are constant restrictions: exhaustive over small arities") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    auto t = testutil::random_tree(n, 6, rng);
    const auto cube = full_cube(n);
    auto f = BoolFunction::from_tree(t, n);
    for (const auto& x : cube) {
      const Path pi = path_of(t, x);
      Restriction rho;
      for (const auto& lit : pi) rho[lit.var] = lit.value;  // repeated queries read the same bit
      const bool value = evaluate(t, x);
      for (const auto& y : consistent_points(cube, rho)) CHECK(evaluate(t, y) == value);
      CHECK(is_certificate(f, cube, x, rho));
    }
  }
}

TEST_CASE("paths are constant restrictions at arity 12") {
  std::mt19937_64 rng(5);
  auto t = testutil::random_tree(12, 9, rng);
  const auto cube = full_cube(12);
  for (int i = 0; i < 20; ++i) {
    const auto x = cube[rng() % cube.size()];
    Restriction rho;
    for (const auto& lit : path_of(t, x)) rho[lit.var] = lit.value;
    const bool value = evaluate(t, x);
    auto fr = restrict(BoolFunction::from_tree(t, 12), rho);
    for (const auto& y : cube) CHECK(fr(y) == value);
  }
}

TEST_CASE("divergent prefix") {
  Path pi{{1, false}, {2, false}, {3, false}};
  CHECK(divergent_prefix(pi, 2) == Path{{1, false}, {2, true}});
  CHECK(divergent_prefix(pi, 1) == Path{{1, true}});
  CHECK(divergent_prefix(pi, 3) == Path{{1, false}, {2, false}, {3, true}});
  CHECK_THROWS_AS(divergent_prefix(pi, 0), std::out_of_range);
  CHECK_THROWS_AS(divergent_prefix(pi, 4), std::out_of_range);
}

TEST_CASE("restrict") {
  auto f = BoolFunction(2, [](const BitString& x) { return x[1] && x[2]; });
  auto same = restrict(f, {});
  for (const auto& x : full_cube(2)) CHECK(same(x) == f(x));
  auto r = restrict(f, {{1, true}});
  for (const auto& x : full_cube(2)) CHECK(r(x) == x[2]);
  auto g = corpus::paw();
  auto fe = restrict(isedge_function(g), {{1, false}, {2, false}});
  CHECK(fe(bits("0011")));
  CHECK(fe(bits("1111")));  // reads as 0011
  CHECK_FALSE(fe(bits("1110")));
}

TEST_CASE("truth tables use coordinate 1 as the low bit") {
  auto f = BoolFunction::from_truth_table("0100");  // index 1 -> x1=1,x2=0
  CHECK(f(bits("10")));
  CHECK_FALSE(f(bits("01")));
  CHECK(f.truth_table_string() == "0100");
  CHECK_THROWS(BoolFunction::from_truth_table("010"));
}

TEST_CASE("certificates over D") {
  auto g = corpus::paw();
  auto f = isedge_function(g);
  auto d = build_D_G(g).inputs();
  auto zero = bits("0000");
  CHECK(is_certificate(f, d, zero, {{1, false}, {2, false}, {3, false}, {4, false}}));
  CHECK(is_certificate(f, d, zero, {{1, false}, {4, false}}));
  CHECK_FALSE(is_certificate(f, d, zero, {{1, false}}));
  CHECK_THROWS_AS(is_certificate(f, d, zero, {{1, true}}), PreconditionError);

  auto c = min_certificate_size(f, d, zero);
  CHECK(c.size == 2);
  CHECK(is_certificate(f, d, zero, c.witness));
  // Certificates of 0^n over D_G are exactly the vertex covers.
  for (const auto& rho : all_min_certificates(f, d, zero)) {
    VertexSet s;
    for (const auto& [v, b] : rho) s.insert(v);
    CHECK(is_vertex_cover(g, s));
  }

  auto constant = BoolFunction::constant(3, true);
  CHECK(min_certificate_size(constant, full_cube(3), bits("101")).size == 0);
  auto x1 = BoolFunction(4, [](const BitString& x) { return x[1]; });
  CHECK(min_certificate_size(x1, full_cube(4), bits("1111")).size == 1);
}

TEST_CASE("minimum certificates match a brute-force oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto f = testutil::random_function(n, rng);
    PointList d;
    for (const auto& y : full_cube(n))
      if (rng() % 2) d.push_back(y);
    const auto x = testutil::random_bits(n, rng);
    // Oracle: check every subset of coordinates directly against the definition.
    std::size_t best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      bool ok = true;
      for (const auto& y : d) {
        bool inside = true;
        for (std::size_t c = 0; c < n; ++c)
          if (((s >> c) & 1u) && y[static_cast<Coord>(c + 1)] != x[static_cast<Coord>(c + 1)]) inside = false;
        if (inside && f(y) != f(x)) ok = false;
      }
      if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    CHECK(min_certificate_size(f, d, x).size == best);
  }
}

TEST_CASE("relevant variables") {
  auto f = BoolFunction(2, [](const BitString& x) { return x[1] != x[2]; });
  CHECK(relevant_vars(f, {}).empty());
  CHECK(relevant_vars(f, {bits("01")}).empty());
  CHECK(relevant_vars(f, full_cube(2)) == std::set<Coord>{1, 2});
}

TEST_CASE("relevant variables are monotone in D") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto f = testutil::random_function(n, rng);
    PointList small, big;
    for (const auto& y : full_cube(n)) {
      const auto r = rng() % 3;
      if (r == 0) small.push_back(y);
      if (r <= 1) big.push_back(y);
    }
    auto a = relevant_vars(f, small);
    auto b = relevant_vars(f, big);
    CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("relevant variables below each divergent prefix of a cover") {
  auto g = corpus::paw();
  auto f = isedge_function(g);
  auto d = build_D_G(g).inputs();
  for (std::uint32_t s = 0; s < 16; ++s) {
    std::vector<Vertex> order;
    for (Vertex v = 1; v <= 4; ++v)
      if ((s >> (v - 1)) & 1u) order.push_back(v);
    if (!is_vertex_cover(g, VertexSet(order.begin(), order.end()))) continue;
    do {
      Path pi;
      for (Vertex v : order) pi.push_back({v, false});
      auto parts = check_edge_partition(g, order).parts;
      for (std::size_t k = 1; k <= pi.size(); ++k)
        CHECK(relevant_vars(f, d, to_restriction(divergent_prefix(pi, k))).size() >= parts[k - 1].size());
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("distance") {
  auto g = corpus::paw();
  auto dist = hard_distribution(g, 1);
  auto f = ell_isedge_function(g, 1);
  auto not_f = BoolFunction(f.arity(), [f](const BitString& x) { return !f(x); });
  CHECK(distance(f, f, dist) == 0);
  CHECK(distance(f, not_f, dist) == 1);
  CHECK(distance(BoolFunction::constant(f.arity(), false), f, dist) == Rational(1, 4));
  CHECK(tree_error(leaf(false), dist) == Rational(1, 4));

  Distribution broken(2);
  broken.add(bits("00"), false, PointRole::other, Rational(1, 2));
  CHECK_THROWS_AS(distance(f, f, broken), PreconditionError);
}

TEST_CASE("distance is a pseudometric") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Distribution dist(n);
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) w.push_back(1 + static_cast<std::int64_t>(rng() % 5));
    const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    auto cube = full_cube(n);
    for (std::size_t i = 0; i < cube.size(); ++i) dist.add(cube[i], false, PointRole::other, Rational(w[i], total));
    auto a = testutil::random_function(n, rng), b = testutil::random_function(n, rng),
         c = testutil::random_function(n, rng);
    CHECK(distance(a, b, dist) == distance(b, a, dist));
    CHECK(distance(a, c, dist) <= distance(a, b, dist) + distance(b, c, dist));
  }
}

TEST_CASE("relevant variables of disjoint subtrees lower-bound the size") {
  auto t = node(1, node(2, leaf(false), leaf(true)), node(3, leaf(true), leaf(false)));
  auto cube = full_cube(3);
  auto whole = relevant_vars_lower_bounds_size(t, {{}}, cube);
  CHECK(whole.holds);
  CHECK(whole.rel_sum == 3);
  auto leaves = relevant_vars_lower_bounds_size(t, {{false, false}, {true, true}}, cube);
  CHECK(leaves.rel_sum == 0);
  CHECK_THROWS_AS(relevant_vars_lower_bounds_size(t, {{false}, {false, true}}, cube), std::invalid_argument);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    auto tree = testutil::random_tree(n, 7, rng);
    // Random antichain of addresses: walk down, stopping at random.
    std::vector<TreeAddress> picks;
    std::function<void(const DecisionTree&, TreeAddress)> walk = [&](const DecisionTree& s, TreeAddress a) {
      if (s.is_leaf() || rng() % 3 == 0) {
        if (rng() % 2) picks.push_back(a);
        return;
      }
      auto a0 = a, a1 = a;
      a0.push_back(false);
      a1.push_back(true);
      walk(s.zero(), a0);
      walk(s.one(), a1);
    };
    walk(tree, {});
    PointList sample;
    for (int i = 0; i < 200; ++i) sample.push_back(testutil::random_bits(n, rng));
    CHECK(relevant_vars_lower_bounds_size(tree, picks, n <= 8 ? full_cube(n) : sample).holds);
  }
}

TEST_CASE("tree paths certify f on any D where the tree agrees with f") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    auto t = testutil::random_tree(n, 5, rng);
    auto tf = BoolFunction::from_tree(t, n);
    // f agrees with the tree on D but is arbitrary elsewhere.
    PointList d;
    for (const auto& y : full_cube(n))
      if (rng() % 2) d.push_back(y);
    auto noise = testutil::random_function(n, rng);
    auto f = BoolFunction(n, [&, d](const BitString& x) {
      return std::find(d.begin(), d.end(), x) != d.end() ? tf(x) : noise(x);
    });
    for (const auto& x : d) {
      Restriction rho;
      for (const auto& lit : path_of(t, x)) rho[lit.var] = lit.value;
      CHECK(is_certificate(f, d, x, rho));
    }
  }
}
