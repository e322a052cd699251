#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "corpus.hpp"
#include "dtlab/harness.hpp"
#include "random_tree.hpp"

using namespace dtlab;
using namespace std::chrono_literals;

namespace {

bool all_hold(const ReductionParams& p) {
  for (const auto& c : check_params(p))
    if (!c.holds) return false;
  return true;
}

// Block-wise definition, kept separate from the library evaluator.
bool ell_isedge_oracle(const Graph& g, int ell, const BitString& x) {
  std::vector<Vertex> ones;
  for (Vertex i = 1; i <= g.n(); ++i)
    if (x[i]) ones.push_back(i);
  if (ones.size() != 2 || !g.has_edge(ones[0], ones[1])) return false;
  for (Vertex v : ones)
    for (int j = 1; j <= ell; ++j)
      if (!x[j * g.n() + v]) return false;
  return true;
}

}  // namespace

TEST_CASE("regime names") {
  CHECK(parse_regime("inverse-poly") == Regime::inverse_poly);
  CHECK(regime_name(Regime::constant_error) == "constant-error");
  CHECK_THROWS(parse_regime("other"));
}

TEST_CASE("inverse-poly parameters") {
  auto p = params_inverse_poly(4, 4, 3, 1);
  CHECK(all_hold(p));
  CHECK(p.lambda < 1);
  CHECK(p.lambda * 2 > 1);
  CHECK(p.ell % 4 == 0);
  CHECK(p.N == static_cast<std::size_t>(4 * (p.ell + 1)));
  CHECK(p.epsilon < Rational(1, static_cast<std::int64_t>(p.support_size)));
  CHECK_THROWS_AS(params_inverse_poly(4, 4, 3, 0), PreconditionError);
  CHECK_THROWS_AS(params_inverse_poly(4, 4, 3, Rational(-1, 2)), PreconditionError);
  CHECK(p.target_size(2) == static_cast<std::size_t>(p.ell) * 6 + 32);
}

TEST_CASE("inverse-poly parameters pass every check on a grid") {
  for (int n : {1, 4, 11, 30})
    for (int d : {1, 2, 3, 5})
      for (Rational dp : {Rational(1, 10), Rational(1, 2), Rational(1), Rational(3)}) {
        auto p = params_inverse_poly(n, static_cast<std::size_t>(n), d, dp);
        for (const auto& c : check_params(p)) CHECK_MESSAGE(c.holds, c.name);
      }
}

TEST_CASE("constant-error parameters") {
  // At d=3, alpha=1/5 the lambda window needs delta' > 1/3: lambda > 1/(1+delta') and lambda < 1/4.
  CHECK_THROWS_AS(params_constant_error(4, 4, 3, 1, Rational(1, 5)), PreconditionError);
  auto p = params_constant_error(4, 4, 3, 4, Rational(1, 5));
  CHECK(all_hold(p));
  CHECK(p.epsilon < p.alpha / 16);
  CHECK(p.lambda > Rational(1, 5));
  CHECK(p.lambda < Rational(1, 4));
  CHECK_THROWS_AS(params_constant_error(4, 4, 3, 4, Rational(1, 4)), PreconditionError);
  CHECK_THROWS_AS(params_constant_error(4, 4, 3, 0, Rational(1, 10)), PreconditionError);
  for (int d : {1, 2, 3})
    for (Rational alpha : {Rational(1, 100), Rational(1, 20)})
      for (Rational dp : {Rational(1), Rational(5)}) {
        auto q = params_constant_error(6, 9, d, dp, alpha);
        for (const auto& c : check_params(q)) CHECK_MESSAGE(c.holds, c.name);
      }
}

TEST_CASE("test-mode parameters") {
  auto p = params_test_mode(4, 4, Regime::inverse_poly, 2, 0);
  CHECK(all_hold(p));
  CHECK(p.size_threshold(2) == 18);
  auto q = params_test_mode(4, 4, Regime::constant_error, 1, Rational(1, 4));
  CHECK(all_hold(q));
  CHECK(q.epsilon < Rational(1, 64));
  CHECK_THROWS(params_test_mode(4, 4, Regime::inverse_poly, 0, 0));
}

TEST_CASE("membership oracle fidelity") {
  auto g = corpus::paw();
  MembershipOracle oracle(g, 2);
  std::mt19937_64 rng(61);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    BitString x(12);
    if (i % 4 == 0) {
      x = ell_ind(g, 2, g.edges()[rng() % g.m()]);
      if (rng() & 1u) x.flip(static_cast<Coord>(1 + rng() % 12));
    } else {
      x = testutil::random_bits(12, rng);
    }
    if (oracle(x) != ell_isedge_oracle(g, 2, x)) ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(oracle.queries() == 1'000'000);
}

TEST_CASE("example oracle frequencies") {
  auto dist = hard_distribution(corpus::paw(), 1);
  ExampleOracle oracle(dist, 67);
  std::vector<std::size_t> counts(dist.size(), 0);
  const std::size_t draws = 1'000'000;
  for (std::size_t i = 0; i < draws; ++i) ++counts[oracle.draw_index()];
  CHECK(oracle.samples() == draws);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double p = to_double(dist[i].mass);
    const double sigma = std::sqrt(static_cast<double>(draws) * p * (1 - p));
    CHECK(std::abs(static_cast<double>(counts[i]) - static_cast<double>(draws) * p) <= 5 * sigma);
  }
  ExampleOracle a(dist, 5), b(dist, 5);
  for (int i = 0; i < 100; ++i) CHECK(a.draw_index() == b.draw_index());
}

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
  CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
  CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
}

TEST_CASE("decider with the ideal learner") {
  auto learners = builtin_learners();
  REQUIRE(learners.count("occam_ideal") == 1);
  auto single = corpus::single_edge();
  for (Regime r : {Regime::inverse_poly, Regime::constant_error}) {
    auto p = params_test_mode(2, 1, r, 1, Rational(1, 4));
    auto yes = dtlearn_decider(single, 1, learners["occam_ideal"], p);
    CHECK(yes.yes);
    CHECK_FALSE(yes.flagged);
    auto paw = corpus::paw();
    auto pp = params_test_mode(4, 4, r, 1, Rational(1, 4));
    CHECK_FALSE(dtlearn_decider(paw, 0, learners["occam_ideal"], pp).yes);
    CHECK_FALSE(dtlearn_decider(paw, 1, learners["occam_ideal"], pp).yes);
    CHECK(dtlearn_decider(paw, 2, learners["occam_ideal"], pp).yes);
  }
}

TEST_CASE("decider with the trivial learners") {
  auto learners = builtin_learners();
  auto paw = corpus::paw();
  auto p = params_test_mode(4, 4, Regime::constant_error, 1, Rational(1, 4));
  auto zero = dtlearn_decider(paw, 4, learners["constant_zero"], p);
  CHECK_FALSE(zero.yes);
  REQUIRE(!zero.runs.empty());
  CHECK(zero.runs[0].size == 0);
  CHECK(zero.runs[0].error_rate == Rational(1, 4));

  auto greedy = dtlearn_decider(paw, 4, learners["greedy_topdown"], p);
  for (const auto& run : greedy.runs) {
    CHECK(run.finished);
    CHECK(run.error.empty());
    CHECK(run.size <= greedy.threshold);
    CHECK(run.samples > 0);
  }
}

TEST_CASE("decider flags crashes and timeouts as No") {
  auto paw = corpus::paw();
  auto p = params_test_mode(4, 4, Regime::inverse_poly, 1, 0);
  Learner crash = [](const LearnerContext&) -> DecisionTree { throw std::runtime_error("boom"); };
  auto c = dtlearn_decider(paw, 4, crash, p);
  CHECK_FALSE(c.yes);
  CHECK(c.flagged);
  CHECK(c.runs[0].error == "boom");

  Learner slow = [](const LearnerContext& ctx) {
    while (!ctx.stopped()) std::this_thread::sleep_for(1ms);
    return DecisionTree::leaf(false);
  };
  DeciderOptions opts;
  opts.time_budget = 50ms;
  opts.repetitions = 1;
  auto s = dtlearn_decider(paw, 4, slow, p, opts);
  CHECK_FALSE(s.yes);
  CHECK(s.flagged);
  CHECK(s.runs[0].timed_out);

  CHECK_THROWS_AS(dtlearn_decider(corpus::triangle(), 1, crash, p), PreconditionError);
}

TEST_CASE("DT-Min reduction") {
  auto paw = corpus::paw();
  auto id = dtmin_reduction(paw, identity_minimizer(), 0);
  CHECK(id.ell == 32);
  CHECK(id.equivalent);
  CHECK(id.cover.size() <= 4);
  CHECK(is_vertex_cover(paw, id.cover));
  CHECK(id.size_chain_holds);

  for (const auto& g : {corpus::single_edge(), corpus::path3()}) {
    for (int ell : {1, 2}) {
      auto r = dtmin_reduction(g, exact_minimizer(), 0, ell);
      CHECK(r.cover.size() == r.vc);
      CHECK(r.size_chain_holds);
      CHECK(r.approximation_holds);
    }
  }

  auto four = dtmin_reduction(paw, exact_minimizer(), 0, 4);
  CHECK(four.cover.size() == 2);
  CHECK(four.size_chain_holds);

  for (Rational delta : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
    auto r = dtmin_reduction(paw, padded_minimizer(delta), delta, 2);
    CHECK(r.minimized_size >= r.start_size / 4);
    CHECK(r.approximation_holds);
    CHECK(r.size_chain_holds);
  }

  Minimizer broken = [](const DecisionTree&, const Graph&, int) { return DecisionTree::leaf(false); };
  CHECK_THROWS_AS(dtmin_reduction(paw, broken, 0, 1), PreconditionError);
}

TEST_CASE("partial cover gap wrapper") {
  auto inner = exact_partial_decider();
  auto paw = corpus::paw();
  auto yes = partial_vc_gap_wrapper(paw, 2, inner, 2, 3);
  CHECK(yes.promise == Promise::yes);
  CHECK(yes.yes);
  CHECK(yes.c > 1);
  CHECK(yes.c < (1 - 2 * yes.alpha * 3) * 2);

  auto cat = corpus::three_star_caterpillar();
  auto no = partial_vc_gap_wrapper(cat, 1, inner, 2, 4);
  CHECK(no.promise == Promise::no);
  CHECK_FALSE(no.yes);
  CHECK_FALSE(no.unspecified);

  auto odd = partial_vc_gap_wrapper(paw, 1, inner, 2, 3);
  CHECK(odd.promise == Promise::violated);
  CHECK(odd.unspecified);

  CHECK_THROWS_AS(partial_vc_gap_wrapper(paw, 1, inner, 1, 3), PreconditionError);
  CHECK_THROWS_AS(partial_vc_gap_wrapper(paw, 1, inner, 2, 2), PreconditionError);
}

TEST_CASE("gap wrapper agrees with the exact answer on every promise instance") {
  auto inner = exact_partial_decider();
  for (const auto& g : corpus::all_graphs(5)) {
    const int d = std::max(1, g.max_degree());
    const std::size_t vc = min_vertex_cover_exact(g).size();
    for (std::size_t k = 0; k <= static_cast<std::size_t>(g.n()); ++k)
      for (Rational cp : {Rational(3, 2), Rational(2), Rational(3)}) {
        auto w = partial_vc_gap_wrapper(g, k, inner, cp, d);
        if (w.promise == Promise::yes) CHECK(w.yes);
        if (w.promise == Promise::no) CHECK_FALSE(w.yes);
        CHECK(w.promise != Promise::unknown);
        CHECK((w.promise == Promise::yes) == (vc <= k));
      }
  }
}
