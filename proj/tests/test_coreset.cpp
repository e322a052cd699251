#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "dtlab/coreset.hpp"
#include "random_tree.hpp"

using namespace dtlab;

TEST_CASE("D_G") {
  auto paw = corpus::paw();
  auto d = build_D_G(paw);
  CHECK(d.size() == 9);
  std::size_t ind = 0, pert = 0, zero = 0;
  for (const auto& p : d.points()) {
    CHECK(p.label == isedge_eval(paw, p.x));
    switch (p.role) {
      case PointRole::indicator: ++ind; CHECK(p.label); break;
      case PointRole::perturbation: ++pert; CHECK_FALSE(p.label); CHECK(p.x.count() == 1); break;
      case PointRole::zero: ++zero; break;
      default: FAIL("unexpected role");
    }
  }
  CHECK(ind == 4);
  CHECK(pert == 4);
  CHECK(zero == 1);
  auto e = build_D_G(corpus::edgeless(3));
  CHECK(e.size() == 1);
  CHECK(e[0].x == BitString(3));
}

TEST_CASE("ell-D_G") {
  auto paw = corpus::paw();
  CHECK(build_ell_D_G(paw, 2).size() == 29);
  CHECK(build_ell_D_G(corpus::single_edge(), 1).size() == 6);
  CHECK_THROWS(build_ell_D_G(paw, 0));
  for (const auto& g : corpus::all_graphs(5))
    for (int ell = 1; ell <= 3; ++ell) {
      auto d = build_ell_D_G(g, ell);
      CHECK(d.size() == g.m() + g.m() * static_cast<std::size_t>(2 * ell + 2) + 1);
      for (const auto& p : d.points()) {
        CHECK(p.label == ell_isedge_eval(g, ell, p.x));
        if (p.role == PointRole::perturbation) CHECK_FALSE(p.label);
      }
    }
}

TEST_CASE("hard distribution") {
  auto paw = corpus::paw();
  auto dist = hard_distribution(paw, 2);
  CHECK(dist.total_mass() == 1);
  Rational ones = 0;
  for (const auto& p : dist.points()) {
    if (p.label) ones += p.mass;
    if (p.role == PointRole::perturbation) CHECK(p.mass == Rational(1, 96));
  }
  CHECK(ones == Rational(1, 4));
  auto point = hard_distribution(corpus::edgeless(2), 1);
  CHECK(point.size() == 1);
  CHECK(point.total_mass() == 1);
  for (const auto& g : corpus::all_graphs(5))
    for (int ell = 1; ell <= 2; ++ell) CHECK(hard_distribution(g, ell).total_mass() == 1);
}

TEST_CASE("distillation: examples") {
  auto c = distillation_bound(BoolFunction::constant(3, false), full_cube(3), BitString(3));
  CHECK(c.s1 == 0);
  CHECK(c.s2 == 0);
  CHECK(c.dtsize == 0);
  CHECK(c.holds);

  auto paw = corpus::paw();
  auto w = distillation_bound(isedge_function(paw), build_D_G(paw).inputs(), BitString(4));
  CHECK(w.s1 == 2);
  CHECK(w.s2 == 4);
  CHECK(w.dtsize >= 6);
  CHECK(w.holds);

  auto e = corpus::single_edge();
  auto s = distillation_bound(isedge_function(e), build_D_G(e).inputs(), BitString(2));
  CHECK(s.s1 == 1);
  CHECK(s.s2 == 1);
  CHECK(s.dtsize == 2);

  CHECK_THROWS_AS(distillation_bound(isedge_function(paw), build_D_G(paw).inputs(), BitString::parse("1111")),
                  PreconditionError);
}

TEST_CASE("distillation: witnesses are consistent") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    auto f = testutil::random_function(n, rng);
    PointList d;
    for (const auto& y : full_cube(n))
      if (rng() % 2) d.push_back(y);
    if (d.empty()) continue;
    const auto x = d[rng() % d.size()];
    auto w = distillation_bound(f, d, x);
    CHECK(w.holds);
    CHECK(w.certificate.size() == w.s1);
    CHECK(is_certificate(f, d, x, w.certificate));
    // The ordering is itself a certificate and its Rel sum reproduces s2.
    Restriction r = to_restriction(w.order);
    CHECK(is_certificate(f, d, x, r));
    std::size_t sum = 0;
    for (std::size_t k = 1; k <= w.order.size(); ++k)
      sum += relevant_vars(f, d, to_restriction(divergent_prefix(w.order, k))).size();
    CHECK(sum == w.s2);
  }
}

TEST_CASE("coreset claims") {
  auto e = verify_coreset_claims(corpus::single_edge(), 1);
  CHECK(e.ok());
  CHECK(e.size_bound == 4);
  CHECK(e.dtsize >= 4);
  auto t = verify_coreset_claims(corpus::triangle(), 1);
  CHECK(t.ok());
  CHECK(t.size_bound == 10);
  CHECK(verify_coreset_claims(corpus::edgeless(3), 1).ok());
  auto p = verify_coreset_claims(corpus::paw(), 0);
  CHECK(p.ok());
  CHECK(p.min_certificate == 2);
}

TEST_CASE("constant-error bound") {
  auto paw = corpus::paw();
  auto r = constant_error_lower_bound_check(paw, 1, Rational(1, 4));
  CHECK(r.vc_alpha == 1);
  CHECK(r.bound == 8);
  CHECK(r.threshold == Rational(1, 64));
  CHECK(r.holds);
  CHECK(r.min_size_error <= r.threshold);
  CHECK(r.min_size > 0);  // the constant-0 tree errs 1/4
}
