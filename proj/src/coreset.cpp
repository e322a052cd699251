#include "dtlab/coreset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dtlab {

LabeledPointSet build_D_G(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  LabeledPointSet d(n);
  for (const auto& e : g.edges()) d.add(edge_indicator(g, e), true, PointRole::indicator);
  for (const auto& e : g.edges()) {
    const BitString ind = edge_indicator(g, e);
    d.add(ind.flipped(e.u), false, PointRole::perturbation);
    d.add(ind.flipped(e.v), false, PointRole::perturbation);
  }
  d.add(BitString(n), false, PointRole::zero);
  return d;
}

LabeledPointSet build_ell_D_G(const Graph& g, int ell) {
  if (ell < 1) throw std::invalid_argument("build_ell_D_G needs ell >= 1; use build_D_G for ell = 0");
  const GadgetIndex idx(g.n(), ell);
  LabeledPointSet d(idx.N());
  for (const auto& e : g.edges()) d.add(ell_ind(g, ell, e), true, PointRole::indicator);
  for (const auto& e : g.edges()) {
    const BitString ind = ell_ind(g, ell, e);
    for (Coord c : ind.ones())
      if (!d.add(ind.flipped(c), false, PointRole::perturbation))
        throw std::logic_error("perturbations of distinct generalized indicators collided");
  }
  d.add(BitString(idx.N()), false, PointRole::zero);
  return d;
}

Distribution hard_distribution(const Graph& g, int ell) {
  const LabeledPointSet support = build_ell_D_G(g, ell);
  Distribution dist(support.arity());
  const auto m = static_cast<std::int64_t>(g.m());
  if (m == 0) {
    dist.add(support[0].x, false, PointRole::zero, Rational(1));
    return dist;
  }
  const Rational indicator(1, 4 * m);
  const Rational perturbation(1, 4 * m * (2 * ell + 2));
  for (const auto& p : support.points()) {
    switch (p.role) {
      case PointRole::zero: dist.add(p.x, p.label, p.role, Rational(1, 2)); break;
      case PointRole::indicator: dist.add(p.x, p.label, p.role, indicator); break;
      default: dist.add(p.x, p.label, p.role, perturbation); break;
    }
  }
  dist.validate();
  return dist;
}

// ---------------------------------------------------------------------------

DistillationWitness distillation_bound(const BoolFunction& f, const PointList& d, const BitString& x) {
  const std::size_t n = f.arity();
  if (n > kDistillationArityLimit)
    throw GuardError("distillation_bound limited to arity <= " + std::to_string(kDistillationArityLimit));
  if (std::find(d.begin(), d.end(), x) == d.end()) throw PreconditionError("x must be a point of D");

  // Deduplicated points with their values and Hamming neighbours inside D.
  PointList pts;
  for (const auto& y : d)
    if (std::find(pts.begin(), pts.end(), y) == pts.end()) pts.push_back(y);
  const std::size_t p = pts.size();
  std::vector<std::uint8_t> val(p);
  for (std::size_t i = 0; i < p; ++i) val[i] = f(pts[i]);
  std::vector<std::vector<int>> nbr(p, std::vector<int>(n + 1, -1));
  for (std::size_t i = 0; i < p; ++i)
    for (Coord c = 1; static_cast<std::size_t>(c) <= n; ++c) {
      auto it = std::find(pts.begin(), pts.end(), pts[i].flipped(c));
      if (it != pts.end()) nbr[i][c] = static_cast<int>(it - pts.begin());
    }

  using Members = std::vector<char>;
  auto rel = [&](const Members& in) {
    std::size_t count = 0;
    for (Coord c = 1; static_cast<std::size_t>(c) <= n; ++c)
      for (std::size_t i = 0; i < p; ++i) {
        const int j = nbr[i][c];
        if (in[i] && j >= 0 && in[j] && val[i] != val[j]) {
          ++count;
          break;
        }
      }
    return count;
  };

  // agree[S]: points equal to x on every coordinate of S (bit c-1 of S).
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Members> agree(subsets, Members(p, 1));
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    const Coord c = static_cast<Coord>(low + 1);
    agree[s] = agree[s & (s - 1)];
    for (std::size_t i = 0; i < p; ++i)
      if (pts[i][c] != x[c]) agree[s][i] = 0;
  }

  const bool target = f(x);
  auto certifies = [&](std::size_t s) {
    for (std::size_t i = 0; i < p; ++i)
      if (agree[s][i] && val[i] != target) return false;
    return true;
  };

  // best[S]: least sum over orderings of S; last[S]: final coordinate of one.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(subsets, kInf);
  std::vector<int> last(subsets, 0);
  best[0] = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!((s >> b) & 1u)) continue;
      const std::size_t prev = s & ~(std::size_t{1} << b);
      const Coord c = static_cast<Coord>(b + 1);
      Members in = agree[prev];
      for (std::size_t i = 0; i < p; ++i)
        if (pts[i][c] == x[c]) in[i] = 0;
      const std::size_t cand = best[prev] + rel(in);
      if (cand < best[s]) {
        best[s] = cand;
        last[s] = c;
      }
    }
  }

  DistillationWitness w;
  w.x = x;
  const auto cert = min_certificate_size(f, d, x);
  w.s1 = cert.size;
  w.certificate = cert.witness;
  std::size_t arg = 0;
  w.s2 = kInf;
  for (std::size_t s = 0; s < subsets; ++s)
    if (certifies(s) && best[s] < w.s2) {
      w.s2 = best[s];
      arg = s;
    }
  for (std::size_t s = arg; s; s &= ~(std::size_t{1} << (last[s] - 1))) w.order.push_back({last[s], x[last[s]]});
  std::reverse(w.order.begin(), w.order.end());

  LabeledPointSet labeled(n);
  for (std::size_t i = 0; i < p; ++i) labeled.add(pts[i], val[i] != 0);
  w.dtsize = dtsize_over_set(labeled).size;
  w.holds = w.s1 + w.s2 <= w.dtsize;
  return w;
}

// ---------------------------------------------------------------------------

CoresetClaimsReport verify_coreset_claims(const Graph& g, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be >= 0");
  CoresetClaimsReport r;
  r.ell = ell;
  const GadgetIndex idx(g.n(), ell);
  const LabeledPointSet d = ell == 0 ? build_D_G(g) : build_ell_D_G(g, ell);
  const BoolFunction f = ell == 0 ? isedge_function(g) : ell_isedge_function(g, ell);
  const PointList pts = d.inputs();
  const BitString zero(idx.N());
  r.points = d.size();
  r.vc = min_vertex_cover_exact(g).size();

  const auto certs = all_min_certificates(f, pts, zero);
  r.min_certificate = certs.empty() ? 0 : certs.front().size();
  for (const auto& rho : certs) {
    ++r.certificates_checked;
    VertexSet projected;
    std::vector<Coord> coords;
    for (const auto& [c, b] : rho) {
      projected.insert(idx.vertex_of(c));
      coords.push_back(c);
    }
    if (!is_vertex_cover(g, projected)) {
      r.certificates_are_covers = false;
      r.failures.push_back("certificate " + format_restriction(rho) + " does not project to a cover");
    }
    do {
      ++r.orderings_checked;
      Path pi;
      for (Coord c : coords) pi.push_back({c, false});
      VertexList seen;
      for (std::size_t kappa = 1; kappa <= pi.size(); ++kappa) {
        const Vertex v = idx.vertex_of(pi[kappa - 1].var);
        const EdgeSet part = restricted_edge_neighborhood(g, v, seen);
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
        if (part.empty()) continue;
        const auto relevant = relevant_vars(f, pts, to_restriction(divergent_prefix(pi, kappa)));
        const std::size_t need = static_cast<std::size_t>(ell) + static_cast<std::size_t>(ell + 1) * part.size();
        if (relevant.size() < need) {
          r.relevant_bounds_hold = false;
          r.failures.push_back("ordering " + format_path(pi) + " position " + std::to_string(kappa) + ": Rel " +
                               std::to_string(relevant.size()) + " < " + std::to_string(need));
        }
      }
    } while (std::next_permutation(coords.begin(), coords.end()));
  }

  r.dtsize = dtsize_over_set(d).size;
  r.size_bound = static_cast<std::size_t>(ell + 1) * (r.vc + g.m());
  r.size_bound_holds = r.dtsize >= r.size_bound;
  if (!r.size_bound_holds)
    r.failures.push_back("dtsize " + std::to_string(r.dtsize) + " < " + std::to_string(r.size_bound));
  return r;
}

ConstantErrorReport constant_error_lower_bound_check(const Graph& g, int ell, const Rational& alpha) {
  ConstantErrorReport r;
  r.alpha = alpha;
  r.threshold = alpha / 16;
  r.vc_alpha = min_partial_vertex_cover_exact(g, alpha).size();
  const auto m = static_cast<std::int64_t>(g.m());
  r.bound = Rational(ell + 1) * (Rational(static_cast<std::int64_t>(r.vc_alpha)) + (Rational(1) - alpha) * m);

  const Distribution dist = hard_distribution(g, ell);
  const std::size_t cap = dtsize_over_set(dist.support()).size;
  const ParetoFront front = min_error_front(dist, cap);
  r.front_points = front.entries.size();
  const FrontEntry* e = front.smallest_within(r.threshold);
  if (!e) throw std::logic_error("error front never reaches alpha/16");
  r.min_size = e->size;
  r.min_size_error = e->error;
  r.witness = e->tree;
  r.holds = Rational(static_cast<std::int64_t>(r.min_size)) >= r.bound;
  return r;
}

}  // namespace dtlab
