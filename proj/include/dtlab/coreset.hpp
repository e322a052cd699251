#pragma once

#include <string>
#include <vector>

#include "dtlab/dtree.hpp"
#include "dtlab/gadget.hpp"
#include "dtlab/graph.hpp"
#include "dtlab/minimize.hpp"
#include "dtlab/pointset.hpp"

namespace dtlab {

// Edge indicators, their single-coordinate perturbations and 0^n, labeled by IsEdge.
LabeledPointSet build_D_G(const Graph& g);
// ell-Ind[e], each with one of its 2(ell+1) ones flipped, and 0^N. ell >= 1.
LabeledPointSet build_ell_D_G(const Graph& g, int ell);

// Mass 1/2 on 0^N, 1/(4m) on each ell-Ind[e], 1/(4m(2ell+2)) on each
// perturbation. An edgeless graph yields the point mass on 0^N.
Distribution hard_distribution(const Graph& g, int ell);

inline constexpr std::size_t kDistillationArityLimit = 14;

struct DistillationWitness {
  BitString x;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  Restriction certificate;  // a minimum certificate (achieves s1)
  Path order;               // certificate ordering achieving s2
  std::size_t dtsize = 0;   // dtsize_over_set(f, D)
  bool holds = false;       // s1 + s2 <= dtsize
};

// s1 = smallest certificate of x; s2 = least sum over i of Rel(f restricted by
// the i-th divergent prefix; D) over every certificate and every ordering of it.
// Requires x in D.
DistillationWitness distillation_bound(const BoolFunction& f, const PointList& d, const BitString& x);

struct CoresetClaimsReport {
  int ell = 0;
  std::size_t points = 0;
  std::size_t vc = 0;
  std::size_t min_certificate = 0;
  std::size_t certificates_checked = 0;
  std::size_t orderings_checked = 0;
  bool certificates_are_covers = true;  // (a)
  bool relevant_bounds_hold = true;     // (b)
  std::size_t dtsize = 0;
  std::size_t size_bound = 0;           // (ell+1)(VC+m)
  bool size_bound_holds = true;         // (c)
  std::vector<std::string> failures;

  bool ok() const { return certificates_are_covers && relevant_bounds_hold && size_bound_holds; }
};

// ell = 0 runs the same checks on D_G.
CoresetClaimsReport verify_coreset_claims(const Graph& g, int ell);

struct ConstantErrorReport {
  Rational alpha;
  Rational threshold;      // alpha/16
  Rational bound;          // (ell+1)(VC_alpha + (1-alpha)m)
  std::size_t vc_alpha = 0;
  std::size_t min_size = 0;  // smallest tree with error <= threshold
  Rational min_size_error;
  DecisionTree witness;
  std::size_t front_points = 0;
  bool holds = false;
};

ConstantErrorReport constant_error_lower_bound_check(const Graph& g, int ell, const Rational& alpha);

}  // namespace dtlab
