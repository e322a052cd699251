#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtlab/coreset.hpp"
#include "dtlab/dtree.hpp"
#include "dtlab/graph.hpp"
#include "dtlab/pointset.hpp"

namespace dtlab {

enum class Regime { inverse_poly, constant_error };

std::string_view regime_name(Regime r);
Regime parse_regime(std::string_view s);

struct ReductionParams {
  Regime regime = Regime::inverse_poly;
  int n = 0;
  std::size_t m = 0;
  int d = 0;
  Rational delta_prime;
  Rational delta;
  Rational alpha;   // constant-error regime only
  Rational lambda;
  int ell = 0;
  Rational epsilon;
  std::size_t N = 0;
  std::size_t support_size = 0;  // |ell-D_G|
  // Test mode keeps the decision exact at small ell: delta = 0 and the size
  // threshold becomes (ell+1)(k+m).
  bool test_mode = false;

  // ell(k+m) + 2mn.
  std::size_t target_size(std::size_t k) const;
  // Largest hypothesis size accepted for k.
  std::size_t size_threshold(std::size_t k) const;
};

// Throws PreconditionError when delta' <= 0 or d < 1.
ReductionParams params_inverse_poly(int n, std::size_t m, int d, const Rational& delta_prime);
// Throws PreconditionError unless alpha < 1/(d+1) and the lambda interval is nonempty.
ReductionParams params_constant_error(int n, std::size_t m, int d, const Rational& delta_prime,
                                      const Rational& alpha);
// Small-ell parameters for end-to-end runs; alpha only matters for constant error.
ReductionParams params_test_mode(int n, std::size_t m, Regime regime, int ell, const Rational& alpha);

struct ParamCheck {
  std::string name;
  bool holds = false;
};
// Re-evaluates every inequality the calculators cite, including minimality of ell.
std::vector<ParamCheck> check_params(const ReductionParams& p);

// Answers ell-IsEdge queries and counts them.
class MembershipOracle {
 public:
  MembershipOracle(Graph g, int ell);
  bool operator()(const BitString& x);
  std::uint64_t queries() const { return queries_.load(); }
  std::size_t arity() const { return N_; }

 private:
  Graph g_;
  int ell_;
  std::size_t N_;
  std::atomic<std::uint64_t> queries_{0};
};

// Exact sampler for a finite distribution: draws an integer in [0, Q) where Q
// is the common denominator and locates it by binary search.
class ExampleOracle {
 public:
  ExampleOracle(Distribution dist, std::uint64_t seed);
  std::pair<BitString, bool> sample();
  std::size_t draw_index();
  std::uint64_t samples() const { return samples_.load(); }
  const Distribution& support() const { return dist_; }

 private:
  Distribution dist_;
  std::vector<std::int64_t> cumulative_;
  std::int64_t total_ = 0;
  std::mt19937_64 rng_;
  std::mutex mu_;
  std::atomic<std::uint64_t> samples_{0};
};

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

struct LearnerContext {
  std::size_t arity = 0;
  std::size_t size_budget = 0;
  Rational epsilon;
  Regime regime = Regime::inverse_poly;
  MembershipOracle* membership = nullptr;
  ExampleOracle* examples = nullptr;
  std::chrono::milliseconds time_budget{0};
  const std::atomic<bool>* stop = nullptr;
  std::uint64_t seed = 0;

  bool stopped() const { return stop && stop->load(); }
};

using Learner = std::function<DecisionTree(const LearnerContext&)>;

// occam_ideal, greedy_topdown, constant_zero.
std::map<std::string, Learner> builtin_learners();

struct LearnerRun {
  bool finished = false;
  bool timed_out = false;
  std::string error;
  std::size_t size = 0;
  Rational error_rate;
  bool accepted = false;
  std::uint64_t queries = 0;
  std::uint64_t samples = 0;
  double seconds = 0;
  double distance_seconds = 0;
};

struct DeciderOptions {
  std::uint64_t seed = 0;
  std::chrono::milliseconds time_budget{60'000};
  int repetitions = 3;  // majority vote; stops once a majority is settled
};

struct DeciderReport {
  bool yes = false;
  std::size_t k = 0;
  std::size_t threshold = 0;
  Rational epsilon;
  std::size_t N = 0;
  std::vector<LearnerRun> runs;
  bool flagged = false;  // some run crashed or timed out
};

DeciderReport dtlearn_decider(const Graph& g, std::size_t k, const Learner& learner, const ReductionParams& params,
                              const DeciderOptions& opts = {});

// Minimizer contract: returns a tree equivalent to its input.
using Minimizer = std::function<DecisionTree(const DecisionTree&, const Graph&, int ell)>;

Minimizer identity_minimizer();
// Exact ell-IsEdge minimum via the orbit-reduced DP with Dup(v) orbits.
Minimizer exact_minimizer();
// Exact minimum padded with floor(delta * size) redundant nodes at the end of
// the 0^N path, simulating a (1+delta)-approximate minimizer.
Minimizer padded_minimizer(const Rational& delta);

struct DtminReport {
  int ell = 0;
  std::size_t start_size = 0;
  std::size_t minimized_size = 0;
  VertexSet cover;
  std::size_t vc = 0;
  bool equivalent = false;
  bool size_chain_holds = false;   // (ell+1)(k'+m) <= s'
  bool approximation_holds = false;  // k' <= [1 + delta(d+2)] VC
};

// ell defaults to 2mn; test_ell overrides it.
DtminReport dtmin_reduction(const Graph& g, const Minimizer& minimizer, const Rational& delta,
                            std::optional<int> test_ell = std::nullopt, std::uint64_t seed = 0);

enum class Promise { yes, no, violated, unknown };

struct WrapperResult {
  bool yes = false;
  Rational alpha;
  Rational c;
  Promise promise = Promise::violated;
  bool unspecified = false;  // promise violated or unknown: either answer is acceptable
};

using PartialDecider = std::function<bool(const Graph&, std::size_t k, const Rational& alpha, const Rational& c)>;

// Decides VC <= k versus VC > c' k through an alpha-partial (k, ck) decider.
WrapperResult partial_vc_gap_wrapper(const Graph& g, std::size_t k, const PartialDecider& inner,
                                     const Rational& c_prime, int d);
// Exact inner decider: Yes iff VC_alpha(G) <= k.
PartialDecider exact_partial_decider();

}  // namespace dtlab
