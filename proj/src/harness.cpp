#include "dtlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <numeric>
#include <thread>

#include "dtlab/gadget.hpp"
#include "dtlab/minimize.hpp"
#include "dtlab/reduction.hpp"

namespace dtlab {

std::string_view regime_name(Regime r) {
  return r == Regime::inverse_poly ? "inverse-poly" : "constant-error";
}

Regime parse_regime(std::string_view s) {
  if (s == "inverse-poly") return Regime::inverse_poly;
  if (s == "constant-error") return Regime::constant_error;
  throw std::invalid_argument("unknown regime '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Parameters

namespace {

std::int64_t floor_of(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r < 0) --q;
  return q;
}

std::size_t ell_support(std::size_t m, int ell) {
  return m + m * static_cast<std::size_t>(2 * ell + 2) + 1;
}

Rational R(std::int64_t v) { return Rational(v); }

// 1 + (1-lambda)/d > (1+delta) + 2(1+delta)n/ell
bool inverse_poly_ell_ok(const ReductionParams& p, int ell) {
  if (ell <= 0) return false;
  return R(1) + (R(1) - p.lambda) / p.d > (R(1) + p.delta) + R(2) * (R(1) + p.delta) * p.n / ell;
}

// (1-lambda)(1-alpha)/d > delta + alpha + 2(1+delta)n/ell
bool constant_error_ell_ok(const ReductionParams& p, int ell) {
  if (ell <= 0) return false;
  return (R(1) - p.lambda) * (R(1) - p.alpha) / p.d > p.delta + p.alpha + R(2) * (R(1) + p.delta) * p.n / ell;
}

void fill_sizes(ReductionParams& p) {
  p.N = static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.ell + 1);
  p.support_size = ell_support(p.m, p.ell);
}

}  // namespace

std::size_t ReductionParams::target_size(std::size_t k) const {
  return static_cast<std::size_t>(ell) * (k + m) + 2 * m * static_cast<std::size_t>(n);
}

std::size_t ReductionParams::size_threshold(std::size_t k) const {
  if (test_mode) return static_cast<std::size_t>(ell + 1) * (k + m);
  return static_cast<std::size_t>(floor_of((R(1) + delta) * static_cast<std::int64_t>(target_size(k))));
}

ReductionParams params_inverse_poly(int n, std::size_t m, int d, const Rational& delta_prime) {
  if (delta_prime <= 0) throw PreconditionError("delta' must be positive");
  if (d < 1) throw PreconditionError("degree bound must be >= 1");
  if (n < 1) throw PreconditionError("need at least one vertex");
  ReductionParams p;
  p.regime = Regime::inverse_poly;
  p.n = n;
  p.m = m;
  p.d = d;
  p.delta_prime = delta_prime;
  p.lambda = (R(1) / (R(1) + delta_prime) + R(1)) / 2;
  const Rational headroom = std::min(p.lambda * (R(1) + delta_prime), R(1) + (R(1) - p.lambda) / d);
  p.delta = (headroom - R(1)) / 2;
  // ell > 2(1+delta)n / ((1-lambda)/d - delta), rounded up to a multiple of n.
  const Rational bound = R(2) * (R(1) + p.delta) * n / ((R(1) - p.lambda) / d - p.delta);
  p.ell = static_cast<int>((floor_of(bound / n) + 1) * n);
  while (p.ell > n && inverse_poly_ell_ok(p, p.ell - n)) p.ell -= n;
  while (!inverse_poly_ell_ok(p, p.ell)) p.ell += n;
  fill_sizes(p);
  p.epsilon = Rational(1, static_cast<std::int64_t>(p.support_size) + 1);
  return p;
}

ReductionParams params_constant_error(int n, std::size_t m, int d, const Rational& delta_prime,
                                      const Rational& alpha) {
  if (delta_prime <= 0) throw PreconditionError("delta' must be positive");
  if (d < 1) throw PreconditionError("degree bound must be >= 1");
  if (n < 1) throw PreconditionError("need at least one vertex");
  if (alpha <= 0) throw PreconditionError("alpha must be positive");
  if (alpha >= Rational(1, d + 1)) throw PreconditionError("alpha must be below 1/(d+1)");
  const Rational lo = R(1) / (R(1) + delta_prime);
  const Rational hi = R(1) - alpha * d / (R(1) - alpha);
  if (lo >= hi)
    throw PreconditionError("no lambda satisfies lambda(1+delta') > 1 and alpha < (1-lambda)(1-alpha)/d: need " +
                            to_string(lo) + " < " + to_string(hi));
  ReductionParams p;
  p.regime = Regime::constant_error;
  p.n = n;
  p.m = m;
  p.d = d;
  p.delta_prime = delta_prime;
  p.alpha = alpha;
  p.lambda = (lo + hi) / 2;
  p.delta = std::min((R(1) - p.lambda) * (R(1) - alpha) / d - alpha, p.lambda * (R(1) + delta_prime) - R(1)) / 2;
  const Rational gap = (R(1) - p.lambda) * (R(1) - alpha) / d - p.delta - alpha;
  p.ell = static_cast<int>(floor_of(R(2) * (R(1) + p.delta) * n / gap) + 1);
  while (p.ell > 1 && constant_error_ell_ok(p, p.ell - 1)) --p.ell;
  while (!constant_error_ell_ok(p, p.ell)) ++p.ell;
  fill_sizes(p);
  p.epsilon = alpha / 32;
  return p;
}

ReductionParams params_test_mode(int n, std::size_t m, Regime regime, int ell, const Rational& alpha) {
  if (ell < 1) throw PreconditionError("test mode needs ell >= 1");
  ReductionParams p;
  p.regime = regime;
  p.n = n;
  p.m = m;
  p.ell = ell;
  p.alpha = alpha;
  p.test_mode = true;
  fill_sizes(p);
  if (regime == Regime::inverse_poly) {
    p.epsilon = Rational(1, static_cast<std::int64_t>(p.support_size) + 1);
  } else {
    if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0,1)");
    Rational e = alpha / 16;
    if (m > 0) e = std::min(e, Rational(1, 8 * static_cast<std::int64_t>(m)));
    p.epsilon = e / 2;
  }
  return p;
}

std::vector<ParamCheck> check_params(const ReductionParams& p) {
  std::vector<ParamCheck> out;
  auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  add("N = n(ell+1)", p.N == static_cast<std::size_t>(p.n) * static_cast<std::size_t>(p.ell + 1));
  add("|supp| = m + m(2ell+2) + 1", p.support_size == ell_support(p.m, p.ell));
  if (p.test_mode) {
    add("ell >= 1", p.ell >= 1);
    add("epsilon > 0", p.epsilon > 0);
    if (p.regime == Regime::inverse_poly)
      add("epsilon < 1/|supp|", p.epsilon < Rational(1, static_cast<std::int64_t>(p.support_size)));
    else
      add("epsilon < alpha/16", p.epsilon < p.alpha / 16);
    return out;
  }
  const Rational one(1);
  add("lambda < 1", p.lambda < one);
  add("lambda(1+delta') > 1", p.lambda * (one + p.delta_prime) > one);
  add("delta > 0", p.delta > 0);
  add("1+delta < lambda(1+delta')", one + p.delta < p.lambda * (one + p.delta_prime));
  if (p.regime == Regime::inverse_poly) {
    add("1+delta < 1+(1-lambda)/d", one + p.delta < one + (one - p.lambda) / p.d);
    add("1+(1-lambda)/d > (1+delta) + 2(1+delta)n/ell", inverse_poly_ell_ok(p, p.ell));
    add("ell is a multiple of n", p.ell % p.n == 0);
    add("ell minimal: ell-n fails", !inverse_poly_ell_ok(p, p.ell - p.n));
    add("epsilon < 1/|supp|", p.epsilon < Rational(1, static_cast<std::int64_t>(p.support_size)));
  } else {
    add("alpha < 1/(d+1)", p.alpha < Rational(1, p.d + 1));
    add("alpha < (1-lambda)(1-alpha)/d", p.alpha < (one - p.lambda) * (one - p.alpha) / p.d);
    add("(1-lambda)(1-alpha)/d > delta + alpha", (one - p.lambda) * (one - p.alpha) / p.d > p.delta + p.alpha);
    add("ell large enough: (1-lambda)(1-alpha)/d > delta + alpha + 2(1+delta)n/ell", constant_error_ell_ok(p, p.ell));
    add("ell minimal: ell-1 fails", !constant_error_ell_ok(p, p.ell - 1));
    add("epsilon < alpha/16", p.epsilon < p.alpha / 16);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

MembershipOracle::MembershipOracle(Graph g, int ell)
    : g_(std::move(g)), ell_(ell), N_(GadgetIndex(g_.n(), ell).N()) {}

bool MembershipOracle::operator()(const BitString& x) {
  queries_.fetch_add(1, std::memory_order_relaxed);
  return ell_isedge_eval(g_, ell_, x);
}

ExampleOracle::ExampleOracle(Distribution dist, std::uint64_t seed) : dist_(std::move(dist)), rng_(seed) {
  dist_.validate();
  std::int64_t q = 1;
  for (const auto& p : dist_.points()) q = std::lcm(q, p.mass.denominator());
  for (const auto& p : dist_.points()) {
    total_ += p.mass.numerator() * (q / p.mass.denominator());
    cumulative_.push_back(total_);
  }
}

std::size_t ExampleOracle::draw_index() {
  std::int64_t u;
  {
    std::lock_guard<std::mutex> lock(mu_);
    u = std::uniform_int_distribution<std::int64_t>(0, total_ - 1)(rng_);
  }
  samples_.fetch_add(1, std::memory_order_relaxed);
  return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

std::pair<BitString, bool> ExampleOracle::sample() {
  const auto& p = dist_[draw_index()];
  return {p.x, p.label};
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Learners

namespace {

DecisionTree occam_ideal(const LearnerContext& ctx) {
  const Distribution& supp = ctx.examples->support();
  Distribution labeled(supp.arity());
  Rational min_mass = supp.points().empty() ? Rational(1) : supp[0].mass;
  for (const auto& p : supp.points()) {
    if (ctx.stopped()) throw Error("cancelled");
    labeled.add(p.x, (*ctx.membership)(p.x), p.role, p.mass);
    min_mass = std::min(min_mass, p.mass);
  }
  const MinimizeResult exact = dtsize_over_set(labeled.support());
  if (ctx.epsilon < min_mass) return exact.tree;
  const ParetoFront front = min_error_front(labeled, exact.size);
  const FrontEntry* e = front.smallest_within(ctx.epsilon);
  return e ? e->tree : exact.tree;
}

struct Id3 {
  const std::vector<BitString>& x;
  const std::vector<bool>& y;
  std::size_t arity;
  std::size_t budget;
  const LearnerContext& ctx;

  static double entropy(std::size_t pos, std::size_t total) {
    if (pos == 0 || pos == total) return 0;
    const double p = static_cast<double>(pos) / static_cast<double>(total);
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
  }

  DecisionTree grow(const std::vector<std::size_t>& rows) {
    std::size_t pos = 0;
    for (auto r : rows) pos += y[r];
    const bool majority = 2 * pos > rows.size();
    if (pos == 0 || pos == rows.size() || budget == 0 || ctx.stopped()) return DecisionTree::leaf(majority);
    const double base = entropy(pos, rows.size());
    double best_gain = 1e-12;
    Coord best = 0;
    for (Coord c = 1; static_cast<std::size_t>(c) <= arity; ++c) {
      std::size_t n1 = 0, p1 = 0;
      for (auto r : rows)
        if (x[r][c]) {
          ++n1;
          p1 += y[r];
        }
      const std::size_t n0 = rows.size() - n1, p0 = pos - p1;
      if (n0 == 0 || n1 == 0) continue;
      const double rem = (static_cast<double>(n0) * entropy(p0, n0) + static_cast<double>(n1) * entropy(p1, n1)) /
                         static_cast<double>(rows.size());
      if (base - rem > best_gain) {
        best_gain = base - rem;
        best = c;
      }
    }
    if (!best) return DecisionTree::leaf(majority);
    --budget;
    std::vector<std::size_t> zero, one;
    for (auto r : rows) (x[r][best] ? one : zero).push_back(r);
    DecisionTree t0 = grow(zero);
    DecisionTree t1 = grow(one);
    return DecisionTree::node(best, t0, t1);
  }
};

DecisionTree greedy_topdown(const LearnerContext& ctx) {
  const std::size_t log_n = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(ctx.arity) + 1)));
  const std::size_t draws = std::min<std::size_t>(20000, std::max<std::size_t>(64, 8 * (ctx.size_budget + 1) * log_n));
  std::vector<BitString> xs;
  std::vector<bool> ys;
  for (std::size_t i = 0; i < draws && !ctx.stopped(); ++i) {
    auto [x, label] = ctx.examples->sample();
    xs.push_back(std::move(x));
    ys.push_back(label);
  }
  std::vector<std::size_t> rows(xs.size());
  std::iota(rows.begin(), rows.end(), 0);
  Id3 id3{xs, ys, ctx.arity, ctx.size_budget, ctx};
  return id3.grow(rows);
}

}  // namespace

std::map<std::string, Learner> builtin_learners() {
  return {
      {"occam_ideal", occam_ideal},
      {"greedy_topdown", greedy_topdown},
      {"constant_zero", [](const LearnerContext&) { return DecisionTree::leaf(false); }},
  };
}

// ---------------------------------------------------------------------------
// DT-Learn decider

namespace {

struct RunState {
  MembershipOracle membership;
  ExampleOracle examples;
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::optional<DecisionTree> tree;
  std::string error;

  RunState(const Graph& g, int ell, const Distribution& dist, std::uint64_t seed)
      : membership(g, ell), examples(dist, seed) {}
};

}  // namespace

DeciderReport dtlearn_decider(const Graph& g, std::size_t k, const Learner& learner, const ReductionParams& params,
                              const DeciderOptions& opts) {
  if (params.n != g.n() || params.m != g.m())
    throw PreconditionError("parameters were computed for a different graph size");
  if (params.ell < 1) throw PreconditionError("the decider needs ell >= 1");
  const auto bad = check_params(params);
  for (const auto& c : bad)
    if (!c.holds) throw PreconditionError("parameter check failed: " + c.name);

  const Distribution dist = params.regime == Regime::inverse_poly ? Distribution::uniform(build_ell_D_G(g, params.ell))
                                                                   : hard_distribution(g, params.ell);
  DeciderReport report;
  report.k = k;
  report.threshold = params.size_threshold(k);
  report.epsilon = params.epsilon;
  report.N = params.N;

  int yes_votes = 0, no_votes = 0;
  const int reps = std::max(1, opts.repetitions);
  for (int r = 0; r < reps && 2 * yes_votes <= reps && 2 * no_votes <= reps; ++r) {
    const std::uint64_t seed = derive_seed(opts.seed, "run-" + std::to_string(r));
    auto state = std::make_shared<RunState>(g, params.ell, dist, seed);
    LearnerContext ctx;
    ctx.arity = params.N;
    ctx.size_budget = report.threshold;
    ctx.epsilon = params.epsilon;
    ctx.regime = params.regime;
    ctx.membership = &state->membership;
    ctx.examples = &state->examples;
    ctx.time_budget = opts.time_budget;
    ctx.stop = &state->stop;
    ctx.seed = derive_seed(seed, "learner");

    LearnerRun run;
    const auto start = std::chrono::steady_clock::now();
    std::thread worker([state, learner, ctx] {
      std::optional<DecisionTree> tree;
      std::string error;
      try {
        tree = learner(ctx);
      } catch (const std::exception& e) {
        error = e.what();
      } catch (...) {
        error = "unknown exception";
      }
      std::lock_guard<std::mutex> lock(state->mu);
      state->tree = std::move(tree);
      state->error = std::move(error);
      state->done = true;
      state->cv.notify_all();
    });
    {
      std::unique_lock<std::mutex> lock(state->mu);
      state->cv.wait_for(lock, opts.time_budget, [&] { return state->done; });
      run.finished = state->done;
    }
    if (run.finished) {
      worker.join();
    } else {
      state->stop = true;
      run.timed_out = true;
      worker.detach();
    }
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    run.queries = state->membership.queries();
    run.samples = state->examples.samples();

    if (run.finished) {
      std::lock_guard<std::mutex> lock(state->mu);
      if (!state->error.empty()) {
        run.error = state->error;
      } else if (static_cast<std::size_t>(state->tree->max_var()) > params.N) {
        run.error = "hypothesis queries variables beyond N";
      } else {
        const auto t0 = std::chrono::steady_clock::now();
        run.size = state->tree->size();
        run.error_rate = tree_error(*state->tree, dist);
        run.distance_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        run.accepted = run.size <= report.threshold && run.error_rate <= params.epsilon;
      }
    }
    if (run.timed_out || !run.error.empty()) report.flagged = true;
    (run.accepted ? yes_votes : no_votes)++;
    report.runs.push_back(std::move(run));
  }
  report.yes = 2 * yes_votes > static_cast<int>(report.runs.size());
  return report;
}

// ---------------------------------------------------------------------------
// DT-Min reduction

Minimizer identity_minimizer() {
  return [](const DecisionTree& t, const Graph&, int) { return t; };
}

namespace {

MinimizeResult exact_ell_minimum(const Graph& g, int ell) {
  const GadgetIndex idx(g.n(), ell);
  std::vector<std::vector<Coord>> orbits;
  for (Vertex v = 1; v <= g.n(); ++v) orbits.push_back(dup_vars(v, idx));
  return dtsize_exact_symmetric(ell_isedge_function(g, ell), orbits);
}

DecisionTree pad_zero_path(const DecisionTree& t, const BitString& zero, std::size_t pad) {
  if (t.is_leaf()) {
    DecisionTree chain = t;
    for (std::size_t i = 0; i < pad; ++i)
      chain = DecisionTree::node(1, chain, DecisionTree::leaf(t.label()), NodeRole::padding);
    return chain;
  }
  if (zero[t.var()]) return DecisionTree::node(t.var(), t.zero(), pad_zero_path(t.one(), zero, pad), t.role());
  return DecisionTree::node(t.var(), pad_zero_path(t.zero(), zero, pad), t.one(), t.role());
}

}  // namespace

Minimizer exact_minimizer() {
  return [](const DecisionTree&, const Graph& g, int ell) { return exact_ell_minimum(g, ell).tree; };
}

Minimizer padded_minimizer(const Rational& delta) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  return [delta](const DecisionTree&, const Graph& g, int ell) {
    const DecisionTree t = exact_ell_minimum(g, ell).tree;
    const auto pad = static_cast<std::size_t>(floor_of(delta * static_cast<std::int64_t>(t.size())));
    if (g.n() == 0) return t;
    return pad_zero_path(t, BitString(GadgetIndex(g.n(), ell).N()), pad);
  };
}

DtminReport dtmin_reduction(const Graph& g, const Minimizer& minimizer, const Rational& delta,
                            std::optional<int> test_ell, std::uint64_t seed) {
  DtminReport r;
  r.ell = test_ell.value_or(static_cast<int>(2 * g.m() * static_cast<std::size_t>(g.n())));
  if (r.ell < 0) throw std::invalid_argument("ell must be >= 0");
  VertexSet all;
  for (Vertex v = 1; v <= g.n(); ++v) all.insert(v);
  const DecisionTree start = build_ell_isedge_tree(g, all, r.ell).tree;
  r.start_size = start.size();
  const DecisionTree t = minimizer(start, g, r.ell);
  r.minimized_size = t.size();

  const std::size_t N = GadgetIndex(g.n(), r.ell).N();
  if (static_cast<std::size_t>(t.max_var()) > N) throw PreconditionError("minimizer output queries beyond N");
  auto same = [&](const BitString& x) { return evaluate(t, x) == evaluate(start, x); };
  bool equivalent = true;
  if (N <= 20) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << N) && equivalent; ++i)
      equivalent = same(BitString::from_mask(i, N));
  } else {
    const LabeledPointSet probe = r.ell == 0 ? build_D_G(g) : build_ell_D_G(g, r.ell);
    for (const auto& p : probe.points()) equivalent = equivalent && same(p.x);
    std::mt19937_64 rng(derive_seed(seed, "dtmin-probes"));
    for (int i = 0; i < 20000 && equivalent; ++i) {
      BitString x(N);
      for (Coord c = 1; static_cast<std::size_t>(c) <= N; ++c)
        if (rng() & 1u) x.set(c);
      equivalent = same(x);
    }
  }
  r.equivalent = equivalent;
  if (!equivalent) throw PreconditionError("minimizer output is not equivalent to the input tree");

  r.cover = extract_cover_from_ell_tree(t, g, r.ell);
  const std::size_t kp = r.cover.size();
  r.size_chain_holds = static_cast<std::size_t>(r.ell + 1) * (kp + g.m()) <= r.minimized_size;
  r.vc = min_vertex_cover_exact(g).size();
  const Rational factor = Rational(1) + delta * (g.max_degree() + 2);
  r.approximation_holds = Rational(static_cast<std::int64_t>(kp)) <= factor * static_cast<std::int64_t>(r.vc);
  return r;
}

// ---------------------------------------------------------------------------
// Partial-cover gap wrapper

WrapperResult partial_vc_gap_wrapper(const Graph& g, std::size_t k, const PartialDecider& inner,
                                     const Rational& c_prime, int d) {
  if (c_prime <= 1) throw PreconditionError("c' must exceed 1");
  if (d < 1) throw PreconditionError("degree bound must be >= 1");
  if (g.max_degree() > d) throw PreconditionError("graph degree exceeds d");
  WrapperResult w;
  w.alpha = std::min((Rational(1) - Rational(1) / c_prime) / (2 * d), Rational(1, d + 1)) / 2;
  w.c = (Rational(1) + (Rational(1) - 2 * w.alpha * d) * c_prime) / 2;
  if (!(Rational(1) < w.c && w.c < (Rational(1) - 2 * w.alpha * d) * c_prime))
    throw std::logic_error("wrapper constants out of range");
  w.yes = inner(g, k, w.alpha, w.c);
  if (g.n() <= kExactVertexLimit) {
    const auto vc = static_cast<std::int64_t>(min_vertex_cover_exact(g).size());
    const auto kk = static_cast<std::int64_t>(k);
    if (vc <= kk)
      w.promise = Promise::yes;
    else if (Rational(vc) > c_prime * kk)
      w.promise = Promise::no;
    else
      w.promise = Promise::violated;
  } else {
    w.promise = Promise::unknown;
  }
  w.unspecified = w.promise == Promise::violated || w.promise == Promise::unknown;
  return w;
}

PartialDecider exact_partial_decider() {
  return [](const Graph& g, std::size_t k, const Rational& alpha, const Rational&) {
    return min_partial_vertex_cover_exact(g, alpha).size() <= k;
  };
}

}  // namespace dtlab
