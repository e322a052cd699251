#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dtlab/io.hpp"

using namespace dtlab;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double time_budget = 60;
  std::string format = "text";
  int test_mode_ell = 0;  // 0: not set
};

Globals G;
int exit_code = 0;

void emit(const Json& j, const std::string& text) {
  if (G.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

VertexSet parse_vertex_list(const std::string& s) {
  VertexSet out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::optional<int> test_ell() {
  if (G.test_mode_ell > 0) return G.test_mode_ell;
  return std::nullopt;
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtlab: decision-tree hardness reduction lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", G.seed, "64-bit seed for every stochastic component");
  app.add_option("--time-budget", G.time_budget, "learner time budget in seconds");
  app.add_option("--format", G.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--test-mode-ell", G.test_mode_ell, "run reductions at this small ell instead of the prescribed one");

  std::string graph_path, tree_path, points_path, cover_str, regime_str = "inverse-poly", learner_name = "occam_ideal",
                                                             minimizer_name = "exact", x_str, edge_str;
  int n = 0, d = 3, ell = 0, k = 0;
  std::size_t cap = 0;
  std::string alpha_str = "1/4", delta_str = "0", delta_prime_str = "1";
  bool dist_flag = false, dot_flag = false;

  // graph
  auto* graph = app.add_subcommand("graph", "graph utilities");
  graph->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "random bounded-degree graph");
  gen->add_option("-n,--n", n, "vertices")->required();
  gen->add_option("-d,--degree", d, "degree bound");
  gen->callback([&] {
    auto g = random_bounded_degree_graph(n, d, G.seed);
    emit(graph_to_json(g), format_graph(g));
  });
  auto* vc = graph->add_subcommand("vc", "exact minimum vertex cover");
  vc->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
  vc->callback([&] {
    auto g = load_graph(graph_path);
    auto c = min_vertex_cover_exact(g);
    emit({{"size", c.size()}, {"cover", vertex_set_to_json(c)}},
         "VC = " + std::to_string(c.size()) + " " + format_vertex_set(c) + "\n");
  });
  auto* pvc = graph->add_subcommand("pvc", "exact minimum alpha-partial vertex cover");
  pvc->add_option("graph", graph_path, "graph file")->required();
  pvc->add_option("--alpha", alpha_str, "uncovered fraction allowed, e.g. 1/5");
  pvc->callback([&] {
    auto g = load_graph(graph_path);
    const Rational alpha = parse_rational(alpha_str);
    auto c = min_partial_vertex_cover_exact(g, alpha);
    emit({{"alpha", rational_to_json(alpha)},
          {"size", c.size()},
          {"cover", vertex_set_to_json(c)},
          {"covered", covered_edge_count(g, c)}},
         "VC_" + to_string(alpha) + " = " + std::to_string(c.size()) + " " + format_vertex_set(c) + "\n");
  });

  // gadget
  auto* gadget = app.add_subcommand("gadget", "IsEdge gadget");
  gadget->require_subcommand(1);
  auto* geval = gadget->add_subcommand("eval", "evaluate ell-IsEdge");
  geval->add_option("graph", graph_path)->required();
  geval->add_option("--ell", ell);
  geval->add_option("-x,--input", x_str, "bits, '|' between blocks allowed")->required();
  geval->callback([&] {
    auto g = load_graph(graph_path);
    const bool v = ell_isedge_eval(g, ell, BitString::parse(x_str));
    emit({{"value", v}}, std::string(v ? "1" : "0") + "\n");
  });
  auto* gind = gadget->add_subcommand("ind", "amplified edge indicator");
  gind->add_option("graph", graph_path)->required();
  gind->add_option("--ell", ell);
  gind->add_option("--edge", edge_str, "edge as u,v")->required();
  gind->callback([&] {
    auto g = load_graph(graph_path);
    auto e = parse_vertex_list(edge_str);
    if (e.size() != 2) throw std::invalid_argument("--edge needs two distinct vertices");
    auto x = ell_ind(g, ell, Edge(*e.begin(), *e.rbegin()));
    emit({{"bits", x.str()}}, format_gadget_input(x, GadgetIndex(g.n(), ell)) + "\n");
  });

  // build
  auto* build = app.add_subcommand("build", "constructions");
  build->require_subcommand(1);
  auto* btree = build->add_subcommand("tree", "ell-IsEdge tree from a vertex cover");
  btree->add_option("graph", graph_path)->required();
  btree->add_option("--ell", ell);
  btree->add_option("--cover", cover_str, "comma-separated cover; default: an exact minimum cover");
  btree->add_flag("--dot", dot_flag, "print Graphviz instead");
  btree->callback([&] {
    auto g = load_graph(graph_path);
    const VertexSet c = cover_str.empty() ? min_vertex_cover_exact(g) : parse_vertex_list(cover_str);
    auto r = build_ell_isedge_tree(g, c, ell);
    if (dot_flag) {
      std::cout << tree_to_dot(r.tree, GadgetIndex(g.n(), ell));
      return;
    }
    emit(to_json(r), "size " + std::to_string(r.size) + " (bound " + std::to_string(r.claimed_bound) +
                         ") from cover " + format_vertex_set(c) + "\n");
  });

  // extract
  auto* extract = app.add_subcommand("extract", "read covers back out of trees");
  extract->require_subcommand(1);
  auto* ecover = extract->add_subcommand("cover", "cover from a tree computing ell-IsEdge on its coreset");
  ecover->add_option("graph", graph_path)->required();
  ecover->add_option("--tree", tree_path, "tree JSON")->required();
  ecover->add_option("--ell", ell);
  ecover->callback([&] {
    auto g = load_graph(graph_path);
    auto t = tree_from_json(Json::parse(read_file(tree_path)));
    auto c = extract_cover_from_ell_tree(t, g, ell);
    const bool ineq = static_cast<std::size_t>(ell + 1) * (c.size() + g.m()) <= t.size();
    emit({{"cover", vertex_set_to_json(c)}, {"tree_size", t.size()}, {"inequality_holds", ineq}},
         "cover " + format_vertex_set(c) + ", tree size " + std::to_string(t.size()) + "\n");
  });

  // coreset
  auto* coreset = app.add_subcommand("coreset", "coresets and distributions");
  coreset->require_subcommand(1);
  auto* cbuild = coreset->add_subcommand("build", "D_G (ell=0), ell-D_G, or the hard distribution");
  cbuild->add_option("graph", graph_path)->required();
  cbuild->add_option("--ell", ell);
  cbuild->add_flag("--dist", dist_flag, "emit the weighted hard distribution");
  cbuild->callback([&] {
    auto g = load_graph(graph_path);
    if (dist_flag) {
      std::cout << format_distribution(hard_distribution(g, ell));
      return;
    }
    std::cout << format_point_set(ell == 0 ? build_D_G(g) : build_ell_D_G(g, ell));
  });

  // minimize
  auto* minimize = app.add_subcommand("minimize", "exact minimizers");
  minimize->require_subcommand(1);
  auto* mexact = minimize->add_subcommand("exact", "dtsize of ell-IsEdge over the whole cube");
  mexact->add_option("graph", graph_path)->required();
  mexact->add_option("--ell", ell);
  mexact->callback([&] {
    auto g = load_graph(graph_path);
    const GadgetIndex idx(g.n(), ell);
    std::vector<std::vector<Coord>> orbits;
    for (Vertex v = 1; v <= g.n(); ++v) orbits.push_back(dup_vars(v, idx));
    auto r = dtsize_exact_symmetric(ell_isedge_function(g, ell), orbits);
    emit(to_json(r), "dtsize " + std::to_string(r.size) + " (" + std::to_string(r.visited_states) + " states)\n");
  });
  auto* mset = minimize->add_subcommand("set", "smallest tree consistent with a point set");
  mset->add_option("points", points_path)->required();
  mset->callback([&] {
    auto r = dtsize_over_set(parse_point_set(read_file(points_path)));
    emit(to_json(r), "size " + std::to_string(r.size) + "\n");
  });
  auto* mfront = minimize->add_subcommand("front", "size/error Pareto front over a distribution");
  mfront->add_option("dist", points_path)->required();
  mfront->add_option("--cap", cap, "largest size to explore; default: the exact fit size");
  mfront->callback([&] {
    auto dist = parse_distribution(read_file(points_path));
    const std::size_t c = cap ? cap : dtsize_over_set(dist.support()).size;
    auto f = min_error_front(dist, c);
    std::string text;
    for (const auto& e : f.entries) text += std::to_string(e.size) + " " + to_string(e.error) + "\n";
    emit(to_json(f), text);
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "end-to-end reductions");
  reduce->require_subcommand(1);
  auto* rdtmin = reduce->add_subcommand("dtmin", "vertex cover from a DT-Min oracle");
  rdtmin->add_option("graph", graph_path)->required();
  rdtmin->add_option("--minimizer", minimizer_name)->check(CLI::IsMember({"identity", "exact", "padded"}));
  rdtmin->add_option("--delta", delta_str, "approximation slack");
  rdtmin->callback([&] {
    auto g = load_graph(graph_path);
    const Rational delta = parse_rational(delta_str);
    Minimizer mz = minimizer_name == "identity" ? identity_minimizer()
                   : minimizer_name == "exact"  ? exact_minimizer()
                                                : padded_minimizer(delta);
    auto r = dtmin_reduction(g, mz, delta, test_ell(), G.seed);
    emit(to_json(r), "ell " + std::to_string(r.ell) + ": s* = " + std::to_string(r.start_size) +
                         ", s' = " + std::to_string(r.minimized_size) + ", cover " + format_vertex_set(r.cover) +
                         " (VC = " + std::to_string(r.vc) + ")\n");
  });
  auto* rlearn = reduce->add_subcommand("dtlearn", "decide VC <= k through a DT learner");
  rlearn->add_option("graph", graph_path)->required();
  rlearn->add_option("-k", k, "cover budget")->required();
  rlearn->add_option("--learner", learner_name)
      ->check(CLI::IsMember({"occam_ideal", "greedy_topdown", "constant_zero"}));
  rlearn->add_option("--regime", regime_str)->check(CLI::IsMember({"inverse-poly", "constant-error"}));
  rlearn->add_option("--alpha", alpha_str);
  rlearn->add_option("--delta-prime", delta_prime_str);
  rlearn->add_option("-d,--degree", d);
  rlearn->callback([&] {
    auto g = load_graph(graph_path);
    const Regime regime = parse_regime(regime_str);
    const Rational alpha = parse_rational(alpha_str);
    ReductionParams p;
    if (auto te = test_ell())
      p = params_test_mode(g.n(), g.m(), regime, *te, alpha);
    else if (regime == Regime::inverse_poly)
      p = params_inverse_poly(g.n(), g.m(), d, parse_rational(delta_prime_str));
    else
      p = params_constant_error(g.n(), g.m(), d, parse_rational(delta_prime_str), alpha);
    DeciderOptions opts;
    opts.seed = G.seed;
    opts.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(G.time_budget * 1000));
    auto r = dtlearn_decider(g, static_cast<std::size_t>(k), builtin_learners().at(learner_name), p, opts);
    Json j = to_json(r);
    j["params"] = to_json(p);
    j["seed"] = G.seed;
    std::string text = yes_no(r.yes) + (r.flagged ? " (flagged)" : "") + "\n";
    for (const auto& run : r.runs)
      text += "  run: size " + std::to_string(run.size) + " / " + std::to_string(r.threshold) + ", error " +
              to_string(run.error_rate) + " / " + to_string(r.epsilon) + (run.error.empty() ? "" : ", " + run.error) +
              "\n";
    emit(j, text);
    exit_code = r.yes ? 0 : 1;
  });

  // report
  auto* report = app.add_subcommand("report", "coreset and error-bound checks for one graph");
  report->add_option("graph", graph_path)->required();
  report->add_option("--ell", ell);
  report->add_option("--alpha", alpha_str);
  report->callback([&] {
    auto g = load_graph(graph_path);
    auto claims = verify_coreset_claims(g, ell);
    Json j{{"graph", graph_to_json(g)}, {"coreset", to_json(claims)}};
    std::string text = "coreset claims (ell=" + std::to_string(ell) + "): " + (claims.ok() ? "hold" : "FAIL") +
                       ", dtsize " + std::to_string(claims.dtsize) + " >= " + std::to_string(claims.size_bound) + "\n";
    if (ell >= 1 && g.m() > 0) {
      auto ce = constant_error_lower_bound_check(g, ell, parse_rational(alpha_str));
      j["constant_error"] = to_json(ce);
      text += "constant-error bound: min size " + std::to_string(ce.min_size) + " >= " + to_string(ce.bound) + ": " +
              (ce.holds ? "holds" : "FAIL") + "\n";
      if (!ce.holds) exit_code = 1;
    }
    if (!claims.ok()) exit_code = 1;
    emit(j, text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
