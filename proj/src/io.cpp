#include "dtlab/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace dtlab {

namespace {

std::string trim_left(const std::string& s) {
  auto i = s.find_first_not_of(" \t\r\n");
  return i == std::string::npos ? std::string() : s.substr(i);
}

// Lines with comments ('#') and blank lines removed.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const std::string body = trim_left(text);
  if (!body.empty() && body.front() == '{') return graph_from_json(Json::parse(body));
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty graph file");
  std::istringstream head(lines[0]);
  long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("graph header must be 'n m'");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw std::invalid_argument("graph header announces " + std::to_string(m) + " edges, found " +
                                std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: '" + lines[i] + "'");
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

Json tree_to_json(const DecisionTree& t) {
  if (t.is_leaf()) return {{"leaf", t.label() ? 1 : 0}};
  return {{"var", t.var()}, {"zero", tree_to_json(t.zero())}, {"one", tree_to_json(t.one())}};
}

DecisionTree tree_from_json(const Json& j) {
  if (j.contains("leaf")) {
    const auto& v = j.at("leaf");
    return DecisionTree::leaf(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
  }
  return DecisionTree::node(j.at("var").get<int>(), tree_from_json(j.at("zero")), tree_from_json(j.at("one")));
}

namespace {

const char* role_colour(NodeRole r) {
  switch (r) {
    case NodeRole::spine: return "#4c72b0";
    case NodeRole::dup: return "#2a9d8f";
    case NodeRole::neighbor: return "#8e5ea2";
    case NodeRole::rest: return "#d1495b";
    case NodeRole::padding: return "#aaaaaa";
    case NodeRole::plain: break;
  }
  return "#ffffff";
}

}  // namespace

std::string tree_to_dot(const DecisionTree& t, const std::optional<GadgetIndex>& layout) {
  std::ostringstream os;
  os << "digraph tree {\n  node [fontname=\"Helvetica\"];\n";
  int next = 0;
  std::function<int(const DecisionTree&)> emit = [&](const DecisionTree& s) {
    const int id = next++;
    if (s.is_leaf()) {
      os << "  n" << id << " [shape=box, label=\"" << (s.label() ? 1 : 0) << "\"];\n";
      return id;
    }
    std::string label = "x" + std::to_string(s.var());
    if (layout && static_cast<std::size_t>(s.var()) <= layout->N()) {
      auto [v, j] = layout->locate(s.var());
      label = "v" + std::to_string(v) + "^(" + std::to_string(j) + ")";
    }
    os << "  n" << id << " [shape=ellipse, style=filled, fillcolor=\"" << role_colour(s.role()) << "\", label=\""
       << label << "\", tooltip=\"" << node_role_name(s.role()) << "\"];\n";
    const int z = emit(s.zero());
    const int o = emit(s.one());
    os << "  n" << id << " -> n" << z << " [label=\"0\"];\n";
    os << "  n" << id << " -> n" << o << " [label=\"1\"];\n";
    return id;
  };
  emit(t);
  os << "}\n";
  return os.str();
}

namespace {

struct PointLine {
  BitString x;
  bool label;
  PointRole role;
  std::optional<Rational> mass;
};

std::pair<std::size_t, std::vector<PointLine>> parse_points(const std::string& text, bool with_mass) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty point file");
  std::istringstream head(lines[0]);
  long n = -1, count = -1;
  if (!(head >> n >> count) || n < 0 || count < 0) throw std::invalid_argument("point file header must be 'N count'");
  if (static_cast<long>(lines.size()) - 1 != count) throw std::invalid_argument("point count does not match header");
  std::vector<PointLine> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string bits, tag, mass;
    int label = -1;
    if (!(ls >> bits >> label >> tag) || (label != 0 && label != 1))
      throw std::invalid_argument("bad point line: '" + lines[i] + "'");
    PointLine p{BitString::parse(bits), label == 1, parse_role(tag), std::nullopt};
    if (p.x.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("point length differs from N");
    if (with_mass) {
      if (!(ls >> mass)) throw std::invalid_argument("missing mass on line: '" + lines[i] + "'");
      p.mass = parse_rational(mass);
    }
    out.push_back(std::move(p));
  }
  return {static_cast<std::size_t>(n), std::move(out)};
}

}  // namespace

LabeledPointSet parse_point_set(const std::string& text) {
  auto [n, pts] = parse_points(text, false);
  LabeledPointSet d(n);
  for (const auto& p : pts)
    if (!d.add(p.x, p.label, p.role)) throw std::invalid_argument("duplicate point " + p.x.str());
  return d;
}

std::string format_point_set(const LabeledPointSet& d) {
  std::ostringstream os;
  os << d.arity() << ' ' << d.size() << '\n';
  for (const auto& p : d.points()) os << p.x.str() << ' ' << p.label << ' ' << role_name(p.role) << '\n';
  return os.str();
}

Distribution parse_distribution(const std::string& text) {
  auto [n, pts] = parse_points(text, true);
  Distribution d(n);
  for (const auto& p : pts) d.add(p.x, p.label, p.role, *p.mass);
  d.validate();
  return d;
}

std::string format_distribution(const Distribution& d) {
  std::ostringstream os;
  os << d.arity() << ' ' << d.size() << '\n';
  for (const auto& p : d.points())
    os << p.x.str() << ' ' << p.label << ' ' << role_name(p.role) << ' ' << to_string(p.mass) << '\n';
  return os.str();
}

Json rational_to_json(const Rational& r) { return to_string(r); }

std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

Json vertex_set_to_json(const VertexSet& s) { return Json(std::vector<int>(s.begin(), s.end())); }

Json to_json(const ConstructionReport& r) {
  return {{"size", r.size}, {"bound", r.claimed_bound}, {"cover", vertex_set_to_json(r.cover_used)},
          {"tree", tree_to_json(r.tree)}};
}

Json to_json(const MinimizeResult& r) {
  return {{"size", r.size}, {"visited_states", r.visited_states}, {"tree", tree_to_json(r.tree)}};
}

Json to_json(const ParetoFront& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries)
    entries.push_back({{"size", e.size}, {"error", rational_to_json(e.error)}, {"tree", tree_to_json(e.tree)}});
  return {{"front", entries}, {"visited_states", f.visited_states}};
}

Json to_json(const ReductionParams& p) {
  Json checks = Json::array();
  for (const auto& c : check_params(p)) checks.push_back({{"inequality", c.name}, {"holds", c.holds}});
  return {{"regime", std::string(regime_name(p.regime))},
          {"test_mode", p.test_mode},
          {"n", p.n},
          {"m", p.m},
          {"d", p.d},
          {"delta_prime", rational_to_json(p.delta_prime)},
          {"delta", rational_to_json(p.delta)},
          {"alpha", rational_to_json(p.alpha)},
          {"lambda", rational_to_json(p.lambda)},
          {"ell", p.ell},
          {"epsilon", rational_to_json(p.epsilon)},
          {"N", p.N},
          {"support_size", p.support_size},
          {"checks", checks}};
}

Json to_json(const DeciderReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs)
    runs.push_back({{"finished", run.finished},
                    {"timed_out", run.timed_out},
                    {"error", run.error},
                    {"size", run.size},
                    {"error_rate", rational_to_json(run.error_rate)},
                    {"accepted", run.accepted},
                    {"membership_queries", run.queries},
                    {"samples", run.samples},
                    {"seconds", run.seconds},
                    {"distance_seconds", run.distance_seconds}});
  return {{"verdict", r.yes ? "Yes" : "No"}, {"k", r.k},         {"threshold", r.threshold},
          {"epsilon", rational_to_json(r.epsilon)}, {"N", r.N}, {"flagged", r.flagged},
          {"runs", runs}};
}

Json to_json(const DtminReport& r) {
  return {{"ell", r.ell},
          {"start_size", r.start_size},
          {"minimized_size", r.minimized_size},
          {"cover", vertex_set_to_json(r.cover)},
          {"k_prime", r.cover.size()},
          {"vc", r.vc},
          {"equivalent", r.equivalent},
          {"size_chain_holds", r.size_chain_holds},
          {"approximation_holds", r.approximation_holds}};
}

Json to_json(const CoresetClaimsReport& r) {
  return {{"ell", r.ell},
          {"points", r.points},
          {"vc", r.vc},
          {"min_certificate", r.min_certificate},
          {"certificates_checked", r.certificates_checked},
          {"orderings_checked", r.orderings_checked},
          {"certificates_are_covers", r.certificates_are_covers},
          {"relevant_bounds_hold", r.relevant_bounds_hold},
          {"dtsize", r.dtsize},
          {"size_bound", r.size_bound},
          {"size_bound_holds", r.size_bound_holds},
          {"failures", r.failures}};
}

Json to_json(const ConstantErrorReport& r) {
  return {{"alpha", rational_to_json(r.alpha)},         {"threshold", rational_to_json(r.threshold)},
          {"bound", rational_to_json(r.bound)},         {"vc_alpha", r.vc_alpha},
          {"min_size", r.min_size},                     {"min_size_error", rational_to_json(r.min_size_error)},
          {"front_points", r.front_points},             {"holds", r.holds}};
}

Json to_json(const DistillationWitness& w) {
  Json order = Json::array();
  for (const auto& lit : w.order) order.push_back({lit.var, lit.value ? 1 : 0});
  Json cert = Json::object();
  for (const auto& [c, b] : w.certificate) cert[std::to_string(c)] = b ? 1 : 0;
  return {{"x", w.x.str()}, {"s1", w.s1},       {"s2", w.s2},         {"certificate", cert},
          {"order", order}, {"dtsize", w.dtsize}, {"holds", w.holds}};
}

std::string read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace dtlab
