#include "dtlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace dtlab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n)
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} has an endpoint outside [1," + std::to_string(n) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return -1;
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex x) const {
  if (!contains_vertex(x)) throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  return adj_[x];
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex x = 1; x <= n_; ++x) best = std::max(best, degree(x));
  return best;
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex x : s)
    if (!g.contains_vertex(x))
      throw std::out_of_range("vertex " + std::to_string(x) + " outside [1," + std::to_string(g.n()) + "]");
}

void check_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1)
    throw std::invalid_argument("alpha must lie in [0,1), got " + to_string(alpha));
}

void check_exact_guard(const Graph& g) {
  if (g.n() > kExactVertexLimit)
    throw GuardError("exact vertex cover limited to n <= " + std::to_string(kExactVertexLimit));
}

using Mask = std::uint32_t;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

struct CoverSearch {
  std::vector<Mask> adj;  // 1-based
  int n = 0;
  Mask best = 0;
  int best_size = 0;

  int matching_bound(Mask alive) const {
    int size = 0;
    Mask free = alive;
    for (Vertex v = 1; v <= n; ++v) {
      if (!(free & bit(v))) continue;
      Mask nb = adj[v] & free & ~bit(v);
      if (!nb) continue;
      Vertex w = std::countr_zero(nb) + 1;
      free &= ~(bit(v) | bit(w));
      ++size;
    }
    return size;
  }

  void run(Mask alive, Mask cover, int size) {
    if (size + matching_bound(alive) >= best_size) return;
    Vertex pick = 0;
    int pick_deg = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (!(alive & bit(v))) continue;
      int d = std::popcount(adj[v] & alive);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick_deg == 0) {
      best = cover;
      best_size = size;
      return;
    }
    run(alive & ~bit(pick), cover | bit(pick), size + 1);
    Mask nb = adj[pick] & alive;
    run(alive & ~(nb | bit(pick)), cover | nb, size + std::popcount(nb));
  }
};

VertexSet from_mask(Mask m) {
  VertexSet out;
  while (m) {
    out.insert(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

}  // namespace

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  return covered_edge_count(g, cover) == g.m();
}

std::size_t covered_edge_count(const Graph& g, const VertexSet& cover) {
  check_members(g, cover);
  std::size_t count = 0;
  for (const auto& e : g.edges())
    if (cover.count(e.u) || cover.count(e.v)) ++count;
  return count;
}

EdgeSet uncovered_edges(const Graph& g, const VertexSet& cover) {
  check_members(g, cover);
  EdgeSet out;
  for (const auto& e : g.edges())
    if (!cover.count(e.u) && !cover.count(e.v)) out.insert(e);
  return out;
}

std::size_t partial_cover_threshold(std::size_t m, const Rational& alpha) {
  check_alpha(alpha);
  Rational need = (Rational(1) - alpha) * static_cast<std::int64_t>(m);
  auto num = need.numerator();
  auto den = need.denominator();
  return static_cast<std::size_t>((num + den - 1) / den);
}

bool is_partial_vertex_cover(const Graph& g, const VertexSet& cover, const Rational& alpha) {
  return covered_edge_count(g, cover) >= partial_cover_threshold(g.m(), alpha);
}

VertexSet min_vertex_cover_exact(const Graph& g) {
  check_exact_guard(g);
  CoverSearch s;
  s.n = g.n();
  s.adj.assign(g.n() + 1, 0);
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= bit(e.v);
    s.adj[e.v] |= bit(e.u);
  }
  VertexSet greedy = greedy_vertex_cover(g);
  for (Vertex v : greedy) s.best |= bit(v);
  s.best_size = static_cast<int>(greedy.size());
  Mask all = g.n() == 32 ? ~Mask{0} : ((Mask{1} << g.n()) - 1);
  // Strictly-better search: start one above the greedy size so the greedy
  // cover is only kept when nothing smaller exists.
  Mask fallback = s.best;
  s.best_size += 1;
  s.best = 0;
  s.run(all, 0, 0);
  if (s.best_size == static_cast<int>(greedy.size()) + 1) s.best = fallback;
  return from_mask(s.best);
}

VertexSet greedy_vertex_cover(const Graph& g) {
  VertexSet cover;
  for (const auto& e : g.edges()) {
    if (cover.count(e.u) || cover.count(e.v)) continue;
    cover.insert(e.u);
    cover.insert(e.v);
  }
  return cover;
}

VertexSet min_partial_vertex_cover_exact(const Graph& g, const Rational& alpha) {
  check_alpha(alpha);
  check_exact_guard(g);
  const std::size_t need = partial_cover_threshold(g.m(), alpha);
  if (need == 0) return {};
  const int n = g.n();
  const std::size_t words = (g.m() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> incident(n + 1, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto& e = g.edges()[i];
    incident[e.u][i >> 6] |= std::uint64_t{1} << (i & 63);
    incident[e.v][i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  const int max_deg = g.max_degree();

  std::vector<Vertex> chosen;
  std::vector<std::uint64_t> covered(words, 0);
  auto count = [&](const std::vector<std::uint64_t>& w) {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  };

  // Depth-first over ascending combinations of a fixed size: the first hit is
  // the lexicographically smallest cover of that size.
  std::function<bool(Vertex, int)> pick = [&](Vertex from, int left) -> bool {
    std::size_t have = count(covered);
    if (have >= need) return true;
    if (left == 0) return false;
    if (have + static_cast<std::size_t>(left) * static_cast<std::size_t>(max_deg) < need) return false;
    for (Vertex v = from; v <= n - left + 1; ++v) {
      auto saved = covered;
      for (std::size_t w = 0; w < words; ++w) covered[w] |= incident[v][w];
      chosen.push_back(v);
      if (pick(v + 1, left - 1)) return true;
      chosen.pop_back();
      covered = std::move(saved);
    }
    return false;
  };

  for (int k = 1; k <= n; ++k) {
    chosen.clear();
    std::fill(covered.begin(), covered.end(), 0);
    if (pick(1, k)) return VertexSet(chosen.begin(), chosen.end());
  }
  throw std::logic_error("unreachable: the full vertex set covers every edge");
}

VertexSet upgrade_partial_cover(const Graph& g, const VertexSet& cover, const Rational& alpha) {
  if (!is_partial_vertex_cover(g, cover, alpha))
    throw PreconditionError("input is not an alpha-partial vertex cover for alpha = " + to_string(alpha));
  VertexSet out = cover;
  for (const auto& e : uncovered_edges(g, cover)) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

EdgeSet restricted_edge_neighborhood(const Graph& g, Vertex center, std::span<const Vertex> excluded) {
  EdgeSet out;
  for (Vertex x : excluded)
    if (!g.contains_vertex(x)) throw std::out_of_range("excluded vertex out of range");
  for (Vertex w : g.neighbors(center)) {
    bool blocked = false;
    for (Vertex x : excluded)
      if (x == center || x == w) blocked = true;
    if (!blocked) out.insert(Edge(center, w));
  }
  return out;
}

VertexSet restricted_vertex_neighborhood(const Graph& g, Vertex center,
                                         std::span<const Vertex> excluded) {
  VertexSet out;
  for (const auto& e : restricted_edge_neighborhood(g, center, excluded)) out.insert(e.other(center));
  return out;
}

EdgePartition check_edge_partition(const Graph& g, std::span<const Vertex> order) {
  EdgePartition result;
  std::size_t total = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    result.parts.push_back(restricted_edge_neighborhood(g, order[k], order.subspan(0, k)));
    total += result.parts.back().size();
  }
  result.covers = total == g.m();
  return result;
}

Graph random_bounded_degree_graph(int n, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
  std::vector<int> deg(n + 1, 0);
  std::vector<Edge> chosen;
  for (const auto& e : pairs) {
    if ((rng() & 1u) == 0) continue;
    if (deg[e.u] >= d || deg[e.v] >= d) continue;
    ++deg[e.u];
    ++deg[e.v];
    chosen.push_back(e);
  }
  return Graph(n, std::move(chosen));
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

Graph canonical_form(const Graph& g) {
  if (g.n() > 8) throw GuardError("canonical_form limited to n <= 8");
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> relabeled;
    for (const auto& e : g.edges()) relabeled.emplace_back(perm[e.u - 1], perm[e.v - 1]);
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Graph(g.n(), best);
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
  if (n > 6) throw GuardError("graph enumeration limited to n <= 6");
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  std::set<std::vector<Edge>> seen;
  std::vector<Graph> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((pick >> i) & 1u) edges.push_back(pairs[i]);
    Graph canon = canonical_form(Graph(n, edges));
    if (seen.insert(canon.edges()).second) out.push_back(std::move(canon));
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.m() < b.m(); });
  return out;
}

}  // namespace dtlab
