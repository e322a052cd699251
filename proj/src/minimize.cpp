#include "dtlab/minimize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace dtlab {

// ---------------------------------------------------------------------------
// Full cube, 3^N restrictions. Digit of coordinate c (weight 3^(c-1)):
// 0 = fixed to 0, 1 = fixed to 1, 2 = free.

namespace {

constexpr std::uint8_t kMixed = 2;

}  // namespace

MinimizeResult dtsize_exact(const BoolFunction& f) {
  const std::size_t n = f.arity();
  if (n > kExactArityLimit)
    throw GuardError("dtsize_exact limited to arity <= " + std::to_string(kExactArityLimit));
  const auto table = f.truth_table();
  std::vector<std::size_t> pow3(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  const std::size_t total = pow3[n];

  std::vector<std::uint8_t> value(total);
  std::vector<std::uint16_t> size(total);
  std::vector<std::uint8_t> digit(n, 0);

  for (std::size_t idx = 0; idx < total; ++idx) {
    if (idx) {
      std::size_t i = 0;
      while (digit[i] == 2) digit[i++] = 0;
      ++digit[i];
    }
    std::size_t first_free = n;
    std::uint64_t point = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (digit[i] == 2) {
        if (first_free == n) first_free = i;
      } else if (digit[i] == 1) {
        point |= std::uint64_t{1} << i;
      }
    }
    if (first_free == n) {
      value[idx] = table[point];
      size[idx] = 0;
      continue;
    }
    const std::size_t p = pow3[first_free];
    const auto v0 = value[idx - 2 * p], v1 = value[idx - p];
    value[idx] = (v0 == v1 && v0 != kMixed) ? v0 : kMixed;
    if (value[idx] != kMixed) {
      size[idx] = 0;
      continue;
    }
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = first_free; i < n; ++i) {
      if (digit[i] != 2) continue;
      const std::size_t q = pow3[i];
      best = std::min<std::uint32_t>(best, 1u + size[idx - 2 * q] + size[idx - q]);
    }
    size[idx] = static_cast<std::uint16_t>(best);
  }

  // Reconstruction from the all-free state.
  std::function<DecisionTree(std::size_t)> build = [&](std::size_t idx) -> DecisionTree {
    if (value[idx] != kMixed) return DecisionTree::leaf(value[idx] == 1);
    for (std::size_t i = 0; i < n; ++i) {
      if ((idx / pow3[i]) % 3 != 2) continue;
      const std::size_t q = pow3[i];
      if (1u + size[idx - 2 * q] + size[idx - q] == size[idx])
        return DecisionTree::node(static_cast<Coord>(i + 1), build(idx - 2 * q), build(idx - q));
    }
    throw std::logic_error("dtsize_exact: reconstruction failed");
  };
  MinimizeResult out;
  out.tree = build(total - 1);
  out.size = size[total - 1];
  out.visited_states = total;
  return out;
}

// ---------------------------------------------------------------------------
// Orbit-reduced DP. Within an orbit of r coordinates only the pair
// (#fixed to 0, #fixed to 1) matters; local states are ordered by a+b so that
// children always have a larger global index.

MinimizeResult dtsize_exact_symmetric(const BoolFunction& f, const std::vector<std::vector<Coord>>& orbits) {
  const std::size_t n = f.arity();
  std::vector<int> owner(n + 1, -1);
  std::vector<std::vector<Coord>> orbit;
  for (const auto& o : orbits) {
    if (o.empty()) continue;
    std::vector<Coord> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    for (Coord c : sorted) {
      if (c < 1 || static_cast<std::size_t>(c) > n) throw std::out_of_range("orbit coordinate out of range");
      if (owner[c] != -1) throw std::invalid_argument("orbits overlap at coordinate " + std::to_string(c));
      owner[c] = 0;
    }
    orbit.push_back(std::move(sorted));
  }
  for (Coord c = 1; static_cast<std::size_t>(c) <= n; ++c)
    if (owner[c] == -1) orbit.push_back({c});
  std::sort(orbit.begin(), orbit.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const std::size_t k = orbit.size();
  struct Local {
    int a, b;
  };
  std::vector<std::vector<Local>> locals(k);
  std::vector<std::vector<std::vector<int>>> local_index(k);
  std::vector<std::size_t> stride(k);
  std::size_t total = 1;
  for (std::size_t o = 0; o < k; ++o) {
    const int r = static_cast<int>(orbit[o].size());
    local_index[o].assign(r + 1, std::vector<int>(r + 1, -1));
    for (int t = 0; t <= r; ++t)
      for (int a = 0; a <= t; ++a) {
        local_index[o][a][t - a] = static_cast<int>(locals[o].size());
        locals[o].push_back({a, t - a});
      }
    stride[o] = total;
    if (total > kSymmetricStateLimit / locals[o].size())
      throw GuardError("symmetric DP would exceed " + std::to_string(kSymmetricStateLimit) + " states");
    total *= locals[o].size();
  }

  std::vector<std::uint8_t> value(total);
  std::vector<std::uint16_t> size(total);
  std::vector<int> loc(k);

  auto child = [&](std::size_t idx, std::size_t o, bool one) {
    const Local cur = locals[o][loc[o]];
    const int next = one ? local_index[o][cur.a][cur.b + 1] : local_index[o][cur.a + 1][cur.b];
    return idx + static_cast<std::size_t>(next - loc[o]) * stride[o];
  };

  for (std::size_t idx = total; idx-- > 0;) {
    std::size_t rem = idx;
    for (std::size_t o = 0; o < k; ++o) {
      loc[o] = static_cast<int>(rem % locals[o].size());
      rem /= locals[o].size();
    }
    std::size_t first_open = k;
    for (std::size_t o = 0; o < k; ++o) {
      const Local l = locals[o][loc[o]];
      if (l.a + l.b < static_cast<int>(orbit[o].size())) {
        first_open = o;
        break;
      }
    }
    if (first_open == k) {
      BitString x(n);
      for (std::size_t o = 0; o < k; ++o) {
        const Local l = locals[o][loc[o]];
        for (int t = l.a; t < l.a + l.b; ++t) x.set(orbit[o][t]);
      }
      value[idx] = f(x) ? 1 : 0;
      size[idx] = 0;
      continue;
    }
    const auto v0 = value[child(idx, first_open, false)];
    const auto v1 = value[child(idx, first_open, true)];
    value[idx] = (v0 == v1 && v0 != kMixed) ? v0 : kMixed;
    if (value[idx] != kMixed) {
      size[idx] = 0;
      continue;
    }
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t o = first_open; o < k; ++o) {
      const Local l = locals[o][loc[o]];
      if (l.a + l.b == static_cast<int>(orbit[o].size())) continue;
      best = std::min<std::uint32_t>(best, 1u + size[child(idx, o, false)] + size[child(idx, o, true)]);
    }
    if (best > std::numeric_limits<std::uint16_t>::max()) throw GuardError("symmetric DP size overflow");
    size[idx] = static_cast<std::uint16_t>(best);
  }

  // The concrete tree always queries the smallest still-free coordinate of the
  // chosen orbit, so the fixed coordinates of an orbit are a prefix of it.
  std::function<DecisionTree(std::size_t)> build = [&](std::size_t idx) -> DecisionTree {
    if (value[idx] != kMixed) return DecisionTree::leaf(value[idx] == 1);
    std::size_t rem = idx;
    for (std::size_t o = 0; o < k; ++o) {
      loc[o] = static_cast<int>(rem % locals[o].size());
      rem /= locals[o].size();
    }
    for (std::size_t o = 0; o < k; ++o) {
      const Local l = locals[o][loc[o]];
      if (l.a + l.b == static_cast<int>(orbit[o].size())) continue;
      const std::size_t c0 = child(idx, o, false), c1 = child(idx, o, true);
      if (1u + size[c0] + size[c1] == size[idx]) {
        const Coord var = orbit[o][l.a + l.b];
        DecisionTree zero = build(c0);
        DecisionTree one = build(c1);
        return DecisionTree::node(var, zero, one);
      }
    }
    throw std::logic_error("dtsize_exact_symmetric: reconstruction failed");
  };

  MinimizeResult out;
  out.tree = build(0);
  out.size = size[0];
  out.visited_states = total;
  return out;
}

// ---------------------------------------------------------------------------
// Point-subset DPs.

namespace {

struct Mask {
  std::uint64_t w[2] = {0, 0};

  bool empty() const { return (w[0] | w[1]) == 0; }
  Mask operator&(const Mask& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Mask operator~() const { return {{~w[0], ~w[1]}}; }
  bool operator==(const Mask& o) const { return w[0] == o.w[0] && w[1] == o.w[1]; }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::uint64_t h = m.w[0] * 0x9e3779b97f4a7c15ull;
    h ^= (m.w[1] + 0x632be59bd9b4e019ull) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct SubsetSpace {
  std::size_t arity = 0;
  std::size_t count = 0;
  std::vector<Mask> ones;  // ones[c]: points with coordinate c set, 1-based
  Mask labels;             // points labeled 1
  Mask all;

  SubsetSpace(const std::vector<BitString>& pts, const std::vector<bool>& lab, std::size_t n) : arity(n) {
    count = pts.size();
    if (count > kPointSetLimit)
      throw GuardError("point-subset DP limited to " + std::to_string(kPointSetLimit) + " points");
    ones.assign(n + 1, Mask{});
    for (std::size_t i = 0; i < count; ++i) {
      all.set(i);
      if (lab[i]) labels.set(i);
      for (Coord c = 1; static_cast<std::size_t>(c) <= n; ++c)
        if (pts[i][c]) ones[c].set(i);
    }
  }

  // Returns false when c does not split s into two nonempty parts.
  bool split(const Mask& s, Coord c, Mask& s0, Mask& s1) const {
    s1 = s & ones[c];
    s0 = s & ~ones[c];
    return !s0.empty() && !s1.empty();
  }
};

struct SetSolver {
  const SubsetSpace& sp;
  std::unordered_map<Mask, std::uint32_t, MaskHash> memo;

  std::uint32_t cost(const Mask& s) {
    if ((s & sp.labels).empty() || (s & ~sp.labels).empty()) return 0;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    Mask s0, s1;
    for (Coord c = 1; static_cast<std::size_t>(c) <= sp.arity; ++c) {
      if (!sp.split(s, c, s0, s1)) continue;
      best = std::min(best, 1 + cost(s0) + cost(s1));
    }
    memo.emplace(s, best);
    return best;
  }

  DecisionTree build(const Mask& s) {
    if ((s & ~sp.labels).empty() && !s.empty()) return DecisionTree::leaf(true);
    if ((s & sp.labels).empty()) return DecisionTree::leaf(false);
    const std::uint32_t target = cost(s);
    Mask s0, s1;
    for (Coord c = 1; static_cast<std::size_t>(c) <= sp.arity; ++c) {
      if (!sp.split(s, c, s0, s1)) continue;
      if (1 + cost(s0) + cost(s1) == target) return DecisionTree::node(c, build(s0), build(s1));
    }
    throw std::logic_error("dtsize_over_set: reconstruction failed");
  }
};

}  // namespace

MinimizeResult dtsize_over_set(const LabeledPointSet& d) {
  std::vector<BitString> pts;
  std::vector<bool> lab;
  for (const auto& p : d.points()) {
    pts.push_back(p.x);
    lab.push_back(p.label);
  }
  SubsetSpace sp(pts, lab, d.arity());
  SetSolver solver{sp, {}};
  MinimizeResult out;
  out.size = solver.cost(sp.all);
  out.tree = solver.build(sp.all);
  out.visited_states = solver.memo.size();
  return out;
}

namespace {

// F[s] = least weighted error of a tree of size <= s on the subset; the vector
// stops at the first zero or at size_cap, and later entries equal the last.
struct FrontSolver {
  const SubsetSpace& sp;
  const std::vector<std::int64_t>& weight;
  std::size_t cap;
  std::unordered_map<Mask, std::vector<std::int64_t>, MaskHash> memo;

  std::pair<std::int64_t, std::int64_t> class_weights(const Mask& s) const {
    std::int64_t w0 = 0, w1 = 0;
    for (std::size_t i = 0; i < sp.count; ++i) {
      if (!s.test(i)) continue;
      (sp.labels.test(i) ? w1 : w0) += weight[i];
    }
    return {w0, w1};
  }

  static std::int64_t at(const std::vector<std::int64_t>& f, std::size_t s) {
    return s < f.size() ? f[s] : f.back();
  }

  const std::vector<std::int64_t>& front(const Mask& s) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    auto [w0, w1] = class_weights(s);
    std::vector<std::int64_t> f{std::min(w0, w1)};
    if (f[0] > 0 && cap > 0) {
      std::vector<std::pair<Mask, Mask>> splits;
      Mask s0, s1;
      for (Coord c = 1; static_cast<std::size_t>(c) <= sp.arity; ++c)
        if (sp.split(s, c, s0, s1)) splits.emplace_back(s0, s1);
      std::vector<const std::vector<std::int64_t>*> f0, f1;
      for (const auto& [a, b] : splits) {
        f0.push_back(&front(a));
        f1.push_back(&front(b));
      }
      for (std::size_t size = 1; size <= cap && f.back() > 0; ++size) {
        std::int64_t best = f.back();
        for (std::size_t j = 0; j < splits.size(); ++j)
          for (std::size_t s0sz = 0; s0sz < size; ++s0sz)
            best = std::min(best, at(*f0[j], s0sz) + at(*f1[j], size - 1 - s0sz));
        f.push_back(best);
      }
      while (f.size() > 1 && f[f.size() - 1] == f[f.size() - 2]) f.pop_back();
    }
    return memo.emplace(s, std::move(f)).first->second;
  }

  DecisionTree build(const Mask& s, std::size_t size) {
    const auto& f = front(s);
    const std::int64_t target = at(f, size);
    auto [w0, w1] = class_weights(s);
    if (std::min(w0, w1) == target) return DecisionTree::leaf(w1 > w0);
    Mask s0, s1;
    for (Coord c = 1; static_cast<std::size_t>(c) <= sp.arity; ++c) {
      if (!sp.split(s, c, s0, s1)) continue;
      const auto& f0 = front(s0);
      const auto& f1 = front(s1);
      for (std::size_t s0sz = 0; s0sz < size; ++s0sz)
        if (at(f0, s0sz) + at(f1, size - 1 - s0sz) == target)
          return DecisionTree::node(c, build(s0, s0sz), build(s1, size - 1 - s0sz));
    }
    throw std::logic_error("min_error_front: reconstruction failed");
  }
};

}  // namespace

const FrontEntry* ParetoFront::smallest_within(const Rational& budget) const {
  for (const auto& e : entries)
    if (e.error <= budget) return &e;
  return nullptr;
}

Rational ParetoFront::error_at(std::size_t s) const {
  if (entries.empty()) throw std::logic_error("empty front");
  Rational best = entries.front().error;
  for (const auto& e : entries)
    if (e.size <= s) best = e.error;
  return best;
}

ParetoFront min_error_front(const Distribution& dist, std::size_t size_cap) {
  dist.validate();
  std::int64_t denom = 1;
  for (const auto& p : dist.points()) {
    denom = std::lcm(denom, p.mass.denominator());
    if (denom > (std::int64_t{1} << 40)) throw GuardError("mass denominators too large for exact weights");
  }
  std::vector<BitString> pts;
  std::vector<bool> lab;
  std::vector<std::int64_t> weight;
  for (const auto& p : dist.points()) {
    pts.push_back(p.x);
    lab.push_back(p.label);
    weight.push_back(p.mass.numerator() * (denom / p.mass.denominator()));
  }
  SubsetSpace sp(pts, lab, dist.arity());
  FrontSolver solver{sp, weight, size_cap, {}};
  const auto f = solver.front(sp.all);

  ParetoFront out;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (s > 0 && f[s] >= f[s - 1]) continue;
    FrontEntry e;
    e.tree = solver.build(sp.all, s);
    e.size = e.tree.size();
    e.error = Rational(f[s], denom);
    out.entries.push_back(std::move(e));
  }
  out.visited_states = solver.memo.size();
  return out;
}

}  // namespace dtlab
