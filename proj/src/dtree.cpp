#include "dtlab/dtree.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dtlab {

std::string_view node_role_name(NodeRole r) {
  switch (r) {
    case NodeRole::plain: return "plain";
    case NodeRole::spine: return "spine";
    case NodeRole::dup: return "dup";
    case NodeRole::neighbor: return "neighbor";
    case NodeRole::rest: return "rest";
    case NodeRole::padding: return "padding";
  }
  return "plain";
}

struct DecisionTree::Node {
  Coord var = 0;  // 0 marks a leaf
  bool label = false;
  NodeRole role = NodeRole::plain;
  std::shared_ptr<const Node> zero, one;
  std::size_t size = 0;
  std::size_t depth = 0;
  Coord max_var = 0;
};

DecisionTree::DecisionTree() : root_(leaf(false).root_) {}

DecisionTree DecisionTree::leaf(bool label) {
  static const auto zero_leaf = [] {
    auto n = std::make_shared<Node>();
    n->label = false;
    return std::shared_ptr<const Node>(n);
  }();
  static const auto one_leaf = [] {
    auto n = std::make_shared<Node>();
    n->label = true;
    return std::shared_ptr<const Node>(n);
  }();
  return DecisionTree(label ? one_leaf : zero_leaf);
}

DecisionTree DecisionTree::node(Coord var, DecisionTree zero, DecisionTree one, NodeRole role) {
  if (var < 1) throw std::invalid_argument("variable indices start at 1");
  auto n = std::make_shared<Node>();
  n->var = var;
  n->role = role;
  n->size = 1 + zero.root_->size + one.root_->size;
  n->depth = 1 + std::max(zero.root_->depth, one.root_->depth);
  n->max_var = std::max({var, zero.root_->max_var, one.root_->max_var});
  n->zero = std::move(zero.root_);
  n->one = std::move(one.root_);
  return DecisionTree(std::shared_ptr<const Node>(std::move(n)));
}

bool DecisionTree::is_leaf() const { return root_->var == 0; }
bool DecisionTree::label() const {
  if (!is_leaf()) throw std::logic_error("label() on an internal node");
  return root_->label;
}
Coord DecisionTree::var() const {
  if (is_leaf()) throw std::logic_error("var() on a leaf");
  return root_->var;
}
NodeRole DecisionTree::role() const { return root_->role; }
DecisionTree DecisionTree::zero() const {
  if (is_leaf()) throw std::logic_error("zero() on a leaf");
  return DecisionTree(root_->zero);
}
DecisionTree DecisionTree::one() const {
  if (is_leaf()) throw std::logic_error("one() on a leaf");
  return DecisionTree(root_->one);
}
std::size_t DecisionTree::size() const { return root_->size; }
std::size_t DecisionTree::depth() const { return root_->depth; }
Coord DecisionTree::max_var() const { return root_->max_var; }

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.root_ == b.root_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.label() == b.label();
  return a.var() == b.var() && a.zero() == b.zero() && a.one() == b.one();
}

namespace {

void check_query(Coord var, const BitString& x) {
  if (static_cast<std::size_t>(var) > x.size())
    throw std::out_of_range("tree queries x" + std::to_string(var) + " but the input has " +
                            std::to_string(x.size()) + " coordinates");
}

}  // namespace

bool evaluate(const DecisionTree& t, const BitString& x) {
  DecisionTree cur = t;
  while (!cur.is_leaf()) {
    check_query(cur.var(), x);
    cur = x[cur.var()] ? cur.one() : cur.zero();
  }
  return cur.label();
}

Path path_of(const DecisionTree& t, const BitString& x) {
  Path out;
  DecisionTree cur = t;
  while (!cur.is_leaf()) {
    check_query(cur.var(), x);
    bool b = x[cur.var()];
    out.push_back({cur.var(), b});
    cur = b ? cur.one() : cur.zero();
  }
  return out;
}

Path divergent_prefix(const Path& pi, std::size_t kappa) {
  if (kappa < 1 || kappa > pi.size())
    throw std::out_of_range("kappa = " + std::to_string(kappa) + " outside [1," + std::to_string(pi.size()) + "]");
  Path out(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(kappa));
  out.back().value = !out.back().value;
  return out;
}

Restriction to_restriction(const Path& pi) {
  Restriction rho;
  for (const auto& lit : pi)
    if (!rho.emplace(lit.var, lit.value).second)
      throw std::invalid_argument("path repeats coordinate " + std::to_string(lit.var));
  return rho;
}

bool agrees(const Restriction& rho, const BitString& x) {
  for (const auto& [c, b] : rho) {
    if (static_cast<std::size_t>(c) > x.size() || c < 1) return false;
    if (x[c] != b) return false;
  }
  return true;
}

PointList consistent_points(const PointList& d, const Restriction& rho) {
  PointList out;
  for (const auto& y : d)
    if (agrees(rho, y)) out.push_back(y);
  return out;
}

std::string format_restriction(const Restriction& rho) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [c, b] : rho) {
    if (!first) os << ", ";
    first = false;
    os << 'x' << c << '=' << b;
  }
  os << '}';
  return os.str();
}

std::string format_path(const Path& pi) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) os << ", ";
    os << 'x' << pi[i].var << '=' << pi[i].value;
  }
  os << ')';
  return os.str();
}

BoolFunction::BoolFunction(std::size_t arity, Eval eval) : arity_(arity), eval_(std::move(eval)) {
  if (!eval_) throw std::invalid_argument("empty evaluator");
}

BoolFunction BoolFunction::from_truth_table(std::string_view table) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < table.size()) ++n;
  if ((std::size_t{1} << n) != table.size())
    throw std::invalid_argument("truth table length " + std::to_string(table.size()) + " is not a power of two");
  if (n > kTruthTableLimit) throw GuardError("truth table arity above limit");
  auto bits = std::make_shared<std::vector<std::uint8_t>>(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != '0' && table[i] != '1') throw std::invalid_argument("truth table must be 0/1 characters");
    (*bits)[i] = table[i] == '1';
  }
  BoolFunction f;
  f.arity_ = n;
  f.table_ = bits;
  return f;
}

BoolFunction BoolFunction::from_tree(const DecisionTree& t, std::size_t arity) {
  if (static_cast<std::size_t>(t.max_var()) > arity)
    throw std::invalid_argument("tree queries a variable beyond the declared arity");
  return BoolFunction(arity, [t](const BitString& x) { return evaluate(t, x); });
}

BoolFunction BoolFunction::constant(std::size_t arity, bool value) {
  return BoolFunction(arity, [value](const BitString&) { return value; });
}

bool BoolFunction::operator()(const BitString& x) const {
  if (x.size() != arity_)
    throw std::invalid_argument("input of length " + std::to_string(x.size()) + " for a function of arity " +
                                std::to_string(arity_));
  if (table_) return (*table_)[x.mask()] != 0;
  return eval_(x);
}

std::vector<std::uint8_t> BoolFunction::truth_table() const {
  if (table_) return *table_;
  if (arity_ > kTruthTableLimit) throw GuardError("truth table arity above limit");
  std::vector<std::uint8_t> out(std::size_t{1} << arity_);
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = eval_(BitString::from_mask(i, arity_));
  return out;
}

std::string BoolFunction::truth_table_string() const {
  auto t = truth_table();
  std::string s(t.size(), '0');
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i]) s[i] = '1';
  return s;
}

BoolFunction restrict(const BoolFunction& f, const Restriction& rho) {
  for (const auto& [c, b] : rho)
    if (c < 1 || static_cast<std::size_t>(c) > f.arity())
      throw std::out_of_range("restriction fixes x" + std::to_string(c) + " beyond the arity");
  return BoolFunction(f.arity(), [f, rho](const BitString& x) {
    BitString y = x;
    for (const auto& [c, b] : rho) y.set(c, b);
    return f(y);
  });
}

bool is_certificate(const BoolFunction& f, const PointList& d, const BitString& x, const Restriction& rho) {
  if (!agrees(rho, x)) throw PreconditionError("restriction " + format_restriction(rho) + " disagrees with x");
  const bool target = f(x);
  for (const auto& y : d)
    if (agrees(rho, y) && f(y) != target) return false;
  return true;
}

namespace {

// Visits every size-k subset of [1,n] in lexicographic order until visit returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<Coord> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    if (visit(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

Restriction fix_by(const std::vector<Coord>& coords, const BitString& x) {
  Restriction rho;
  for (Coord c : coords) rho.emplace(c, x[c]);
  return rho;
}

void check_certificate_inputs(const BoolFunction& f, const PointList& d, const BitString& x) {
  if (f.arity() > kCertificateArityLimit)
    throw GuardError("certificate search limited to arity <= " + std::to_string(kCertificateArityLimit));
  if (x.size() != f.arity()) throw std::invalid_argument("x does not match the function arity");
  for (const auto& y : d)
    if (y.size() != f.arity()) throw std::invalid_argument("point set arity does not match the function");
}

}  // namespace

CertificateResult min_certificate_size(const BoolFunction& f, const PointList& d, const BitString& x) {
  check_certificate_inputs(f, d, x);
  const int n = static_cast<int>(f.arity());
  const bool target = f(x);
  std::vector<std::uint8_t> values;
  for (const auto& y : d) values.push_back(f(y));
  for (int k = 0; k <= n; ++k) {
    CertificateResult found;
    bool hit = for_each_subset(n, k, [&](const std::vector<Coord>& coords) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (values[i] == target) continue;
        bool inside = true;
        for (Coord c : coords)
          if (d[i][c] != x[c]) {
            inside = false;
            break;
          }
        if (inside) return false;
      }
      found.size = static_cast<std::size_t>(k);
      found.witness = fix_by(coords, x);
      return true;
    });
    if (hit) return found;
  }
  throw std::logic_error("unreachable: fixing every coordinate certifies x");
}

std::vector<Restriction> all_min_certificates(const BoolFunction& f, const PointList& d, const BitString& x) {
  const std::size_t k = min_certificate_size(f, d, x).size;
  std::vector<Restriction> out;
  for_each_subset(static_cast<int>(f.arity()), static_cast<int>(k), [&](const std::vector<Coord>& coords) {
    Restriction rho = fix_by(coords, x);
    if (is_certificate(f, d, x, rho)) out.push_back(std::move(rho));
    return false;
  });
  return out;
}

std::set<Coord> relevant_vars(const BoolFunction& f, const PointList& d) {
  std::unordered_map<BitString, bool, BitStringHash> value;
  for (const auto& y : d) value.emplace(y, f(y));
  std::set<Coord> out;
  for (const auto& [y, fy] : value) {
    for (Coord i = 1; static_cast<std::size_t>(i) <= y.size(); ++i) {
      if (out.count(i)) continue;
      auto it = value.find(y.flipped(i));
      if (it != value.end() && it->second != fy) out.insert(i);
    }
  }
  return out;
}

std::set<Coord> relevant_vars(const BoolFunction& f, const PointList& d, const Restriction& rho) {
  return relevant_vars(f, consistent_points(d, rho));
}

Rational distance(const BoolFunction& f, const BoolFunction& g, const Distribution& dist) {
  dist.validate();
  Rational total = 0;
  for (const auto& p : dist.points())
    if (f(p.x) != g(p.x)) total += p.mass;
  return total;
}

Rational tree_error(const DecisionTree& t, const Distribution& dist) {
  dist.validate();
  Rational total = 0;
  for (const auto& p : dist.points())
    if (evaluate(t, p.x) != p.label) total += p.mass;
  return total;
}

DecisionTree subtree_at(const DecisionTree& t, const TreeAddress& a) {
  DecisionTree cur = t;
  for (bool step : a) {
    if (cur.is_leaf()) throw std::out_of_range("tree address runs past a leaf");
    cur = step ? cur.one() : cur.zero();
  }
  return cur;
}

SubtreeBound relevant_vars_lower_bounds_size(const DecisionTree& t, const std::vector<TreeAddress>& subtrees,
                                             const PointList& d) {
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    for (std::size_t j = 0; j < subtrees.size(); ++j) {
      if (i == j) continue;
      const auto& a = subtrees[i];
      const auto& b = subtrees[j];
      if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin()))
        throw std::invalid_argument("subtrees overlap: one address is a prefix of another");
    }
  SubtreeBound out;
  out.tree_size = t.size();
  std::size_t arity = d.empty() ? static_cast<std::size_t>(t.max_var()) : d.front().size();
  for (const auto& a : subtrees) {
    DecisionTree sub = subtree_at(t, a);
    auto rel = relevant_vars(BoolFunction::from_tree(sub, arity), d);
    out.per_subtree.push_back(rel.size());
    out.rel_sum += rel.size();
  }
  out.holds = out.tree_size >= out.rel_sum;
  return out;
}

PointList full_cube(std::size_t arity) {
  if (arity > kTruthTableLimit) throw GuardError("full cube enumeration above the truth-table limit");
  PointList out;
  out.reserve(std::size_t{1} << arity);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << arity); ++i) out.push_back(BitString::from_mask(i, arity));
  return out;
}

}  // namespace dtlab
