#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dtlab/bits.hpp"
#include "dtlab/core.hpp"
#include "dtlab/pointset.hpp"

namespace dtlab {

// Layer tag carried by constructed trees, used only for DOT colouring.
enum class NodeRole : std::uint8_t { plain, spine, dup, neighbor, rest, padding };

std::string_view node_role_name(NodeRole r);

// Immutable binary decision tree. Branch zero is taken when the queried
// variable reads 0. size() counts internal nodes.
class DecisionTree {
 public:
  DecisionTree();  // the constant-0 leaf

  static DecisionTree leaf(bool label);
  static DecisionTree node(Coord var, DecisionTree zero, DecisionTree one,
                           NodeRole role = NodeRole::plain);

  bool is_leaf() const;
  bool label() const;  // leaves only
  Coord var() const;   // internal nodes only
  NodeRole role() const;
  DecisionTree zero() const;
  DecisionTree one() const;

  std::size_t size() const;
  std::size_t depth() const;
  // Largest variable index queried, 0 for a leaf.
  Coord max_var() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  struct Node;
  explicit DecisionTree(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

struct Literal {
  Coord var = 0;
  bool value = false;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Path = std::vector<Literal>;
using Restriction = std::map<Coord, bool>;

// Throws std::out_of_range if T queries a variable beyond |x|.
bool evaluate(const DecisionTree& t, const BitString& x);
Path path_of(const DecisionTree& t, const BitString& x);

// pi(1..kappa-1) followed by the kappa-th literal flipped; kappa is 1-based.
Path divergent_prefix(const Path& pi, std::size_t kappa);

// Throws std::invalid_argument if a coordinate repeats.
Restriction to_restriction(const Path& pi);
bool agrees(const Restriction& rho, const BitString& x);
// Points of D lying in the subcube fixed by rho.
PointList consistent_points(const PointList& d, const Restriction& rho);
std::string format_restriction(const Restriction& rho);
std::string format_path(const Path& pi);

inline constexpr std::size_t kTruthTableLimit = 24;

// Total boolean function of fixed arity: either a truth table or a callable.
class BoolFunction {
 public:
  using Eval = std::function<bool(const BitString&)>;

  BoolFunction() = default;
  BoolFunction(std::size_t arity, Eval eval);

  // 2^N characters; character at index i is f on the input whose coordinate c
  // is bit (c-1) of i.
  static BoolFunction from_truth_table(std::string_view table);
  static BoolFunction from_tree(const DecisionTree& t, std::size_t arity);
  static BoolFunction constant(std::size_t arity, bool value);

  std::size_t arity() const { return arity_; }
  bool operator()(const BitString& x) const;
  bool has_table() const { return table_ != nullptr; }

  // Throws GuardError above kTruthTableLimit.
  std::vector<std::uint8_t> truth_table() const;
  std::string truth_table_string() const;

 private:
  std::size_t arity_ = 0;
  Eval eval_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

// f_rho(x) = f(x with rho's coordinates overridden).
BoolFunction restrict(const BoolFunction& f, const Restriction& rho);

// Certificates are judged on the points of D consistent with rho: rho certifies
// x when f is constant on D intersected with the subcube of rho. Throws
// PreconditionError when rho disagrees with x.
bool is_certificate(const BoolFunction& f, const PointList& d, const BitString& x,
                    const Restriction& rho);

inline constexpr std::size_t kCertificateArityLimit = 20;

struct CertificateResult {
  std::size_t size = 0;
  Restriction witness;
};

// Smallest certificate, searched by increasing cardinality; the witness is
// the lexicographically first coordinate subset of that size.
CertificateResult min_certificate_size(const BoolFunction& f, const PointList& d, const BitString& x);
// Every certificate of minimum size, in lexicographic order of coordinates.
std::vector<Restriction> all_min_certificates(const BoolFunction& f, const PointList& d,
                                              const BitString& x);

// Coordinates i such that some y in D has y^i in D and f(y) != f(y^i).
std::set<Coord> relevant_vars(const BoolFunction& f, const PointList& d);
// Rel(f_rho; D): relevant variables among the points of D consistent with rho.
std::set<Coord> relevant_vars(const BoolFunction& f, const PointList& d, const Restriction& rho);

// Exact Pr_{x~D}[f(x) != g(x)]. Throws PreconditionError unless masses sum to 1.
Rational distance(const BoolFunction& f, const BoolFunction& g, const Distribution& dist);
// Error of a tree against the labels of a distribution.
Rational tree_error(const DecisionTree& t, const Distribution& dist);

// Root-to-node address; false = zero branch.
using TreeAddress = std::vector<bool>;
DecisionTree subtree_at(const DecisionTree& t, const TreeAddress& a);

struct SubtreeBound {
  std::size_t tree_size = 0;
  std::size_t rel_sum = 0;
  std::vector<std::size_t> per_subtree;
  bool holds = false;
};

// Checks |T| >= sum_i Rel(T_i; D) for pairwise disjoint subtrees given by
// address. Throws std::invalid_argument when one address is a prefix of another.
SubtreeBound relevant_vars_lower_bounds_size(const DecisionTree& t,
                                             const std::vector<TreeAddress>& subtrees,
                                             const PointList& d);

// Every input of the given arity, ordered by truth-table index.
PointList full_cube(std::size_t arity);

}  // namespace dtlab
