#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dtlab/bits.hpp"
#include "dtlab/core.hpp"

namespace dtlab {

using PointList = std::vector<BitString>;

// Where a coreset point came from.
enum class PointRole : std::uint8_t { zero, indicator, perturbation, other };

std::string_view role_name(PointRole r);
PointRole parse_role(std::string_view s);

struct LabeledPoint {
  BitString x;
  bool label = false;
  PointRole role = PointRole::other;
};

// Finite labeled point set with set semantics: adding a point already present
// is a no-op (the first label and role are kept).
class LabeledPointSet {
 public:
  LabeledPointSet() = default;
  explicit LabeledPointSet(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LabeledPoint>& points() const { return points_; }
  const LabeledPoint& operator[](std::size_t i) const { return points_[i]; }

  // Returns false when x was already present.
  bool add(const BitString& x, bool label, PointRole role = PointRole::other);
  bool contains(const BitString& x) const { return index_.count(x) > 0; }
  std::optional<std::size_t> find(const BitString& x) const;

  PointList inputs() const;

 private:
  std::size_t arity_ = 0;
  std::vector<LabeledPoint> points_;
  std::unordered_map<BitString, std::size_t, BitStringHash> index_;
};

struct WeightedPoint {
  BitString x;
  bool label = false;
  PointRole role = PointRole::other;
  Rational mass;
};

// Finite distribution with exact rational masses.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<WeightedPoint>& points() const { return points_; }
  const WeightedPoint& operator[](std::size_t i) const { return points_[i]; }

  // Throws std::invalid_argument on a duplicate point or a non-positive mass.
  void add(const BitString& x, bool label, PointRole role, const Rational& mass);

  Rational total_mass() const;
  // Throws PreconditionError unless masses sum to exactly 1.
  void validate() const;

  LabeledPointSet support() const;
  // Uniform distribution over a labeled point set.
  static Distribution uniform(const LabeledPointSet& s);

 private:
  std::size_t arity_ = 0;
  std::vector<WeightedPoint> points_;
  std::unordered_map<BitString, std::size_t, BitStringHash> index_;
};

}  // namespace dtlab
