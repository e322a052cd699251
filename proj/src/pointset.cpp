#include "dtlab/pointset.hpp"

namespace dtlab {

std::string_view role_name(PointRole r) {
  switch (r) {
    case PointRole::zero: return "zero";
    case PointRole::indicator: return "indicator";
    case PointRole::perturbation: return "perturbation";
    case PointRole::other: return "other";
  }
  return "other";
}

PointRole parse_role(std::string_view s) {
  if (s == "zero") return PointRole::zero;
  if (s == "indicator") return PointRole::indicator;
  if (s == "perturbation") return PointRole::perturbation;
  if (s == "other") return PointRole::other;
  throw std::invalid_argument("unknown point role '" + std::string(s) + "'");
}

bool LabeledPointSet::add(const BitString& x, bool label, PointRole role) {
  if (x.size() != arity_)
    throw std::invalid_argument("point of length " + std::to_string(x.size()) + " in a set of arity " +
                                std::to_string(arity_));
  if (index_.count(x)) return false;
  index_.emplace(x, points_.size());
  points_.push_back({x, label, role});
  return true;
}

std::optional<std::size_t> LabeledPointSet::find(const BitString& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointList LabeledPointSet::inputs() const {
  PointList out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.x);
  return out;
}

void Distribution::add(const BitString& x, bool label, PointRole role, const Rational& mass) {
  if (x.size() != arity_) throw std::invalid_argument("point length does not match distribution arity");
  if (mass <= 0) throw std::invalid_argument("point masses must be positive");
  if (index_.count(x)) throw std::invalid_argument("duplicate point " + x.str() + " in distribution");
  index_.emplace(x, points_.size());
  points_.push_back({x, label, role, mass});
}

Rational Distribution::total_mass() const {
  Rational total = 0;
  for (const auto& p : points_) total += p.mass;
  return total;
}

void Distribution::validate() const {
  if (total_mass() != 1)
    throw PreconditionError("distribution masses sum to " + to_string(total_mass()) + ", not 1");
}

LabeledPointSet Distribution::support() const {
  LabeledPointSet s(arity_);
  for (const auto& p : points_) s.add(p.x, p.label, p.role);
  return s;
}

Distribution Distribution::uniform(const LabeledPointSet& s) {
  if (s.empty()) throw std::invalid_argument("uniform distribution over an empty set");
  Distribution d(s.arity());
  Rational each(1, static_cast<std::int64_t>(s.size()));
  for (const auto& p : s.points()) d.add(p.x, p.label, p.role, each);
  return d;
}

}  // namespace dtlab
