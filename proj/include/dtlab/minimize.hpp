#pragma once

#include <cstdint>
#include <vector>

#include "dtlab/dtree.hpp"
#include "dtlab/pointset.hpp"

namespace dtlab {

struct MinimizeResult {
  std::size_t size = 0;
  DecisionTree tree;
  std::size_t visited_states = 0;
};

inline constexpr std::size_t kExactArityLimit = 14;
inline constexpr std::size_t kSymmetricStateLimit = 40'000'000;
inline constexpr std::size_t kPointSetLimit = 128;

// Minimum tree computing f on all of {0,1}^N. DP over the 3^N restrictions;
// ties go to the smallest variable.
MinimizeResult dtsize_exact(const BoolFunction& f);

// Same optimum for a function invariant under permuting coordinates inside each
// orbit. Coordinates not listed form singleton orbits. Orbits must be disjoint;
// the invariance itself is the caller's promise.
MinimizeResult dtsize_exact_symmetric(const BoolFunction& f, const std::vector<std::vector<Coord>>& orbits);

// Minimum tree agreeing with every labeled point. DP over surviving point
// subsets; only variables that split the subset are tried.
MinimizeResult dtsize_over_set(const LabeledPointSet& d);

struct FrontEntry {
  std::size_t size = 0;
  Rational error;
  DecisionTree tree;
};

// Non-dominated (size, error) pairs: sizes strictly increase, errors strictly
// decrease, and the last entry is the first size reaching the smallest
// error available within size_cap.
struct ParetoFront {
  std::vector<FrontEntry> entries;
  std::size_t visited_states = 0;

  // Smallest entry with error <= budget, or nullptr.
  const FrontEntry* smallest_within(const Rational& budget) const;
  // Minimum error over trees of size <= s.
  Rational error_at(std::size_t s) const;
};

ParetoFront min_error_front(const Distribution& dist, std::size_t size_cap);

}  // namespace dtlab
