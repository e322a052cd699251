#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace boost {

// Under C++20 rewritten comparisons, Boost's mixed rational/int operator==
// picks its own reversed template and recurses forever. Exact-match
// non-template overloads win overload resolution and sidestep it.
#define DTLAB_RATIONAL_EQ(T)                                                                              \
  inline bool operator==(const rational<std::int64_t>& a, T b) {                                          \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                        \
  }
DTLAB_RATIONAL_EQ(int)
DTLAB_RATIONAL_EQ(long)
DTLAB_RATIONAL_EQ(unsigned)
DTLAB_RATIONAL_EQ(unsigned long)
#undef DTLAB_RATIONAL_EQ

}  // namespace boost

namespace dtlab {

// Coordinates and vertices are 1-based throughout, matching v_1..v_n.
using Coord = int;
using Vertex = int;

using Rational = boost::rational<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A desk-scale size guard (exhaustive search limit) was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

std::string to_string(const Rational& r);

// Accepts "p/q", an integer, or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

}  // namespace dtlab
