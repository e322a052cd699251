#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dtlab/core.hpp"

namespace dtlab {

// Packed bit string indexed by 1-based coordinates. Text form lists
// coordinate 1 first.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n);

  // Parses '0'/'1' characters; '|' block separators are skipped.
  static BitString parse(std::string_view text);
  // Bit (c-1) of mask becomes coordinate c.
  static BitString from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool operator[](Coord c) const {
    const auto i = static_cast<std::size_t>(c - 1);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  bool at(Coord c) const;  // bounds-checked
  void set(Coord c, bool value = true);
  void flip(Coord c);
  BitString flipped(Coord c) const;

  std::size_t count() const;
  // Coordinates holding a 1, ascending.
  std::vector<Coord> ones() const;
  std::uint64_t mask() const;  // requires size() <= 64

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  void check(Coord c) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitStringHash {
  std::size_t operator()(const BitString& b) const { return b.hash(); }
};

}  // namespace dtlab
