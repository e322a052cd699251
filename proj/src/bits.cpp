#include "dtlab/bits.hpp"

#include <bit>
#include <charconv>
#include <numeric>

namespace dtlab {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    auto whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    std::int64_t num = std::abs(w) * scale + f;
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_int(s));
}

BitString::BitString(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

BitString BitString::parse(std::string_view text) {
  std::size_t n = 0;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      ++n;
    } else if (ch != '|') {
      throw std::invalid_argument("bad character in bit string: '" + std::string(text) + "'");
    }
  }
  BitString out(n);
  Coord c = 1;
  for (char ch : text) {
    if (ch == '|') continue;
    if (ch == '1') out.set(c);
    ++c;
  }
  return out;
}

BitString BitString::from_mask(std::uint64_t mask, std::size_t n) {
  if (n > 64) throw std::invalid_argument("from_mask needs n <= 64");
  BitString out(n);
  if (n > 0) out.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
  return out;
}

void BitString::check(Coord c) const {
  if (c < 1 || static_cast<std::size_t>(c) > n_)
    throw std::out_of_range("coordinate " + std::to_string(c) + " outside [1," +
                            std::to_string(n_) + "]");
}

bool BitString::at(Coord c) const {
  check(c);
  return (*this)[c];
}

void BitString::set(Coord c, bool value) {
  check(c);
  const auto i = static_cast<std::size_t>(c - 1);
  const auto bit = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

void BitString::flip(Coord c) {
  check(c);
  const auto i = static_cast<std::size_t>(c - 1);
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

BitString BitString::flipped(Coord c) const {
  BitString out = *this;
  out.flip(c);
  return out;
}

std::size_t BitString::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Coord> BitString::ones() const {
  std::vector<Coord> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word) {
      out.push_back(static_cast<Coord>(w * 64 + std::countr_zero(word) + 1));
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t BitString::mask() const {
  if (n_ > 64) throw std::logic_error("mask() needs size <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string BitString::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)[static_cast<Coord>(i + 1)]) s[i] = '1';
  return s;
}

std::size_t BitString::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  // Coordinate order: first differing coordinate decides, '0' < '1'.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    auto diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    auto low = std::countr_zero(diff);
    return ((a.words_[w] >> low) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace dtlab
