#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace meetimp {

// Membership bitset over the carrier of one fixed poset. Whether a Bits
// value is an up-set is a property relative to that poset; the Poset class
// provides the check.
using Bits = boost::dynamic_bitset<>;
using UpSet = Bits;

inline std::vector<int> to_points(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

inline Bits from_points(std::size_t size, std::initializer_list<int> pts) {
  Bits b(size);
  for (int p : pts) b.set(static_cast<std::size_t>(p));
  return b;
}

inline Bits from_points(std::size_t size, const std::vector<int>& pts) {
  Bits b(size);
  for (int p : pts) b.set(static_cast<std::size_t>(p));
  return b;
}

// Renders "{0, 3, 5}"; stable, used by the CLI and golden tests.
std::string points_string(const Bits& b);

// A colour is the truth vector of the n variables at a point; bit j is the
// truth of p_{j+1}. Colours are ordered pointwise.
using Colour = std::uint64_t;

constexpr int kMaxVariables = 62;

inline bool colour_leq(Colour a, Colour b) { return (a & ~b) == 0; }
inline bool colour_lt(Colour a, Colour b) { return a != b && colour_leq(a, b); }
inline bool colour_bit(Colour c, int j) { return (c >> j) & 1u; }
inline Colour all_ones_colour(int n) {
  return n == 0 ? 0 : (~Colour{0} >> (64 - n));
}

// "bitstring, p1 leftmost": colour 0b01 with n=2 renders as "10".
std::string colour_string(Colour c, int n);
Colour parse_colour(const std::string& s, int n);

}  // namespace meetimp
