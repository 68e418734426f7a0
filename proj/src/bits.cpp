#include "meetimp/bits.hpp"

#include <stdexcept>

namespace meetimp {

std::string points_string(const Bits& b) {
  std::string out = "{";
  bool first = true;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (!first) out += ", ";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

std::string colour_string(Colour c, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j)
    if (colour_bit(c, j)) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

Colour parse_colour(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("colour \"" + s + "\" has length " +
                                std::to_string(s.size()) + ", expected " + std::to_string(n));
  Colour c = 0;
  for (int j = 0; j < n; ++j) {
    char ch = s[static_cast<std::size_t>(j)];
    if (ch == '1')
      c |= Colour{1} << j;
    else if (ch != '0')
      throw std::invalid_argument("colour \"" + s + "\" contains '" + std::string(1, ch) +
                                  "', expected '0' or '1'");
  }
  return c;
}

}  // namespace meetimp
