#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace parity {

// All instance weights and gadget arithmetic use a 128-bit signed integer.
// Gadget constructions scale weights by factors like 4n and (n^2+1), so
// 64 bits is not safe in general; 128 bits is exact far beyond any bound
// the validated constructions can produce.
using Int = __int128;

// Sentinel for "no path".  Large enough to be outside every reachable
// distance, small enough that INF + INF does not wrap.
inline constexpr Int kInf = (Int(1) << 120);

inline Int int_abs(Int x) { return x < 0 ? -x : x; }

inline int parity_bit(Int x) { return static_cast<int>(((x % 2) + 2) % 2); }

inline std::string int_to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

inline Int int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bare sign: " + s);
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad integer literal: " + s);
    v = v * 10 + (s[i] - '0');
    if (v > (kInf << 4)) throw std::out_of_range("integer literal too large: " + s);
  }
  return neg ? -v : v;
}

}  // namespace parity

inline std::ostream& operator<<(std::ostream& os, __int128 v) {
  return os << parity::int_to_string(v);
}
