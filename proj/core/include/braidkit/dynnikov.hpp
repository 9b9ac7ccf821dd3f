#pragma once

#include <braidkit/word.hpp>

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace braidkit {

using BigInt = mpz_class;

/// (x1, y1, x2, y2) acted on by one letter.
using Quad = std::array<BigInt, 4>;

/// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n).
struct DynnikovCoords {
  int n = 2;
  std::vector<BigInt> values;

  /// (0, 1, 0, 1, ..., 0, 1).
  static DynnikovCoords base(int n);

  friend bool operator==(const DynnikovCoords&, const DynnikovCoords&) = default;
};

/// One letter of the max-plus action: sign +1 applies F, sign -1 its inverse.
Quad step(const Quad& q, int sign);

DynnikovCoords act(DynnikovCoords c, const BraidWord& w);
DynnikovCoords coords(const BraidWord& w);
/// Compares coordinates after embedding both words into the larger group.
bool equal_by_coords(const BraidWord& a, const BraidWord& b);
bool trivial_by_coords(const BraidWord& w);

/// Largest bit length over all entries.
std::size_t max_bit_length(const DynnikovCoords& c);

/// "1,-7,-6,4,1,-1,0,8".
std::string to_string(const DynnikovCoords& c);

}  // namespace braidkit
