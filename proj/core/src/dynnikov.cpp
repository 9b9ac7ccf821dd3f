#include <braidkit/dynnikov.hpp>

#include <algorithm>

namespace braidkit {

namespace {

BigInt pos(const BigInt& x) { return x > 0 ? x : BigInt(0); }
BigInt neg(const BigInt& x) { return x < 0 ? x : BigInt(0); }

}  // namespace

DynnikovCoords DynnikovCoords::base(int n) {
  if (n < 2) throw InvalidArgument("coordinates need at least 2 strands");
  DynnikovCoords c{n, std::vector<BigInt>(2 * static_cast<std::size_t>(n))};
  for (int k = 0; k < n; ++k) c.values[2 * k + 1] = 1;
  return c;
}

Quad step(const Quad& q, int sign) {
  const auto& [x1, y1, x2, y2] = q;
  if (sign > 0) {
    const BigInt z = x1 - neg(y1) - x2 + pos(y2);
    return {x1 + pos(y1) + pos(BigInt(pos(y2) - z)),
            y2 - pos(z),
            x2 + neg(y2) + neg(BigInt(neg(y1) + z)),
            y1 + pos(z)};
  }
  const BigInt z = x1 + neg(y1) - x2 - pos(y2);
  return {x1 - pos(y1) - pos(BigInt(pos(y2) + z)),
          y2 + neg(z),
          x2 - neg(y2) - neg(BigInt(neg(y1) - z)),
          y1 - neg(z)};
}

DynnikovCoords act(DynnikovCoords c, const BraidWord& w) {
  if (c.n != w.strands() || c.values.size() != 2 * static_cast<std::size_t>(c.n)) {
    throw InvalidArgument("coordinate and word strand counts differ");
  }
  Quad q;
  for (const auto& l : w) {
    const auto k = 2 * static_cast<std::size_t>(l.index - 1);
    std::move(c.values.begin() + k, c.values.begin() + k + 4, q.begin());
    q = step(q, l.sign);
    std::move(q.begin(), q.end(), c.values.begin() + k);
  }
  return c;
}

DynnikovCoords coords(const BraidWord& w) {
  return act(DynnikovCoords::base(w.strands()), w);
}

bool equal_by_coords(const BraidWord& a, const BraidWord& b) {
  const int n = std::max(a.strands(), b.strands());
  return coords(embed(a, n)) == coords(embed(b, n));
}

bool trivial_by_coords(const BraidWord& w) {
  return coords(w) == DynnikovCoords::base(w.strands());
}

std::size_t max_bit_length(const DynnikovCoords& c) {
  std::size_t bits = 0;
  for (const auto& v : c.values) {
    if (v != 0) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  }
  return bits;
}

std::string to_string(const DynnikovCoords& c) {
  std::string out;
  for (const auto& v : c.values) {
    if (!out.empty()) out += ',';
    out += v.get_str();
  }
  return out;
}

}  // namespace braidkit
