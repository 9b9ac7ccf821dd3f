#include <braidkit/gridnf.hpp>

#include <algorithm>

namespace braidkit {

namespace {

void count(NfStats* stats, std::size_t tiles = 1) {
  if (stats) stats->tiles += tiles;
}

int common_strands(std::span<const SimpleBraid> x, std::span<const SimpleBraid> y) {
  int n = 0;
  for (const auto* seq : {&x, &y}) {
    for (const auto& s : *seq) {
      if (n == 0) n = s.strands();
      if (s.strands() != n) throw InvalidArgument("strand count mismatch");
    }
  }
  return n;
}

void require_normal(std::span<const SimpleBraid> seq) {
  if (!is_normal(seq)) throw InvalidArgument("sequence is not normal");
}

void require_strands(int n, const SimpleBraid& s) {
  if (s.strands() != n) throw InvalidArgument("strand count mismatch");
}

std::string join(const SimpleSequence& seq) {
  if (seq.empty()) return "∅";
  std::string out;
  for (const auto& s : seq) {
    if (!out.empty()) out += ", ";
    out += to_string(s);
  }
  return out;
}

BraidWord word_of_sequence(int n, const SimpleSequence& seq) {
  BraidWord out(n);
  for (const auto& s : seq) out.append(word_of_simple(s));
  return out;
}

// Absorbs leading delta factors into the exponent.
void absorb_deltas(GreedyNF& nf) {
  auto first = std::find_if(nf.factors.begin(), nf.factors.end(),
                            [](const SimpleBraid& s) { return !s.is_delta(); });
  nf.delta_exp += static_cast<int>(first - nf.factors.begin());
  nf.factors.erase(nf.factors.begin(), first);
}

// g^-1 * seq for a simple g that left-divides seq.front().
SimpleSequence left_divide(const SimpleBraid& g, const SimpleSequence& seq,
                           NfStats* stats) {
  SimpleBraid rest(g.perm().inverse() * seq.front().perm());
  return left_multiply(rest, std::span(seq).subspan(1), stats);
}

}  // namespace

bool is_normal(std::span<const SimpleBraid> seq) {
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!is_normal_pair(seq[k], seq[k + 1])) return false;
  }
  return true;
}

SimpleSequence TileGrid::column(std::size_t c) const {
  SimpleSequence out;
  out.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) out.push_back(vertical[r][c]);
  return out;
}

// ---------------------------------------------------------------------------
// Grids

TileGrid build_product_grid(std::span<const SimpleBraid> x,
                            std::span<const SimpleBraid> y) {
  common_strands(x, y);
  require_normal(x);
  require_normal(y);
  TileGrid g;
  g.rows = y.size();
  g.cols = x.size();
  g.horizontal.resize(g.rows + 1);
  g.vertical.resize(g.rows);
  g.horizontal[g.rows].assign(x.begin(), x.end());
  for (std::size_t r = g.rows; r-- > 0;) {
    auto& above = g.horizontal[r];
    auto& side = g.vertical[r];
    side.reserve(g.cols + 1);
    side.push_back(y[r]);
    for (std::size_t c = 0; c < g.cols; ++c) {
      auto tile = normalize_pair(side[c], g.horizontal[r + 1][c]);
      above.push_back(std::move(tile.head));
      side.push_back(std::move(tile.tail));
    }
  }
  return g;
}

SimpleSequence grid_product(std::span<const SimpleBraid> x,
                            std::span<const SimpleBraid> y) {
  auto g = build_product_grid(x, y);
  SimpleSequence out = g.horizontal[0];
  for (std::size_t r = 0; r < g.rows; ++r) out.push_back(g.vertical[r][g.cols]);
  return strip_identities(std::move(out));
}

TileGrid build_complement_grid(std::span<const SimpleBraid> x,
                               std::span<const SimpleBraid> y) {
  const int n = common_strands(x, y);
  require_normal(x);
  require_normal(y);
  TileGrid g;
  const std::size_t size = std::max(x.size(), y.size());
  g.rows = g.cols = size;
  if (size == 0) {
    g.horizontal.resize(1);
    return g;
  }
  const auto one = SimpleBraid::identity(n);
  g.horizontal.assign(size + 1, SimpleSequence(size, one));
  g.vertical.assign(size, SimpleSequence(size + 1, one));
  std::copy(x.begin(), x.end(), g.horizontal[size].begin());
  for (std::size_t r = 0; r < y.size(); ++r) g.vertical[r][size] = y[r];
  for (std::size_t r = size; r-- > 0;) {
    for (std::size_t c = size; c-- > 0;) {
      auto tile = c_tile(g.horizontal[r + 1][c], g.vertical[r][c + 1]);
      g.horizontal[r][c] = std::move(tile.s_over_t);
      g.vertical[r][c] = std::move(tile.t_over_s);
    }
  }
  return g;
}

GridQuotient grid_quotient(std::span<const SimpleBraid> x,
                           std::span<const SimpleBraid> y) {
  auto g = build_complement_grid(x, y);
  GridQuotient q;
  q.x_over_y = strip_identities(g.horizontal[0]);
  q.y_over_x = strip_identities(g.column(0));
  for (std::size_t k = 0; k < g.rows; ++k) {
    q.lcm.emplace_back(g.horizontal[k][k].perm() * g.vertical[k][k + 1].perm());
  }
  q.lcm = strip_identities(std::move(q.lcm));
  return q;
}

// ---------------------------------------------------------------------------
// Positive normal sequences

SimpleSequence strip_identities(SimpleSequence seq) {
  std::erase_if(seq, [](const SimpleBraid& s) { return s.is_identity(); });
  return seq;
}

SimpleSequence left_multiply(const SimpleBraid& r, std::span<const SimpleBraid> seq,
                             NfStats* stats) {
  SimpleSequence out;
  out.reserve(seq.size() + 1);
  SimpleBraid carry = r;
  for (const auto& s : seq) {
    auto tile = normalize_pair(carry, s);
    count(stats);
    out.push_back(std::move(tile.head));
    carry = std::move(tile.tail);
  }
  out.push_back(std::move(carry));
  return strip_identities(std::move(out));
}

SimpleSequence right_multiply(std::span<const SimpleBraid> seq, const SimpleBraid& u,
                              NfStats* stats) {
  SimpleSequence out(seq.size() + 1, u);
  SimpleBraid carry = u;
  for (std::size_t k = seq.size(); k-- > 0;) {
    auto tile = normalize_pair(seq[k], carry);
    count(stats);
    out[k + 1] = std::move(tile.tail);
    carry = std::move(tile.head);
  }
  out[0] = std::move(carry);
  return strip_identities(std::move(out));
}

SimpleSequence positive_normal_form(std::span<const SimpleBraid> seq) {
  SimpleSequence out;
  for (const auto& s : seq) out = right_multiply(out, s);
  return out;
}

// ---------------------------------------------------------------------------
// Greedy normal form

GreedyNF greedy_mul_simple(const GreedyNF& nf, const SimpleBraid& u,
                           NfStats* stats) {
  require_strands(nf.n, u);
  GreedyNF out{nf.n, nf.delta_exp, right_multiply(nf.factors, u, stats)};
  absorb_deltas(out);
  return out;
}

GreedyNF greedy_div_simple(const GreedyNF& nf, const SimpleBraid& u,
                           NfStats* stats) {
  require_strands(nf.n, u);
  GreedyNF out{nf.n, nf.delta_exp, {}};
  out.factors.reserve(nf.factors.size() + 1);
  SimpleSequence quotient(nf.factors.size(), u);
  SimpleBraid carry = u;
  for (std::size_t k = nf.factors.size(); k-- > 0;) {
    auto tile = c_tile(nf.factors[k], carry);
    count(stats);
    quotient[k] = std::move(tile.s_over_t);
    carry = std::move(tile.t_over_s);
  }
  if (!carry.is_identity()) {
    // u0^-1 = delta^-1 * (*u0)
    out.factors.push_back(dual(carry, Side::left));
    out.delta_exp -= 1;
  }
  out.factors.insert(out.factors.end(), quotient.begin(), quotient.end());
  out.factors = strip_identities(std::move(out.factors));
  absorb_deltas(out);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric normal form

namespace detail {

SymmetricNF symmetric_push_grid(const SymmetricNF& nf, const SimpleBraid& u,
                                int sign, NfStats* stats) {
  require_strands(nf.n, u);
  if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
  const auto& den = nf.den;
  const auto& num = nf.num;
  SymmetricNF out{nf.n, {}, {}};

  // Pass across the numerator, right to left, leaving u0 on the left edge.
  SimpleSequence num_row(num.size(), u);
  SimpleBraid carry = u;
  for (std::size_t k = num.size(); k-- > 0;) {
    if (sign > 0) {
      auto tile = normalize_pair(num[k], carry);
      num_row[k] = std::move(tile.tail);
      carry = std::move(tile.head);
    } else {
      auto tile = c_tile(num[k], carry);
      num_row[k] = std::move(tile.s_over_t);
      carry = std::move(tile.t_over_s);
    }
    count(stats);
  }

  if (sign > 0) {
    // delta^-1 on the left of u0 becomes *u0 on the denominator side.
    const SimpleBraid left_dual = dual(carry, Side::left);
    if (den.empty()) {
      out.num.push_back(std::move(carry));
    } else {
      auto first = normalize_pair(left_dual, den[0]);
      count(stats);
      SimpleBraid v = std::move(first.tail);
      for (std::size_t k = 1; k < den.size(); ++k) {
        auto tile = normalize_pair(v, den[k]);
        count(stats);
        out.den.push_back(std::move(tile.head));
        v = std::move(tile.tail);
      }
      out.den.push_back(std::move(v));
      out.num.push_back(dual(first.head, Side::right));
    }
  } else {
    SimpleBraid v = std::move(carry);
    for (const auto& t : den) {
      auto tile = normalize_pair(v, t);
      count(stats);
      out.den.push_back(std::move(tile.head));
      v = std::move(tile.tail);
    }
    out.den.push_back(std::move(v));
  }
  out.num.insert(out.num.end(), num_row.begin(), num_row.end());
  out.den = strip_identities(std::move(out.den));
  out.num = strip_identities(std::move(out.num));
  return out;
}

}  // namespace detail

SymmetricNF canonicalize(int n, SimpleSequence den, SimpleSequence num,
                         NfStats* stats) {
  den = strip_identities(std::move(den));
  num = strip_identities(std::move(num));
  if (!is_normal(den)) den = positive_normal_form(den);
  if (!is_normal(num)) num = positive_normal_form(num);
  while (!den.empty() && !num.empty()) {
    const auto g = gcd_left(den.front(), num.front());
    if (g.is_identity()) break;
    den = left_divide(g, den, stats);
    num = left_divide(g, num, stats);
  }
  return {n, std::move(den), std::move(num)};
}

SymmetricNF symmetric_push(const SymmetricNF& nf, const SimpleBraid& u, int sign,
                           NfStats* stats) {
  auto raw = detail::symmetric_push_grid(nf, u, sign, stats);
  return canonicalize(nf.n, std::move(raw.den), std::move(raw.num), stats);
}

// ---------------------------------------------------------------------------
// Whole words

std::vector<SimpleRun> simple_runs(const BraidWord& w, bool group) {
  std::vector<SimpleRun> runs;
  const int n = w.strands();
  Permutation current = Permutation::identity(n);
  int sign = 0;
  auto flush = [&] {
    if (sign != 0) runs.push_back({SimpleBraid(current), sign});
    current = Permutation::identity(n);
    sign = 0;
  };
  for (const auto& l : w) {
    const int i = l.index;
    bool fits = group && sign == l.sign;
    if (fits) {
      // A positive run grows on the right, a negative run's inverse on the left.
      fits = l.sign > 0 ? current(i) < current(i + 1)
                        : current.inverse()(i) < current.inverse()(i + 1);
    }
    if (!fits) flush();
    sign = l.sign;
    if (l.sign > 0) {
      current.swap_positions(i);
    } else {
      current.swap_values(i);
    }
  }
  flush();
  return runs;
}

GreedyNF greedy_nf(const BraidWord& w, const NfOptions& opts) {
  auto nf = GreedyNF::unit(w.strands());
  for (const auto& run : simple_runs(w, opts.group_runs)) {
    nf = run.sign > 0 ? greedy_mul_simple(nf, run.simple, opts.stats)
                      : greedy_div_simple(nf, run.simple, opts.stats);
  }
  return nf;
}

SymmetricNF symmetric_nf(const BraidWord& w, const NfOptions& opts) {
  auto nf = SymmetricNF::unit(w.strands());
  for (const auto& run : simple_runs(w, opts.group_runs)) {
    nf = symmetric_push(nf, run.simple, run.sign, opts.stats);
  }
  return nf;
}

bool equal(const BraidWord& a, const BraidWord& b, NormalFormKind kind) {
  const int n = std::max(a.strands(), b.strands());
  const auto wa = embed(a, n);
  const auto wb = embed(b, n);
  if (kind == NormalFormKind::greedy) return greedy_nf(wa) == greedy_nf(wb);
  return symmetric_nf(wa) == symmetric_nf(wb);
}

BraidWord to_word(const GreedyNF& nf) {
  BraidWord out(nf.n);
  const auto half_twist = word_of_simple(delta(nf.n));
  const auto power = nf.delta_exp >= 0 ? half_twist : invert(half_twist);
  for (int k = 0; k < std::abs(nf.delta_exp); ++k) out.append(power);
  out.append(word_of_sequence(nf.n, nf.factors));
  return out;
}

BraidWord to_word(const SymmetricNF& nf) {
  return invert(word_of_sequence(nf.n, nf.den)) * word_of_sequence(nf.n, nf.num);
}

SymmetricNF to_symmetric(const GreedyNF& nf) { return symmetric_nf(to_word(nf)); }

std::string to_string(const GreedyNF& nf) {
  return "(" + std::to_string(nf.delta_exp) + "; " + join(nf.factors) + ")";
}

std::string to_string(const SymmetricNF& nf) {
  return "(" + join(nf.den) + "; " + join(nf.num) + ")";
}

}  // namespace braidkit
