#pragma once

#include <braidkit/simple.hpp>
#include <braidkit/word.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace braidkit {

using SimpleSequence = std::vector<SimpleBraid>;

/// delta^delta_exp * factors[0] * ... * factors[p-1], with the factors forming
/// a normal sequence, factors.front() != delta and factors.back() != 1.
struct GreedyNF {
  int n = 2;
  int delta_exp = 0;
  SimpleSequence factors;

  static GreedyNF unit(int n) { return {n, 0, {}}; }
  bool is_unit() const noexcept { return delta_exp == 0 && factors.empty(); }

  friend bool operator==(const GreedyNF&, const GreedyNF&) = default;
};

/// den = (t_1..t_q), num = (s_1..s_p) for the braid
/// t_q^-1 ... t_1^-1 s_1 ... s_p. Both sequences are normal without identity
/// factors and gcd_L(t_1, s_1) = 1.
struct SymmetricNF {
  int n = 2;
  SimpleSequence den;
  SimpleSequence num;

  static SymmetricNF unit(int n) { return {n, {}, {}}; }
  bool is_unit() const noexcept { return den.empty() && num.empty(); }

  friend bool operator==(const SymmetricNF&, const SymmetricNF&) = default;
};

/// Counts tile evaluations (P-tiles and C-tiles) performed by an algorithm.
struct NfStats {
  std::size_t tiles = 0;
};

bool is_normal(std::span<const SimpleBraid> seq);

// ---------------------------------------------------------------------------
// Grids

/// Edge labels of a rectangular tile grid with `rows` rows and `cols` columns
/// of tiles. horizontal[r][c] (r in [0, rows], c < cols) lies on the r-th
/// horizontal line counted from the top; vertical[r][c] (r < rows,
/// c in [0, cols]) lies on the c-th vertical line counted from the left.
struct TileGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SimpleSequence> horizontal;
  std::vector<SimpleSequence> vertical;

  SimpleSequence row(std::size_t r) const { return horizontal[r]; }
  SimpleSequence column(std::size_t c) const;
};

/// P-tile grid for the product y*x: left column y (top to bottom), bottom row
/// x, filled left to right and bottom to top with normalize_pair.
TileGrid build_product_grid(std::span<const SimpleBraid> x,
                            std::span<const SimpleBraid> y);
/// Normal form of y*x: the top row followed by the right column of the
/// product grid, identity factors removed.
SimpleSequence grid_product(std::span<const SimpleBraid> x,
                            std::span<const SimpleBraid> y);

/// C-tile grid for x and y: right column y (top to bottom), bottom row x,
/// filled right to left and bottom to top with c_tile. The shorter input is
/// padded with identity factors so the grid is square.
TileGrid build_complement_grid(std::span<const SimpleBraid> x,
                               std::span<const SimpleBraid> y);

struct GridQuotient {
  SimpleSequence x_over_y;
  SimpleSequence y_over_x;
  SimpleSequence lcm;
};
/// x/y (top row), y/x (left column) and lcm_L(x, y) (the diagonal from the
/// top-left corner), all as normal sequences without identity factors.
GridQuotient grid_quotient(std::span<const SimpleBraid> x,
                           std::span<const SimpleBraid> y);

// ---------------------------------------------------------------------------
// Positive normal sequences

/// Removes identity factors.
SimpleSequence strip_identities(SimpleSequence seq);
/// Normal form of r * s_1 ... s_p for a normal sequence s, computed by one
/// left-to-right row of P-tiles.
SimpleSequence left_multiply(const SimpleBraid& r, std::span<const SimpleBraid> seq,
                             NfStats* stats = nullptr);
/// Normal form of s_1 ... s_p * u for a normal sequence s, computed by one
/// right-to-left row of P-tiles. Delta factors stay in the sequence.
SimpleSequence right_multiply(std::span<const SimpleBraid> seq, const SimpleBraid& u,
                              NfStats* stats = nullptr);
/// Normal form of the product of arbitrary simple braids.
SimpleSequence positive_normal_form(std::span<const SimpleBraid> seq);

// ---------------------------------------------------------------------------
// Incremental normalization

GreedyNF greedy_mul_simple(const GreedyNF& nf, const SimpleBraid& u,
                           NfStats* stats = nullptr);
GreedyNF greedy_div_simple(const GreedyNF& nf, const SimpleBraid& u,
                           NfStats* stats = nullptr);
SymmetricNF symmetric_push(const SymmetricNF& nf, const SimpleBraid& u, int sign,
                           NfStats* stats = nullptr);

/// Rebuilds a symmetric normal form from any pair of simple sequences
/// representing den^-1 * num: removes identities, renormalizes, and divides
/// out common left divisors of the two heads until they are coprime.
SymmetricNF canonicalize(int n, SimpleSequence den, SimpleSequence num,
                         NfStats* stats = nullptr);

namespace detail {
/// The grid pass alone, before canonicalize; only identity factors removed.
SymmetricNF symmetric_push_grid(const SymmetricNF& nf, const SimpleBraid& u,
                                int sign, NfStats* stats = nullptr);
}  // namespace detail

/// A maximal same-sign run of letters grouped into one simple braid. For a
/// negative run the simple braid is the inverse of the run.
struct SimpleRun {
  SimpleBraid simple;
  int sign;
};
/// Groups letters greedily into simple runs, or one run per letter.
std::vector<SimpleRun> simple_runs(const BraidWord& w, bool group = true);

struct NfOptions {
  /// Feed whole simple runs instead of single letters; the result is the same.
  bool group_runs = true;
  NfStats* stats = nullptr;
};

GreedyNF greedy_nf(const BraidWord& w, const NfOptions& opts = {});
SymmetricNF symmetric_nf(const BraidWord& w, const NfOptions& opts = {});

enum class NormalFormKind { greedy, symmetric };

/// Compares two words through their normal forms. Words on different strand
/// counts are embedded into the larger braid group first.
bool equal(const BraidWord& a, const BraidWord& b,
           NormalFormKind kind = NormalFormKind::greedy);

BraidWord to_word(const GreedyNF& nf);
BraidWord to_word(const SymmetricNF& nf);
SymmetricNF to_symmetric(const GreedyNF& nf);

/// "(-2; ac, abcb, bcba, a)" and "(ab, bacb; bcba, a)".
std::string to_string(const GreedyNF& nf);
std::string to_string(const SymmetricNF& nf);

}  // namespace braidkit
