#pragma once

#include <braidkit/word.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// A permutation f of {1..n} in one-line notation (f(1), ..., f(n)).
///
/// Composition follows the braid convention pi(xy) = pi(x) o pi(y), with
/// (f o g)(i) = f(g(i)): the strand ending at position i starts at f(i).
/// Right multiplication by sigma_i swaps the entries at positions i, i+1;
/// left multiplication swaps the values i, i+1.
class Permutation {
 public:
  static Permutation identity(int n);
  /// omega_n(i) = n - i + 1.
  static Permutation reversal(int n);
  /// Parses "(2,1,4,3)" or "2 1 4 3".
  static Permutation parse(std::string_view text);

  /// `image` holds f(1), ..., f(n); throws unless it is a bijection.
  explicit Permutation(std::vector<int> image);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  /// f(i) for 1 <= i <= n.
  int operator()(int i) const { return image_[i - 1]; }
  const std::vector<int>& image() const noexcept { return image_; }

  Permutation inverse() const;
  std::size_t inversions() const noexcept;
  bool is_identity() const noexcept;

  /// this o tau_i.
  void swap_positions(int i) { std::swap(image_[i - 1], image_[i]); }
  /// tau_i o this.
  void swap_values(int i);

  std::string to_string() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation() = default;
  std::vector<int> image_;
};

enum class Side { left, right };

/// A simple braid: a divisor of the half twist, identified with its
/// permutation (strands cross at most once, positively).
class SimpleBraid {
 public:
  static SimpleBraid identity(int n) { return SimpleBraid(Permutation::identity(n)); }
  static SimpleBraid atom(int n, int i);

  explicit SimpleBraid(Permutation perm) : perm_(std::move(perm)) {}

  const Permutation& perm() const noexcept { return perm_; }
  int strands() const noexcept { return perm_.size(); }
  /// Number of crossings, i.e. the length of any positive word for it.
  std::size_t length() const noexcept { return perm_.inversions(); }
  bool is_identity() const noexcept { return perm_.is_identity(); }
  bool is_delta() const noexcept;

  friend bool operator==(const SimpleBraid&, const SimpleBraid&) = default;
  friend auto operator<=>(const SimpleBraid&, const SimpleBraid&) = default;

 private:
  Permutation perm_;
};

/// pi(w) for a positive word.
Permutation perm_of_positive_word(const BraidWord& w);
/// The simple braid spelled by a positive word; throws if the word is not
/// positive or does not represent a simple braid.
SimpleBraid simple_of_word(const BraidWord& w);
/// Canonical positive word: repeatedly strip the smallest left atom.
BraidWord word_of_simple(const SimpleBraid& s);
/// Canonical word rendered in alpha notation, or the permutation when the
/// strand count is too large for letters.
std::string to_string(const SimpleBraid& s);

/// Left: recoils {i : f^-1(i) > f^-1(i+1)}. Right: descents {i : f(i) > f(i+1)}.
std::vector<int> divisor_atoms(const SimpleBraid& s, Side side);
bool has_left_atom(const SimpleBraid& s, int i);
bool has_right_atom(const SimpleBraid& s, int i);

SimpleBraid delta(int n);
/// Right: s* with s s* = delta. Left: *s with *s s = delta.
SimpleBraid dual(const SimpleBraid& s, Side side);
/// Conjugation by delta: sigma_i -> sigma_{n-i}.
SimpleBraid flip_simple(const SimpleBraid& s);

bool left_divides(const SimpleBraid& s, const SimpleBraid& t);
SimpleBraid gcd_left(const SimpleBraid& s, const SimpleBraid& t);

/// Left complements: s_over_t * t == t_over_s * s == lcm_L(s, t).
struct CTile {
  SimpleBraid s_over_t;
  SimpleBraid t_over_s;

  friend bool operator==(const CTile&, const CTile&) = default;
};
CTile c_tile(const SimpleBraid& s, const SimpleBraid& t);

/// head * tail == t1 * t2 with (head, tail) normal; head is the largest
/// simple left divisor of t1 t2.
struct PTile {
  SimpleBraid head;
  SimpleBraid tail;
};
PTile normalize_pair(const SimpleBraid& t1, const SimpleBraid& t2);

/// Every recoil of `next` is a descent of `prev`.
bool is_normal_pair(const SimpleBraid& prev, const SimpleBraid& next);

/// The tile primitives above memoize results for n <= 6. Disabling the cache
/// is meant for tests that want the uncached code paths.
void set_tile_cache_enabled(bool enabled);
bool tile_cache_enabled();

/// Inverse of to_string for alpha words or permutation text.
SimpleBraid parse_simple(std::string_view text, int n);

}  // namespace braidkit
