#pragma once

#include <braidkit/error.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// One generator letter sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr bool positive() const noexcept { return sign > 0; }

  friend constexpr bool operator==(Letter, Letter) noexcept = default;
};

constexpr Letter sigma(int i, int sign = 1) noexcept { return {i, sign}; }

enum class WordFormat { alpha, intlist };

/// An n-strand braid word. Every letter index lies in [1, n-1]; the empty word
/// stands for the unit braid.
class BraidWord {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  explicit BraidWord(int n = 2);
  BraidWord(int n, std::vector<Letter> letters);

  int strands() const noexcept { return n_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }

  void push_back(Letter l);
  void append(const BraidWord& other);

  bool is_positive() const noexcept;
  bool is_negative() const noexcept;
  /// Smallest generator index occurring in the word, or 0 for the empty word.
  int min_index() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

/// Alpha format: a..y for sigma_1..sigma_25, A..Y for their inverses.
/// Intlist format: whitespace-separated nonzero integers, k or -k.
/// Without `n` the strand count is 1 + the largest index, at least 2.
BraidWord parse(std::string_view text, WordFormat format = WordFormat::alpha,
                std::optional<int> n = std::nullopt);
std::string render(const BraidWord& w, WordFormat format = WordFormat::alpha);

BraidWord invert(const BraidWord& w);
/// sigma_i -> sigma_{n-i}, letter order and signs kept.
BraidWord flip(const BraidWord& w);
/// Letter order reversed, letters unchanged.
BraidWord reverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Same letters viewed in a larger braid group.
BraidWord embed(const BraidWord& w, int n);

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  return concat(a, b);
}

}  // namespace braidkit
