#pragma once

#include <braidkit/word.hpp>

#include <cstddef>
#include <functional>
#include <optional>

namespace braidkit {

/// A sigma_index-handle occupying letters [start, end] of a word:
/// sigma_i^sign ... sigma_i^-sign with no sigma_i or lower letter in between,
/// and all sigma_{i+1} letters in between carrying the same sign.
struct HandleSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  int index = 1;
  int sign = 1;
  /// Sign of the enclosed sigma_{i+1} letters, 0 when there are none.
  int inner_sign = 0;

  friend bool operator==(const HandleSpan&, const HandleSpan&) = default;
};

enum class HandleStrategy {
  /// Take the leftmost pair of consecutive, opposite-sign letters of the
  /// minimal index; if the enclosed sigma_{i+1} letters have mixed signs,
  /// descend into the enclosed subword with index i+1.
  leftmost_permitted,
};

std::optional<HandleSpan> find_handle(
    const BraidWord& w, HandleStrategy strategy = HandleStrategy::leftmost_permitted);

/// Throws InvalidArgument when `h` is not a handle of `w`.
void validate_handle(const BraidWord& w, const HandleSpan& h);

/// Replaces the handle by its reduct: the outer letters are dropped and each
/// sigma_{i+1}^d becomes sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
BraidWord reduce_once(const BraidWord& w, const HandleSpan& h);

struct ReductionOptions {
  HandleStrategy strategy = HandleStrategy::leftmost_permitted;
  std::size_t step_budget = 1'000'000;
  /// Called before every reduction with the current word and its handle.
  std::function<void(const BraidWord&, const HandleSpan&)> on_step;
};

struct ReductionResult {
  BraidWord word;
  std::size_t steps = 0;
};

/// Reduces handles until none is left for the minimal index. The result is
/// empty exactly when `w` represents the unit braid.
ReductionResult handle_reduce(const BraidWord& w, const ReductionOptions& opts = {});

/// Leftmost-closing handle of any index, or nullopt for a handle-free word.
std::optional<HandleSpan> find_any_handle(const BraidWord& w);

/// Reduces handles of every index until the word is handle-free.
ReductionResult handle_reduce_all(const BraidWord& w, const ReductionOptions& opts = {});

/// Iterated reduction: handle_reduce, then full reduction alternately on the
/// flip image (flipped back) and on the word itself, while the length
/// strictly decreases. Never longer than handle_reduce(w), nor than w
/// itself (w is returned unchanged when reduction only lengthens it).
ReductionResult shorten(const BraidWord& w, const ReductionOptions& opts = {});

/// "aBa[bcB]ABAbbCB".
std::string render_with_handle(const BraidWord& w, const HandleSpan& h,
                               WordFormat format = WordFormat::alpha);

}  // namespace braidkit
