#pragma once

#include <braidkit/word.hpp>

#include <cstddef>
#include <functional>

namespace braidkit {

/// Which negative-positive pattern the rewriting engine picks next. The final
/// fraction does not depend on the choice; traces and step counts do.
enum class RedressStrategy { leftmost, rightmost };

struct RedressOptions {
  RedressStrategy strategy = RedressStrategy::leftmost;
  std::size_t step_budget = 50'000'000;
  /// Called with the current word after every rewrite step.
  std::function<void(const BraidWord&)> on_step;
};

/// w == numerator * denominator^-1, both parts positive.
struct RightFraction {
  BraidWord numerator;
  BraidWord denominator;
  std::size_t steps = 0;
};

/// w == denominator^-1 * numerator, both parts positive.
struct LeftFraction {
  BraidWord denominator;
  BraidWord numerator;
  std::size_t steps = 0;
};

/// Rewrites every sigma_i^-1 sigma_j until the word is positive-negative:
///   sigma_i^-1 sigma_i -> empty
///   sigma_i^-1 sigma_j -> sigma_j sigma_i^-1                      |i-j| >= 2
///   sigma_i^-1 sigma_j -> sigma_j sigma_i sigma_j^-1 sigma_i^-1   |i-j| == 1
RightFraction redress_right(const BraidWord& w, const RedressOptions& opts = {});

/// Mirror image of redress_right: reverse, redress right, reverse. The
/// strategy is read in the orientation of `w`, so `leftmost` rewrites the
/// leftmost positive-negative pattern of the original word.
LeftFraction redress_left(const BraidWord& w, const RedressOptions& opts = {});

enum class RedressVariant {
  /// Redress w to u v^-1, then redress v^-1 u.
  double_right,
  /// Redress w to u v^-1, then left-redress u v^-1. The residue is a
  /// geodesic fraction equivalent to w.
  right_then_left,
};

struct RedressVerdict {
  bool trivial = false;
  BraidWord residue;
  std::size_t steps = 0;
};

/// The options' `on_step` callback sees both passes; for `double_right` the
/// swapped word v^-1 u is reported once before the second pass starts.
RedressVerdict trivial_by_redress(const BraidWord& w, RedressVariant variant,
                                  const RedressOptions& opts = {});

/// For positive words x, y: whether x left-divides y in the positive braid
/// monoid, decided by redressing x^-1 y and testing the negative part.
bool left_divides_words(const BraidWord& x, const BraidWord& y);

}  // namespace braidkit
