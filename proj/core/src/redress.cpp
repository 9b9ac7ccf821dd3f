#include <braidkit/redress.hpp>

#include <cstdlib>
#include <utility>

namespace braidkit {

namespace {

bool is_pattern(const std::vector<Letter>& w, std::ptrdiff_t k) {
  return k >= 0 && k + 1 < static_cast<std::ptrdiff_t>(w.size()) &&
         w[k].sign < 0 && w[k + 1].sign > 0;
}

// Rewrites the pattern at k and returns the length of the replacement.
std::ptrdiff_t rewrite_at(std::vector<Letter>& w, std::ptrdiff_t k) {
  const int i = w[k].index;
  const int j = w[k + 1].index;
  if (i == j) {
    w.erase(w.begin() + k, w.begin() + k + 2);
    return 0;
  }
  if (std::abs(i - j) >= 2) {
    w[k] = sigma(j, 1);
    w[k + 1] = sigma(i, -1);
    return 2;
  }
  w[k] = sigma(j, 1);
  w[k + 1] = sigma(i, 1);
  const Letter tail[] = {sigma(j, -1), sigma(i, -1)};
  w.insert(w.begin() + k + 2, std::begin(tail), std::end(tail));
  return 4;
}

RightFraction split_fraction(int n, const std::vector<Letter>& w,
                             std::size_t steps) {
  std::size_t split = 0;
  while (split < w.size() && w[split].sign > 0) ++split;
  BraidWord numerator(n, {w.begin(), w.begin() + split});
  BraidWord negative(n, {w.begin() + split, w.end()});
  return {std::move(numerator), invert(negative), steps};
}

}  // namespace

RightFraction redress_right(const BraidWord& input, const RedressOptions& opts) {
  const int n = input.strands();
  std::vector<Letter> w = input.letters();
  std::size_t steps = 0;

  auto after_step = [&] {
    if (++steps > opts.step_budget) {
      throw BudgetExhausted("redressing", opts.step_budget);
    }
    if (opts.on_step) opts.on_step(BraidWord(n, w));
  };

  if (opts.strategy == RedressStrategy::leftmost) {
    // Everything left of the cursor is already positive-negative-free.
    std::ptrdiff_t k = 0;
    while (true) {
      while (k + 1 < static_cast<std::ptrdiff_t>(w.size()) && !is_pattern(w, k)) {
        ++k;
      }
      if (!is_pattern(w, k)) break;
      rewrite_at(w, k);
      after_step();
      k = k > 0 ? k - 1 : 0;
    }
  } else {
    // Everything right of the cursor is already free of patterns.
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(w.size()) - 2;
    while (true) {
      while (k >= 0 && !is_pattern(w, k)) --k;
      if (k < 0) break;
      const auto len = rewrite_at(w, k);
      after_step();
      k = std::min<std::ptrdiff_t>(k + len - 1,
                                   static_cast<std::ptrdiff_t>(w.size()) - 2);
    }
  }
  return split_fraction(n, w, steps);
}

LeftFraction redress_left(const BraidWord& w, const RedressOptions& opts) {
  RedressOptions mirrored;
  mirrored.strategy = opts.strategy == RedressStrategy::leftmost
                          ? RedressStrategy::rightmost
                          : RedressStrategy::leftmost;
  mirrored.step_budget = opts.step_budget;
  if (opts.on_step) {
    mirrored.on_step = [&](const BraidWord& r) { opts.on_step(reverse(r)); };
  }
  auto r = redress_right(reverse(w), mirrored);
  return {reverse(r.denominator), reverse(r.numerator), r.steps};
}

RedressVerdict trivial_by_redress(const BraidWord& w, RedressVariant variant,
                                  const RedressOptions& opts) {
  auto first = redress_right(w, opts);
  if (variant == RedressVariant::double_right) {
    auto swapped = invert(first.denominator) * first.numerator;
    if (opts.on_step) opts.on_step(swapped);
    auto second = redress_right(swapped, opts);
    auto residue = second.numerator * invert(second.denominator);
    const bool trivial = residue.empty();
    return {trivial, std::move(residue), first.steps + second.steps};
  }
  auto fraction = first.numerator * invert(first.denominator);
  auto second = redress_left(fraction, opts);
  auto residue = invert(second.denominator) * second.numerator;
  const bool trivial = residue.empty();
  return {trivial, std::move(residue), first.steps + second.steps};
}

bool left_divides_words(const BraidWord& x, const BraidWord& y) {
  if (!x.is_positive() || !y.is_positive()) {
    throw InvalidArgument("divisibility test needs positive words");
  }
  return redress_right(invert(x) * y).denominator.empty();
}

}  // namespace braidkit
