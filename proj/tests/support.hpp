#pragma once

// Seeded generators shared by the property tests.

#include <braidkit/braidkit.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace braidkit::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline BraidWord random_word(Rng& rng, int n, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len)));
  return braidkit::random_word(n, len, rng());
}

inline BraidWord random_positive_word(Rng& rng, int n, std::size_t max_len) {
  BraidWord w(n);
  const int len = uniform(rng, 0, static_cast<int>(max_len));
  for (int k = 0; k < len; ++k) w.push_back(sigma(uniform(rng, 1, n - 1)));
  return w;
}

inline SimpleBraid random_simple(Rng& rng, int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return SimpleBraid(Permutation(image));
}

/// A normal sequence without identity factors: the greedy factors of a
/// random positive word (Delta powers folded back in as factors).
inline SimpleSequence random_normal_sequence(Rng& rng, int n, std::size_t max_len) {
  return positive_normal_form(
      [&] {
        SimpleSequence seq;
        const int len = uniform(rng, 0, static_cast<int>(max_len));
        for (int k = 0; k < len; ++k) seq.push_back(random_simple(rng, n));
        return seq;
      }());
}

/// Positive word spelling a sequence of simples.
inline BraidWord word_of_sequence(int n, const SimpleSequence& seq) {
  BraidWord w(n);
  for (const auto& s : seq) w.append(word_of_simple(s));
  return w;
}

}  // namespace braidkit::testing
