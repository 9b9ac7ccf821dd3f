#pragma once

#include <braidkit/simple.hpp>
#include <braidkit/word.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// The six triviality procedures compared by the differential checker.
enum class Method {
  greedy,
  symmetric,
  redress,       // double right redressing
  redress_left,  // right then left redressing
  handle,
  dynnikov,
};

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::greedy,       Method::symmetric, Method::redress,
    Method::redress_left, Method::handle,    Method::dynnikov};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

enum class Verdict { trivial, nontrivial, budget_exhausted };

std::string_view verdict_name(Verdict v);

struct SolverBudgets {
  std::size_t redress_steps = 50'000'000;
  std::size_t handle_steps = 1'000'000;
};

struct MethodRun {
  Verdict verdict = Verdict::nontrivial;
  /// Work done, in the procedure's own unit: tiles for the normal forms,
  /// rewrites for redressing, reductions for handles, letters for Dynnikov.
  std::size_t steps = 0;
};

/// Runs one procedure; budget exhaustion becomes Verdict::budget_exhausted.
MethodRun run_method(const BraidWord& w, Method m, const SolverBudgets& budgets = {});

inline Verdict decide_trivial(const BraidWord& w, Method m,
                              const SolverBudgets& budgets = {}) {
  return run_method(w, m, budgets).verdict;
}

/// Uniform letters over the 2(n-1) signed generators, drawn from a
/// std::mt19937_64 seeded with `seed` (letter = draw mod 2(n-1)).
BraidWord random_word(int n, std::size_t length, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Brute-force references for small n

/// All n! simple braids in lexicographic order of their permutations.
std::vector<SimpleBraid> all_simples(int n);

/// Largest simple left divisor of t1 t2 by enumeration; divisibility is
/// decided on words by redressing. n <= 5.
SimpleBraid brute_head(const SimpleBraid& t1, const SimpleBraid& t2);
/// Left complements from the shortest simple common left multiple, with
/// divisibility read off permutation lengths. n <= 6.
CTile brute_c_tile(const SimpleBraid& s, const SimpleBraid& t);
/// Longest common simple left divisor by enumeration. n <= 6.
SimpleBraid brute_gcd_left(const SimpleBraid& s, const SimpleBraid& t);

// ---------------------------------------------------------------------------
// Differential checking

struct Disagreement {
  BraidWord word;
  /// Whether the word was built to be trivial.
  bool forced_trivial = false;
  std::array<Verdict, kAllMethods.size()> verdicts{};
};

struct FuzzReport {
  std::size_t cases_run = 0;
  std::vector<Disagreement> disagreements;
  std::vector<BraidWord> budget_exhausted;

  bool passed() const noexcept { return disagreements.empty(); }
  /// Appends another report; merging is associative.
  void merge(FuzzReport other);
};

struct FuzzParams {
  int n_min = 2;
  int n_max = 6;
  std::size_t len_min = 0;
  std::size_t len_max = 64;
  std::size_t count = 100;
  std::uint64_t seed = 42;
  SolverBudgets budgets;
};

/// Runs all six procedures on `w` and records a disagreement when they do
/// not agree, or when `forced_trivial` and any of them says nontrivial.
FuzzReport check_word(const BraidWord& w, bool forced_trivial = false,
                      const SolverBudgets& budgets = {});

/// For every generated word w, also checks the trivial companion
/// w * invert(w') where w' is another word for the same braid (the greedy
/// normal form word or the geodesic redressing residue, alternately).
FuzzReport cross_check(const FuzzParams& params);

}  // namespace braidkit
