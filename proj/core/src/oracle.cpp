#include <braidkit/oracle.hpp>

#include <braidkit/dynnikov.hpp>
#include <braidkit/gridnf.hpp>
#include <braidkit/handle.hpp>
#include <braidkit/redress.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace braidkit {

namespace {

constexpr std::array<std::string_view, kAllMethods.size()> kMethodNames = {
    "greedy", "symmetric", "redress", "redress-left", "handle", "dynnikov"};

// Weak-order divisibility of simples via lengths: a <=_L b iff
// len(a) + len(a^-1 b) == len(b).
bool weak_left_divides(const Permutation& a, const Permutation& b) {
  return a.inversions() + (a.inverse() * b).inversions() == b.inversions();
}

bool weak_right_divides(const Permutation& a, const Permutation& b) {
  return a.inversions() + (b * a.inverse()).inversions() == b.inversions();
}

void require_small(const SimpleBraid& s, int limit) {
  if (s.strands() > limit) {
    throw InvalidArgument("brute force limited to n <= " + std::to_string(limit));
  }
}

}  // namespace

std::string_view method_name(Method m) {
  return kMethodNames[static_cast<std::size_t>(m)];
}

std::optional<Method> parse_method(std::string_view name) {
  for (std::size_t k = 0; k < kMethodNames.size(); ++k) {
    if (kMethodNames[k] == name) return kAllMethods[k];
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::trivial:
      return "trivial";
    case Verdict::nontrivial:
      return "nontrivial";
    case Verdict::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

MethodRun run_method(const BraidWord& w, Method m, const SolverBudgets& budgets) {
  auto verdict = [](bool trivial) {
    return trivial ? Verdict::trivial : Verdict::nontrivial;
  };
  try {
    switch (m) {
      case Method::greedy:
      case Method::symmetric: {
        NfStats stats;
        NfOptions opts;
        opts.stats = &stats;
        const bool unit = m == Method::greedy ? greedy_nf(w, opts).is_unit()
                                              : symmetric_nf(w, opts).is_unit();
        return {verdict(unit), stats.tiles};
      }
      case Method::redress:
      case Method::redress_left: {
        RedressOptions opts;
        opts.step_budget = budgets.redress_steps;
        const auto variant = m == Method::redress ? RedressVariant::double_right
                                                  : RedressVariant::right_then_left;
        const auto r = trivial_by_redress(w, variant, opts);
        return {verdict(r.trivial), r.steps};
      }
      case Method::handle: {
        ReductionOptions opts;
        opts.step_budget = budgets.handle_steps;
        const auto r = handle_reduce(w, opts);
        return {verdict(r.word.empty()), r.steps};
      }
      case Method::dynnikov:
        return {verdict(trivial_by_coords(w)), w.size()};
    }
  } catch (const BudgetExhausted& e) {
    return {Verdict::budget_exhausted, e.budget()};
  }
  return {Verdict::budget_exhausted, 0};
}

BraidWord random_word(int n, std::size_t length, std::uint64_t seed) {
  BraidWord w(n);
  std::mt19937_64 gen(seed);
  const auto choices = static_cast<std::uint64_t>(2 * (n - 1));
  for (std::size_t k = 0; k < length; ++k) {
    const auto r = gen() % choices;
    w.push_back(sigma(static_cast<int>(r / 2) + 1, r % 2 == 0 ? 1 : -1));
  }
  return w;
}

std::vector<SimpleBraid> all_simples(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<SimpleBraid> out;
  do {
    out.emplace_back(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

SimpleBraid brute_head(const SimpleBraid& t1, const SimpleBraid& t2) {
  require_small(t1, 5);
  if (t1.strands() != t2.strands()) throw InvalidArgument("strand count mismatch");
  const auto product = word_of_simple(t1) * word_of_simple(t2);
  std::optional<SimpleBraid> best;
  for (const auto& s : all_simples(t1.strands())) {
    if (best && s.length() <= best->length()) continue;
    if (left_divides_words(word_of_simple(s), product)) best = s;
  }
  return *best;
}

CTile brute_c_tile(const SimpleBraid& s, const SimpleBraid& t) {
  require_small(s, 6);
  if (s.strands() != t.strands()) throw InvalidArgument("strand count mismatch");
  std::optional<Permutation> lcm;
  for (const auto& m : all_simples(s.strands())) {
    if (lcm && m.length() >= lcm->inversions()) continue;
    if (weak_right_divides(s.perm(), m.perm()) &&
        weak_right_divides(t.perm(), m.perm())) {
      lcm = m.perm();
    }
  }
  return {SimpleBraid(*lcm * t.perm().inverse()),
          SimpleBraid(*lcm * s.perm().inverse())};
}

SimpleBraid brute_gcd_left(const SimpleBraid& s, const SimpleBraid& t) {
  require_small(s, 6);
  if (s.strands() != t.strands()) throw InvalidArgument("strand count mismatch");
  std::optional<SimpleBraid> best;
  for (const auto& g : all_simples(s.strands())) {
    if (best && g.length() <= best->length()) continue;
    if (weak_left_divides(g.perm(), s.perm()) &&
        weak_left_divides(g.perm(), t.perm())) {
      best = g;
    }
  }
  return *best;
}

void FuzzReport::merge(FuzzReport other) {
  cases_run += other.cases_run;
  std::move(other.disagreements.begin(), other.disagreements.end(),
            std::back_inserter(disagreements));
  std::move(other.budget_exhausted.begin(), other.budget_exhausted.end(),
            std::back_inserter(budget_exhausted));
}

FuzzReport check_word(const BraidWord& w, bool forced_trivial,
                      const SolverBudgets& budgets) {
  FuzzReport report;
  report.cases_run = 1;
  Disagreement d{w, forced_trivial, {}};
  bool exhausted = false;
  bool saw_trivial = false;
  bool saw_nontrivial = false;
  for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
    d.verdicts[k] = decide_trivial(w, kAllMethods[k], budgets);
    exhausted |= d.verdicts[k] == Verdict::budget_exhausted;
    saw_trivial |= d.verdicts[k] == Verdict::trivial;
    saw_nontrivial |= d.verdicts[k] == Verdict::nontrivial;
  }
  if (exhausted) report.budget_exhausted.push_back(w);
  if ((saw_trivial && saw_nontrivial) || (forced_trivial && saw_nontrivial)) {
    report.disagreements.push_back(std::move(d));
  }
  return report;
}

FuzzReport cross_check(const FuzzParams& params) {
  if (params.n_min < 2 || params.n_max < params.n_min ||
      params.len_max < params.len_min) {
    throw InvalidArgument("empty fuzz parameter range");
  }
  FuzzReport report;
  std::mt19937_64 master(params.seed);
  for (std::size_t k = 0; k < params.count; ++k) {
    const int n = params.n_min + static_cast<int>(
        master() % static_cast<std::uint64_t>(params.n_max - params.n_min + 1));
    const std::size_t len = params.len_min + static_cast<std::size_t>(
        master() % (params.len_max - params.len_min + 1));
    const auto w = random_word(n, len, master());
    report.merge(check_word(w, false, params.budgets));

    BraidWord twin(n);
    if (k % 2 == 0) {
      twin = to_word(greedy_nf(w));
    } else {
      RedressOptions opts;
      opts.step_budget = params.budgets.redress_steps;
      twin = trivial_by_redress(w, RedressVariant::right_then_left, opts).residue;
    }
    report.merge(check_word(w * invert(twin), true, params.budgets));
  }
  return report;
}

}  // namespace braidkit
