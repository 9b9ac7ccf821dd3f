#include "cli.hpp"

#include <braidkit/braidkit.hpp>
#include <braidkit/io.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <istream>
#include <optional>
#include <ostream>

namespace braidkit::cli {

namespace {

using nlohmann::json;

constexpr const char* kBenchSchema = "# braidkit-bench v1";

struct Globals {
  std::optional<int> n;
  WordFormat format = WordFormat::alpha;
  bool json = false;
  std::optional<std::size_t> budget;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

SolverBudgets budgets_of(const Globals& g) {
  SolverBudgets b;
  if (g.budget) b.redress_steps = b.handle_steps = *g.budget;
  return b;
}

std::vector<BraidWord> read_words(const Globals& g, const std::vector<std::string>& given,
                                  std::istream& in) {
  std::vector<std::string> texts = given;
  if (texts.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      texts.push_back(line);
    }
  }
  std::vector<BraidWord> words;
  words.reserve(texts.size());
  for (const auto& t : texts) words.push_back(parse(t, g.format, g.n));
  return words;
}

int do_normalize(const Globals& g, const std::vector<BraidWord>& words,
                 const std::string& form, Io io) {
  for (const auto& w : words) {
    if (form == "greedy") {
      const auto nf = greedy_nf(w);
      io.out << (g.json ? json(nf).dump() : to_string(nf)) << '\n';
    } else {
      const auto nf = symmetric_nf(w);
      io.out << (g.json ? json(nf).dump() : to_string(nf)) << '\n';
    }
  }
  return kExitOk;
}

int do_trivial(const Globals& g, const std::vector<BraidWord>& words, Method m, Io io) {
  int code = kExitOk;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto v = decide_trivial(words[k], m, budgets_of(g));
    if (v == Verdict::budget_exhausted) {
      io.err << "budget exhausted: " << method_name(m) << " on word " << k + 1 << '\n';
      return kExitError;
    }
    if (g.json) {
      io.out << json{{"word", render(words[k], g.format)},
                     {"method", method_name(m)},
                     {"verdict", verdict_name(v)}}
                    .dump()
             << '\n';
    } else {
      io.out << verdict_name(v) << '\n';
    }
    if (v == Verdict::nontrivial) code = kExitNo;
  }
  return code;
}

int do_equal(const Globals& g, const std::vector<BraidWord>& words,
             const std::string& form, Io io) {
  if (words.size() != 2) {
    io.err << "error: equal takes exactly two words\n";
    return kExitError;
  }
  const auto kind = form == "greedy" ? NormalFormKind::greedy : NormalFormKind::symmetric;
  const bool same = equal(words[0], words[1], kind);
  io.out << (g.json ? json{{"equal", same}}.dump() : std::string(same ? "true" : "false"))
         << '\n';
  return same ? kExitOk : kExitNo;
}

int do_coords(const Globals& g, const std::vector<BraidWord>& words, Io io) {
  for (const auto& w : words) {
    const auto c = coords(w);
    io.out << (g.json ? json(c).dump() : to_string(c)) << '\n';
  }
  return kExitOk;
}

int do_redress(const Globals& g, const std::vector<BraidWord>& words, bool left, Io io) {
  RedressOptions opts;
  if (g.budget) opts.step_budget = *g.budget;
  for (const auto& w : words) {
    BraidWord num(w.strands()), den(w.strands());
    std::size_t steps = 0;
    if (left) {
      auto f = redress_left(w, opts);
      num = std::move(f.numerator);
      den = std::move(f.denominator);
      steps = f.steps;
    } else {
      auto f = redress_right(w, opts);
      num = std::move(f.numerator);
      den = std::move(f.denominator);
      steps = f.steps;
    }
    if (g.json) {
      io.out << json{{"form", left ? "left" : "right"},
                     {"numerator", render(num, g.format)},
                     {"denominator", render(den, g.format)},
                     {"steps", steps}}
                    .dump()
             << '\n';
    } else {
      // Reading order of the fraction: u v^-1 prints u first, v^-1 u prints v first.
      const auto& first = left ? den : num;
      const auto& second = left ? num : den;
      io.out << render(first, g.format) << '\n' << render(second, g.format) << '\n';
    }
  }
  return kExitOk;
}

int do_reduce(const Globals& g, const std::vector<BraidWord>& words, bool trace, Io io) {
  ReductionOptions opts;
  if (g.budget) opts.step_budget = *g.budget;
  for (const auto& w : words) {
    std::vector<std::string> lines;
    if (trace) {
      opts.on_step = [&](const BraidWord& cur, const HandleSpan& h) {
        lines.push_back(render_with_handle(cur, h, g.format));
      };
    }
    const auto r = handle_reduce(w, opts);
    if (g.json) {
      json j{{"word", render(r.word, g.format)}, {"steps", r.steps}};
      if (trace) j["trace"] = lines;
      io.out << j.dump() << '\n';
    } else {
      for (const auto& l : lines) io.out << l << '\n';
      io.out << render(r.word, g.format) << '\n';
    }
  }
  return kExitOk;
}

int do_shorten(const Globals& g, const std::vector<BraidWord>& words, Io io) {
  ReductionOptions opts;
  if (g.budget) opts.step_budget = *g.budget;
  for (const auto& w : words) {
    const auto r = shorten(w, opts);
    if (g.json) {
      io.out << json{{"word", render(r.word, g.format)},
                     {"length", r.word.size()},
                     {"steps", r.steps}}
                    .dump()
             << '\n';
    } else {
      io.out << render(r.word, g.format) << '\n';
    }
  }
  return kExitOk;
}

struct BenchArgs {
  std::size_t len = 64;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> methods;
};

int do_bench(const Globals& g, const BenchArgs& a, Io io) {
  std::vector<Method> methods;
  if (a.methods.empty()) {
    methods.assign(kAllMethods.begin(), kAllMethods.end());
  } else {
    for (const auto& name : a.methods) {
      const auto m = parse_method(name);
      if (!m) {
        io.err << "error: unknown method '" << name << "'\n";
        return kExitError;
      }
      methods.push_back(*m);
    }
  }
  const int n = g.n.value_or(4);
  if (n < 2) {
    io.err << "error: --n must be at least 2\n";
    return kExitError;
  }
  std::vector<BraidWord> words;
  words.reserve(a.count);
  for (std::size_t k = 0; k < a.count; ++k) words.push_back(random_word(n, a.len, a.seed + k));

  io.out << kBenchSchema << '\n' << "method,n,len,count,total_steps,elapsed_ns\n";
  for (const auto m : methods) {
    std::size_t steps = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& w : words) steps += run_method(w, m, budgets_of(g)).steps;
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    io.out << method_name(m) << ',' << n << ',' << a.len << ',' << a.count << ',' << steps
           << ',' << ns << '\n';
  }
  return kExitOk;
}

int do_fuzz(const Globals& g, FuzzParams p, Io io) {
  p.budgets = budgets_of(g);
  const auto report = cross_check(p);
  io.out << json(report).dump(2) << '\n';
  return report.passed() ? kExitOk : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Braid group word problem toolkit", "braid"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "alpha";
  app.add_option("--n", g.n, "Strand count (default: inferred from the word)")
      ->check(CLI::Range(2, 1 << 20));
  app.add_option("--format", format, "Word format")
      ->check(CLI::IsMember({"alpha", "intlist"}));
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--budget", g.budget, "Step budget for redressing and handle reduction")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> texts;
  auto words_opt = [&texts](CLI::App* sub) {
    sub->add_option("words", texts, "Braid words (default: stdin, one per line)");
  };

  std::string form = "greedy";
  auto* normalize = app.add_subcommand("normalize", "Print a normal form");
  normalize->add_option("--form", form)->check(CLI::IsMember({"greedy", "symmetric"}));
  words_opt(normalize);

  std::string method = "greedy";
  auto* trivial = app.add_subcommand(
      "trivial", "Decide triviality (exit 0 trivial, 1 nontrivial, 2 error)");
  std::vector<std::string> method_names;
  for (const auto m : kAllMethods) method_names.emplace_back(method_name(m));
  trivial->add_option("--method", method)->check(CLI::IsMember(method_names));
  words_opt(trivial);

  auto* eq = app.add_subcommand("equal", "Compare two words (exit 0 equal, 1 not)");
  eq->add_option("--form", form)->check(CLI::IsMember({"greedy", "symmetric"}));
  words_opt(eq);

  auto* crd = app.add_subcommand("coords", "Dynnikov coordinates");
  words_opt(crd);

  bool left = false;
  auto* redress = app.add_subcommand("redress", "Fraction by word redressing");
  redress->add_flag("--left", left, "Left fraction v^-1 u instead of u v^-1");
  words_opt(redress);

  bool trace = false;
  auto* reduce = app.add_subcommand("reduce", "Handle reduction");
  reduce->add_flag("--trace", trace, "Print every word with its handle bracketed");
  words_opt(reduce);

  auto* shrt = app.add_subcommand("shorten", "Iterated handle reduction");
  words_opt(shrt);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "CSV timings on random words (--n, default 4)");
  bench->add_option("--len", bench_args.len);
  bench->add_option("--count", bench_args.count);
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--methods", bench_args.methods)->delimiter(',');

  FuzzParams fuzz_params;
  int n_max = fuzz_params.n_max;
  auto* fuzz = app.add_subcommand("fuzz", "Cross-check all triviality procedures");
  fuzz->add_option("--seed", fuzz_params.seed);
  fuzz->add_option("--count", fuzz_params.count);
  fuzz->add_option("--n-max", n_max)->check(CLI::Range(2, 64));
  fuzz->add_option("--len-max", fuzz_params.len_max);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }
  g.format = format == "intlist" ? WordFormat::intlist : WordFormat::alpha;
  Io io{in, out, err};

  try {
    if (*bench) return do_bench(g, bench_args, io);
    if (*fuzz) {
      fuzz_params.n_max = n_max;
      return do_fuzz(g, fuzz_params, io);
    }
    const auto words = read_words(g, texts, in);
    if (*normalize) return do_normalize(g, words, form, io);
    if (*trivial) return do_trivial(g, words, *parse_method(method), io);
    if (*eq) return do_equal(g, words, form, io);
    if (*crd) return do_coords(g, words, io);
    if (*redress) return do_redress(g, words, left, io);
    if (*reduce) return do_reduce(g, words, trace, io);
    if (*shrt) return do_shorten(g, words, io);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace braidkit::cli
