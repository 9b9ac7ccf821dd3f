#include <braidkit/handle.hpp>

namespace braidkit {

namespace {

std::optional<HandleSpan> search(const std::vector<Letter>& w, std::size_t lo,
                                 std::size_t hi, int i) {
  std::optional<std::size_t> prev;
  for (std::size_t p = lo; p < hi; ++p) {
    if (w[p].index != i) continue;
    if (prev && w[*prev].sign != w[p].sign) {
      int inner = 0;
      bool mixed = false;
      for (std::size_t q = *prev + 1; q < p; ++q) {
        if (w[q].index != i + 1) continue;
        if (inner == 0) {
          inner = w[q].sign;
        } else if (w[q].sign != inner) {
          mixed = true;
        }
      }
      if (!mixed) return HandleSpan{*prev, p, i, w[*prev].sign, inner};
      // Mixed inner signs always hide a critical pair of index i+1 inside.
      return search(w, *prev + 1, p, i + 1);
    }
    prev = p;
  }
  return std::nullopt;
}

}  // namespace

std::optional<HandleSpan> find_handle(const BraidWord& w, HandleStrategy) {
  const int i = w.min_index();
  if (i == 0) return std::nullopt;
  return search(w.letters(), 0, w.size(), i);
}

void validate_handle(const BraidWord& w, const HandleSpan& h) {
  if (h.start >= h.end || h.end >= w.size()) {
    throw InvalidArgument("handle span out of range");
  }
  const int i = h.index;
  if (w[h.start] != sigma(i, h.sign) || w[h.end] != sigma(i, -h.sign)) {
    throw InvalidArgument("handle span does not start and end with sigma_i^(+-e)");
  }
  int inner = 0;
  for (std::size_t q = h.start + 1; q < h.end; ++q) {
    const auto& l = w[q];
    if (l.index < i || l.index == i) {
      throw InvalidArgument("handle encloses a letter of index <= i");
    }
    if (l.index == i + 1) {
      if (inner != 0 && inner != l.sign) {
        throw InvalidArgument("handle encloses sigma_{i+1} letters of both signs");
      }
      inner = l.sign;
    }
  }
  if (inner != h.inner_sign) throw InvalidArgument("handle inner sign mismatch");
}

BraidWord reduce_once(const BraidWord& w, const HandleSpan& h) {
  validate_handle(w, h);
  const int i = h.index;
  const int e = h.sign;
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h.start));
  out.reserve(w.size() + 2 * static_cast<std::size_t>(h.end - h.start));
  for (std::size_t q = h.start + 1; q < h.end; ++q) {
    const auto& l = w[q];
    if (l.index == i + 1) {
      out.push_back(sigma(i + 1, -e));
      out.push_back(sigma(i, l.sign));
      out.push_back(sigma(i + 1, e));
    } else {
      out.push_back(l);
    }
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(h.end) + 1, w.end());
  return BraidWord(w.strands(), std::move(out));
}

ReductionResult handle_reduce(const BraidWord& w, const ReductionOptions& opts) {
  ReductionResult result{w, 0};
  while (auto h = find_handle(result.word, opts.strategy)) {
    if (result.steps == opts.step_budget) {
      throw BudgetExhausted("handle reduction", opts.step_budget);
    }
    if (opts.on_step) opts.on_step(result.word, *h);
    result.word = reduce_once(result.word, *h);
    ++result.steps;
  }
  return result;
}

std::optional<HandleSpan> find_any_handle(const BraidWord& w) {
  const auto& l = w.letters();
  for (std::size_t q = 0; q < l.size(); ++q) {
    const int i = l[q].index;
    // The nearest sigma_i to the left, provided nothing lower sits in between.
    std::ptrdiff_t back = static_cast<std::ptrdiff_t>(q) - 1;
    while (back >= 0 && l[static_cast<std::size_t>(back)].index > i) --back;
    if (back < 0) continue;
    const auto p = static_cast<std::size_t>(back);
    if (l[p].index != i || l[p].sign == l[q].sign) continue;
    int inner = 0;
    bool mixed = false;
    for (std::size_t r = p + 1; r < q; ++r) {
      if (l[r].index != i + 1) continue;
      if (inner != 0 && inner != l[r].sign) mixed = true;
      inner = l[r].sign;
    }
    if (!mixed) return HandleSpan{p, q, i, l[p].sign, inner};
  }
  return std::nullopt;
}

ReductionResult handle_reduce_all(const BraidWord& w, const ReductionOptions& opts) {
  ReductionResult result{w, 0};
  while (auto h = find_any_handle(result.word)) {
    if (result.steps == opts.step_budget) {
      throw BudgetExhausted("handle reduction", opts.step_budget);
    }
    if (opts.on_step) opts.on_step(result.word, *h);
    result.word = reduce_once(result.word, *h);
    ++result.steps;
  }
  return result;
}

ReductionResult shorten(const BraidWord& w, const ReductionOptions& opts) {
  // First pass is ordinary reduction; the following ones alternate between
  // the flipped and the direct orientation and clear handles of every index.
  auto current = handle_reduce(w, opts);
  for (bool mirrored = true;; mirrored = !mirrored) {
    auto next = mirrored ? handle_reduce_all(flip(current.word), opts)
                         : handle_reduce_all(current.word, opts);
    if (mirrored) next.word = flip(next.word);
    current.steps += next.steps;
    if (next.word.size() >= current.word.size()) {
      // Reduction may lengthen a word; never hand back more than was given.
      if (current.word.size() > w.size()) current.word = w;
      return current;
    }
    current.word = std::move(next.word);
  }
}

std::string render_with_handle(const BraidWord& w, const HandleSpan& h,
                               WordFormat format) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == h.start) out += '[';
    const auto letter = render(BraidWord(w.strands(), {w[k]}), format);
    if (format == WordFormat::intlist && !out.empty() && out.back() != '[') {
      out += ' ';
    }
    out += letter;
    if (k == h.end) out += ']';
  }
  return out;
}

}  // namespace braidkit
