#include <braidkit/simple.hpp>

#include <braidkit/redress.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <unordered_map>

namespace braidkit {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation size must be positive");
  Permutation p;
  p.image_.resize(n);
  for (int i = 0; i < n; ++i) p.image_[i] = i + 1;
  return p;
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw InvalidArgument("permutation size must be positive");
  Permutation p;
  p.image_.resize(n);
  for (int i = 0; i < n; ++i) p.image_[i] = n - i;
  return p;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) throw InvalidArgument("permutation size must be positive");
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidArgument("not a permutation of {1.." + std::to_string(n) +
                            "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> image;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) throw InvalidArgument("bad permutation entry");
      image.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
    } else if (c == '(' || c == ')' || c == ',' ||
               std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      throw InvalidArgument("unexpected '" + std::string(1, c) +
                            "' in permutation");
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (int i = 0; i < size(); ++i) p.image_[image_[i] - 1] = i + 1;
  return p;
}

std::size_t Permutation::inversions() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    for (std::size_t j = i + 1; j < image_.size(); ++j) {
      if (image_[i] > image_[j]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i + 1) return false;
  }
  return true;
}

void Permutation::swap_values(int i) {
  for (int& v : image_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out + ")";
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw InvalidArgument("permutation size mismatch");
  Permutation h;
  h.image_.resize(f.image_.size());
  for (int i = 0; i < f.size(); ++i) h.image_[i] = f.image_[g.image_[i] - 1];
  return h;
}

// ---------------------------------------------------------------------------
// Simple braids

namespace {

void check_same_size(const SimpleBraid& s, const SimpleBraid& t) {
  if (s.strands() != t.strands()) {
    throw InvalidArgument("simple braids on different strand counts");
  }
}

// Position (1-based) of value v.
int position_of(const Permutation& f, int v) {
  const auto& img = f.image();
  return static_cast<int>(std::find(img.begin(), img.end(), v) - img.begin()) + 1;
}

// ---------------------------------------------------------------------------
// Memo tables for small n. Each thread owns its tables, so lookups need no
// locking.

constexpr int kCacheMaxStrands = 6;
std::atomic<bool> g_cache_enabled{true};

std::uint64_t code_of(const Permutation& f) {
  std::uint64_t code = 0;
  for (int v : f.image()) code = code * 8 + static_cast<std::uint64_t>(v - 1);
  return code;
}

std::uint64_t pair_key(const SimpleBraid& s, const SimpleBraid& t) {
  return (code_of(s.perm()) << 24) | (code_of(t.perm()) << 4) |
         static_cast<std::uint64_t>(s.strands());
}

bool cacheable(const SimpleBraid& s) {
  return s.strands() <= kCacheMaxStrands &&
         g_cache_enabled.load(std::memory_order_relaxed);
}

template <class Value, class Compute>
Value memoized(std::unordered_map<std::uint64_t, Value>& table,
               const SimpleBraid& s, const SimpleBraid& t, Compute compute) {
  if (!cacheable(s)) return compute();
  const auto key = pair_key(s, t);
  if (auto it = table.find(key); it != table.end()) return it->second;
  auto value = compute();
  table.emplace(key, value);
  return value;
}

SimpleBraid gcd_left_uncached(SimpleBraid s, SimpleBraid t) {
  Permutation g = Permutation::identity(s.strands());
  Permutation a = s.perm();
  Permutation b = t.perm();
  const int n = s.strands();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      if (position_of(a, i) > position_of(a, i + 1) &&
          position_of(b, i) > position_of(b, i + 1)) {
        a.swap_values(i);
        b.swap_values(i);
        g.swap_positions(i);
        progress = true;
        break;
      }
    }
  }
  return SimpleBraid(std::move(g));
}

CTile c_tile_uncached(const SimpleBraid& s, const SimpleBraid& t) {
  auto fraction = redress_left(word_of_simple(s) * invert(word_of_simple(t)));
  return {simple_of_word(fraction.numerator),
          simple_of_word(fraction.denominator)};
}

PTile normalize_pair_uncached(SimpleBraid t1, SimpleBraid t2) {
  Permutation head = t1.perm();
  Permutation tail = t2.perm();
  const int n = t1.strands();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i < n; ++i) {
      const bool tail_recoil = position_of(tail, i) > position_of(tail, i + 1);
      const bool head_descent = head(i) > head(i + 1);
      if (tail_recoil && !head_descent) {
        head.swap_positions(i);
        tail.swap_values(i);
        progress = true;
        break;
      }
    }
  }
  return {SimpleBraid(std::move(head)), SimpleBraid(std::move(tail))};
}

}  // namespace

SimpleBraid SimpleBraid::atom(int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("atom index out of range");
  auto p = Permutation::identity(n);
  p.swap_positions(i);
  return SimpleBraid(std::move(p));
}

bool SimpleBraid::is_delta() const noexcept {
  const int n = strands();
  for (int i = 1; i <= n; ++i) {
    if (perm_(i) != n - i + 1) return false;
  }
  return true;
}

Permutation perm_of_positive_word(const BraidWord& w) {
  auto f = Permutation::identity(w.strands());
  for (const auto& l : w) {
    if (!l.positive()) {
      throw InvalidArgument("permutation requested for a non-positive word");
    }
    f.swap_positions(l.index);
  }
  return f;
}

SimpleBraid simple_of_word(const BraidWord& w) {
  auto f = perm_of_positive_word(w);
  if (f.inversions() != w.size()) {
    throw InvalidArgument("word '" + render(w, WordFormat::intlist) +
                          "' does not represent a simple braid");
  }
  return SimpleBraid(std::move(f));
}

BraidWord word_of_simple(const SimpleBraid& s) {
  BraidWord out(s.strands());
  Permutation rest = s.perm();
  const int n = s.strands();
  int i = 1;
  while (i < n) {
    if (position_of(rest, i) > position_of(rest, i + 1)) {
      out.push_back(sigma(i));
      rest.swap_values(i);
      i = 1;
    } else {
      ++i;
    }
  }
  return out;
}

std::string to_string(const SimpleBraid& s) {
  if (s.strands() > 26) return s.perm().to_string();
  return render(word_of_simple(s));
}

SimpleBraid parse_simple(std::string_view text, int n) {
  const bool perm_text = text.find_first_of("0123456789") != std::string_view::npos;
  if (perm_text) {
    SimpleBraid s(Permutation::parse(text));
    if (s.strands() != n) throw InvalidArgument("permutation size mismatch");
    return s;
  }
  return simple_of_word(parse(text, WordFormat::alpha, n));
}

bool has_left_atom(const SimpleBraid& s, int i) {
  return position_of(s.perm(), i) > position_of(s.perm(), i + 1);
}

bool has_right_atom(const SimpleBraid& s, int i) {
  return s.perm()(i) > s.perm()(i + 1);
}

std::vector<int> divisor_atoms(const SimpleBraid& s, Side side) {
  std::vector<int> atoms;
  const auto& f = s.perm();
  const auto inv = side == Side::left ? f.inverse() : f;
  for (int i = 1; i < s.strands(); ++i) {
    if (inv(i) > inv(i + 1)) atoms.push_back(i);
  }
  return atoms;
}

SimpleBraid delta(int n) {
  if (n < 2) throw InvalidArgument("delta needs at least 2 strands");
  return SimpleBraid(Permutation::reversal(n));
}

SimpleBraid dual(const SimpleBraid& s, Side side) {
  const auto omega = Permutation::reversal(s.strands());
  const auto inv = s.perm().inverse();
  return SimpleBraid(side == Side::right ? inv * omega : omega * inv);
}

SimpleBraid flip_simple(const SimpleBraid& s) {
  const auto omega = Permutation::reversal(s.strands());
  return SimpleBraid(omega * s.perm() * omega);
}

bool left_divides(const SimpleBraid& s, const SimpleBraid& t) {
  return gcd_left(s, t) == s;
}

SimpleBraid gcd_left(const SimpleBraid& s, const SimpleBraid& t) {
  check_same_size(s, t);
  thread_local std::unordered_map<std::uint64_t, SimpleBraid> table;
  return memoized(table, s, t, [&] { return gcd_left_uncached(s, t); });
}

CTile c_tile(const SimpleBraid& s, const SimpleBraid& t) {
  check_same_size(s, t);
  thread_local std::unordered_map<std::uint64_t, CTile> table;
  return memoized(table, s, t, [&] { return c_tile_uncached(s, t); });
}

PTile normalize_pair(const SimpleBraid& t1, const SimpleBraid& t2) {
  check_same_size(t1, t2);
  thread_local std::unordered_map<std::uint64_t, PTile> table;
  return memoized(table, t1, t2, [&] { return normalize_pair_uncached(t1, t2); });
}

bool is_normal_pair(const SimpleBraid& prev, const SimpleBraid& next) {
  check_same_size(prev, next);
  const auto& f = prev.perm();
  const auto g_inv = next.perm().inverse();
  for (int i = 1; i < prev.strands(); ++i) {
    if (g_inv(i) > g_inv(i + 1) && !(f(i) > f(i + 1))) return false;
  }
  return true;
}

void set_tile_cache_enabled(bool enabled) {
  g_cache_enabled.store(enabled, std::memory_order_relaxed);
}

bool tile_cache_enabled() {
  return g_cache_enabled.load(std::memory_order_relaxed);
}

}  // namespace braidkit
