#include <braidkit/word.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braidkit {

namespace {

constexpr int kAlphaMaxIndex = 25;

void check_letter(const Letter& l, int n) {
  if (l.index < 1 || (l.sign != 1 && l.sign != -1)) {
    throw InvalidArgument("invalid letter");
  }
  if (l.index >= n) {
    throw InvalidArgument("generator index " + std::to_string(l.index) +
                          " out of range for " + std::to_string(n) +
                          "-strand braid");
  }
}

int default_strands(const std::vector<Letter>& letters) {
  int max_index = 0;
  for (const auto& l : letters) max_index = std::max(max_index, l.index);
  return std::max(2, max_index + 1);
}

std::vector<Letter> parse_alpha(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c < 'a' + kAlphaMaxIndex) {
      out.push_back({c - 'a' + 1, 1});
    } else if (c >= 'A' && c < 'A' + kAlphaMaxIndex) {
      out.push_back({c - 'A' + 1, -1});
    } else if (c == '.') {
      // factor separator, e.g. "ABACBA.ac"
    } else {
      throw InvalidArgument(std::string("character '") + c +
                            "' is not a braid letter");
    }
  }
  return out;
}

std::vector<Letter> parse_intlist(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    auto token = text.substr(pos, end - pos);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidArgument("'" + std::string(token) + "' is not an integer");
    }
    if (value == 0) throw InvalidArgument("0 is not a braid letter");
    out.push_back({value > 0 ? value : -value, value > 0 ? 1 : -1});
    pos = end;
  }
  return out;
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 2) throw InvalidArgument("a braid word needs at least 2 strands");
}

BraidWord::BraidWord(int n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw InvalidArgument("a braid word needs at least 2 strands");
  for (const auto& l : letters_) check_letter(l, n_);
}

void BraidWord::push_back(Letter l) {
  check_letter(l, n_);
  letters_.push_back(l);
}

void BraidWord::append(const BraidWord& other) {
  if (other.n_ != n_) throw InvalidArgument("strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l.sign > 0; });
}

bool BraidWord::is_negative() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l.sign < 0; });
}

int BraidWord::min_index() const noexcept {
  int m = 0;
  for (const auto& l : letters_) {
    if (m == 0 || l.index < m) m = l.index;
  }
  return m;
}

BraidWord parse(std::string_view text, WordFormat format, std::optional<int> n) {
  auto letters =
      format == WordFormat::alpha ? parse_alpha(text) : parse_intlist(text);
  const int strands = n ? *n : default_strands(letters);
  return BraidWord(strands, std::move(letters));
}

std::string render(const BraidWord& w, WordFormat format) {
  std::string out;
  if (format == WordFormat::alpha) {
    out.reserve(w.size());
    for (const auto& l : w) {
      if (l.index > kAlphaMaxIndex) {
        throw InvalidArgument("generator " + std::to_string(l.index) +
                              " has no alpha letter; use intlist format");
      }
      out.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index - 1));
    }
    return out;
  }
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord flip(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back({w.strands() - l.index, l.sign});
  return BraidWord(w.strands(), std::move(out));
}

BraidWord reverse(const BraidWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

BraidWord embed(const BraidWord& w, int n) {
  if (n < w.strands()) {
    throw InvalidArgument("cannot embed a " + std::to_string(w.strands()) +
                          "-strand word into B_" + std::to_string(n));
  }
  return BraidWord(n, w.letters());
}

}  // namespace braidkit
