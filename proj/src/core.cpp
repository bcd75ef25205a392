#include "shiish/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

#include "shiish/error.hpp"

namespace shiish {

namespace {

std::string join(std::span<const int> xs, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

bool all_single_digit(std::span<const int> xs) {
  return std::all_of(xs.begin(), xs.end(), [](int v) { return v >= 0 && v <= 9; });
}

}  // namespace

Word::Word(std::vector<int> values) : values_(std::move(values)) {
  const int n = this->n();
  require(n >= 1, "word must be non-empty");
  for (int v : values_) {
    if (v < 1 || v > n)
      throw DomainError("word entry " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
  }
}

Word Word::constant(int n, int v) {
  require(n >= 1, "word length must be positive");
  return Word(std::vector<int>(static_cast<std::size_t>(n), v));
}

std::string Word::str() const { return join(values_, n() <= 9); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  require(n >= 1, "permutation must be non-empty");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    require(v >= 1 && static_cast<std::size_t>(v) <= n && !seen[static_cast<std::size_t>(v)],
            "not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const { return join(images_, n() <= 9); }

Permutation operator*(const Permutation& u, const Permutation& v) {
  require(u.n() == v.n(), "permutation size mismatch");
  std::vector<int> im(static_cast<std::size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) im[static_cast<std::size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(im));
}

Label::Label(std::vector<int> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), "label must be non-empty");
  for (int v : entries_) require(v >= 1, "label entries must be positive");
}

void Label::bump(int i, int delta) {
  require(i >= 1 && i <= n(), "label index out of range");
  int& e = entries_[static_cast<std::size_t>(i - 1)];
  e += delta;
  require(e >= 1, "label entry dropped below 1");
}

bool Label::in_cube() const {
  return std::all_of(entries_.begin(), entries_.end(), [&](int v) { return v >= 1 && v <= n(); });
}

std::string Label::str() const { return join(entries_, all_single_digit(entries_)); }

Word compose(const Word& a, const Permutation& w) {
  if (a.n() != w.n())
    throw DomainError("dimension mismatch: word has n=" + std::to_string(a.n()) +
                      ", permutation has n=" + std::to_string(w.n()));
  std::vector<int> out(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) out[static_cast<std::size_t>(i - 1)] = a[w(i)];
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    require(s.back() == ']', "unterminated word array");
    s = s.substr(1, s.size() - 2);
  }
  require(!s.empty(), "empty word");

  std::vector<int> values;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      require(std::isdigit(static_cast<unsigned char>(c)), "word must contain digits only");
      values.push_back(c - '0');
    }
    require(values.size() <= 9, "digit-string words are limited to n <= 9; use commas");
  } else {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto next = s.find(',', pos);
      const auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      require(ec == std::errc{} && ptr == tok.data() + tok.size() && !tok.empty(),
              "bad word entry '" + tok + "'");
      values.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  return Word(std::move(values));
}

AllWords::AllWords(int n, int cap) : n_(n) {
  require(n >= 1, "n must be positive");
  if (n > cap)
    throw BudgetError("all_words: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

std::uint64_t AllWords::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < n_; ++i) s *= static_cast<std::uint64_t>(n_);
  return s;
}

AllWords::iterator::iterator(int n)
    : digits_(static_cast<std::size_t>(n), 1), current_(digits_), done_(false) {}

AllWords::iterator& AllWords::iterator::operator++() {
  const int n = static_cast<int>(digits_.size());
  int pos = n - 1;
  while (pos >= 0 && digits_[static_cast<std::size_t>(pos)] == n) {
    digits_[static_cast<std::size_t>(pos)] = 1;
    --pos;
  }
  if (pos < 0) {
    done_ = true;
    return *this;
  }
  ++digits_[static_cast<std::size_t>(pos)];
  current_ = Word(digits_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& a) { return os << a.str(); }
std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.str(); }
std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.str(); }

}  // namespace shiish
