#pragma once

// Value types shared by every module. All external indexing is 1-based:
// positions run over [1, n] and word values lie in [1, n].

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shiish {

inline constexpr int kDefaultWordCap = 7;

/// An n-tuple a in [n]^n.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> values);

  /// Constant word (v, ..., v).
  static Word constant(int n, int v);

  int n() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const { return values_; }

  /// Compact "4213" form for n <= 9, comma separated otherwise.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> values_;
};

/// A bijection [n] -> [n], stored as its image list (w_1, ..., w_n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation reversal(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (u o v)(i) = u(v(i)).
Permutation operator*(const Permutation& u, const Permutation& v);

/// A region label: n positive integers. Entries are not bounded by n here;
/// callers that need [1, n] check it explicitly.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<int> entries);

  static Label ones(int n) { return Label(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int n() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }

  /// Adds delta * e_i.
  void bump(int i, int delta = 1);

  bool in_cube() const;
  Word to_word() const { return Word(entries_); }
  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::vector<int> entries_;
};

/// a o w = (a_{w_1}, ..., a_{w_n}).
Word compose(const Word& a, const Permutation& w);

/// Parses "[4,2,1,3]", "4,2,1,3" or the digit string "4213" (n <= 9 only).
Word parse_word(std::string_view text);

/// Lexicographic stream over [n]^n.
class AllWords {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Word;
    using difference_type = std::ptrdiff_t;
    using pointer = const Word*;
    using reference = const Word&;

    iterator() = default;
    explicit iterator(int n);

    const Word& operator*() const { return current_; }
    const Word* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    std::vector<int> digits_;
    Word current_;
    bool done_ = true;
  };

  explicit AllWords(int n, int cap = kDefaultWordCap);

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const;

 private:
  int n_;
};

inline AllWords all_words(int n, int cap = kDefaultWordCap) { return AllWords(n, cap); }

std::ostream& operator<<(std::ostream& os, const Word& a);
std::ostream& operator<<(std::ostream& os, const Permutation& w);
std::ostream& operator<<(std::ostream& os, const Label& l);

}  // namespace shiish
