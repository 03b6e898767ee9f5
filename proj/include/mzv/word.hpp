#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "mzv/index.hpp"

namespace mzv {

/// Binary word over {x, y}, the iterated-integral encoding of an index.
/// Letters are packed into a bit field (bit i = position i, x = 0, y = 1),
/// which keeps hashing and map keys cheap at the weights we ever touch.
class Word {
 public:
  static constexpr int kMaxLen = 63;

  Word() = default;

  static Word parse(std::string_view text);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  /// true if position i holds y.
  bool is_y(int i) const { return (bits_ >> i) & 1u; }
  char letter(int i) const { return is_y(i) ? 'y' : 'x'; }

  /// Convergent iterated integral: nonempty, starts with x, ends with y.
  bool admissible() const;
  /// Domain of shuffle regularization: empty or ends with y.
  bool regularizable() const { return len_ == 0 || is_y(len_ - 1); }

  Word prepended(char letter) const;
  Word appended(char letter) const;
  /// Drops the first letter (word must be nonempty).
  Word rest() const;
  Word prefix(int n) const;
  Word suffix_from(int pos) const;
  /// Reverse the word and swap x <-> y (no admissibility requirement).
  Word reverse_swap() const;
  int leading_y_run() const;

  auto operator<=>(const Word&) const = default;

  std::string to_string() const;

 private:
  Word(std::uint64_t bits, int len) : bits_(bits), len_(len) {}

  std::uint64_t bits_ = 0;
  int len_ = 0;
};

/// Encoding (k_1,...,k_r) -> x^{k_r-1} y · x^{k_{r-1}-1} y · ... · x^{k_1-1} y.
/// The outermost summation variable maps to the leading x-block, so the word
/// is admissible iff the index is, and duality is exactly reverse+swap.
Word index_to_word(const Index& k);

/// Inverse of index_to_word; requires a nonempty word ending in y.
Index word_to_index(const Word& w);

/// Duality on admissible words: reverse and swap letters.
Word word_dual(const Word& w);

/// Formal rational combination of words; exact arithmetic, no stored zeros.
class WordSum {
 public:
  WordSum() = default;
  explicit WordSum(const Word& w) { add(w, 1); }
  WordSum(const Word& w, const Rational& c) { add(w, c); }

  static WordSum unit() { return WordSum(Word{}); }

  void add(const Word& w, const Rational& c);
  WordSum& operator+=(const WordSum& o);
  WordSum& operator-=(const WordSum& o);
  WordSum& operator*=(const Rational& c);

  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator*(WordSum a, const Rational& c) { return a *= c; }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }

  bool operator==(const WordSum&) const = default;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational mass() const;

  /// Every word must end in y (or be empty, contributing the empty index).
  IndexSum to_index_sum() const;

  std::string to_string() const;

 private:
  std::map<Word, Rational> terms_;
};

/// Shuffle product: bilinear extension of all order-preserving
/// interleavings. Computed by the recursion
///   a·u ⧢ b·v = a·(u ⧢ b·v) + b·(a·u ⧢ v)
/// with a memo table local to each top-level call.
WordSum shuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& u, const WordSum& v);

}  // namespace mzv
