#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rtm/linear_combination.hpp"

namespace rtm {

enum class Letter : char { x = 'x', y = 'y' };

/// Word in the letters x, y. The empty word is the unit 1.
///
/// Words are ordered by weight (length), then lexicographically with x < y.
class Word {
 public:
  Word() = default;
  explicit Word(Letter a) : letters_(1, static_cast<char>(a)) {}

  /// Parses "xxy"; "1" and "" give the empty word.
  static Word parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  int weight() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter at(int i) const { return static_cast<Letter>(letters_[static_cast<std::size_t>(i)]); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }
  bool ends_with(Letter a) const { return !empty() && back() == a; }

  Word prefix(int n) const { return Word(letters_.substr(0, static_cast<std::size_t>(n))); }
  Word suffix_from(int i) const { return Word(letters_.substr(static_cast<std::size_t>(i))); }

  /// "1" for the empty word.
  std::string text() const { return empty() ? "1" : letters_; }

  friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

using WordSum = LinearCombination<Word>;

inline WordSum letter_sum(Letter a) { return WordSum(Word(a)); }

/// Composition (k_1, ..., k_r) naming the word z_{k_1} ... z_{k_r},
/// z_k = x^{k-1} y. Ordered lexicographically.
struct ZIndex {
  std::vector<int> parts;

  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }
  bool admissible() const { return parts.empty() || parts.front() >= 2; }

  friend bool operator==(const ZIndex&, const ZIndex&) = default;
  friend auto operator<=>(const ZIndex&, const ZIndex&) = default;
};

/// "(3,1)"; the empty composition is "()".
std::string to_string(const ZIndex& k);
ZIndex parse_zindex(std::string_view text);

WordSum concat(const WordSum& a, const WordSum& b);
inline WordSum operator*(const WordSum& a, const WordSum& b) { return concat(a, b); }

/// R_v(a) = a v.
WordSum right_mult(const WordSum& a, const WordSum& v);
/// Strips the trailing y of every supported word. Throws DomainError naming
/// the first word that does not end in y.
WordSum r_y_inverse(const WordSum& a);

/// Requires w empty or ending in y.
ZIndex z_encode(const Word& w);
Word z_decode(const ZIndex& k);

bool is_admissible(const Word& w);
bool is_admissible(const WordSum& a);

/// Reverse and swap x <-> y.
Word dual(const Word& w);

/// All 2^n words of weight n, in word order.
std::vector<Word> words_of_weight(int n);
/// Admissible words of weight n (empty word for n = 0).
std::vector<Word> admissible_words(int n);

std::string to_string(const WordSum& a);

}  // namespace rtm
