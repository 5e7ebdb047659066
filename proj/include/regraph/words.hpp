#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace regraph {

using Rational = boost::rational<std::int64_t>;

// One of the 2d symbols pi_i or pi_i^{-1}. Codes are ordered so that
// (index, inverted) compares lexicographically with pi_i before pi_i^{-1}.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, bool inverted) : code_(2 * (index - 1) + (inverted ? 1 : 0)) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr int index() const { return code_ / 2 + 1; }
  constexpr bool inverted() const { return (code_ & 1) != 0; }
  constexpr int code() const { return code_; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  int code_ = 0;
};

using Word = std::vector<Letter>;

// Equivalence class of a cyclically reduced word under rotation and
// inversion, stored through its lexicographically minimal representative.
struct WordClass {
  Word representative;
  int length = 0;
  int period = 1;   // h(w)
  int doubles = 0;  // c(w)

  auto operator<=>(const WordClass& other) const { return representative <=> other.representative; }
  bool operator==(const WordClass& other) const { return representative == other.representative; }
};

struct WordStats {
  int length;
  int period;
  int doubles;
};

bool is_cyclically_reduced(const Word& letters);

// Minimal element of the dihedral orbit; throws InvalidInput on a word that
// is empty or not cyclically reduced.
WordClass canonicalize(const Word& w);

WordStats word_stats(const WordClass& w);

// a(d, k); a(d, 0) = 0. Throws RangeError past 63 bits.
std::int64_t count_reduced_words(int d, int k);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// All classes of length k over {pi_1..pi_d}^{+-1}, sorted. Throws
// ResourceError when (2d)^k exceeds the limit.
std::vector<WordClass> enumerate_word_classes(int d, int k,
                                              std::uint64_t limit = kDefaultEnumerationLimit);

// Class of w_1..w_i w_i w_{i+1}..w_k, position 1-based.
WordClass double_letter(const WordClass& w, int position);

// Classes obtained by deleting one letter of a cyclic double pair, with
// multiplicity. Multiplicities sum to c(w).
std::vector<std::pair<WordClass, int>> halvings(const WordClass& w);

// mu(w) = (|w| - c(w)) / h(w).
Rational mu_rate(const WordClass& w);

int max_letter_index(const Word& w);

// "a A b B": lowercase pi_i, uppercase pi_i^{-1}, space separated.
std::string to_string(const Word& w);
std::string to_string(const WordClass& w);
Word parse_word(std::string_view text);

// Indexed table of every class with length <= max_length, with the doubling
// transitions of the word chain precomputed.
class WordClassTable {
 public:
  WordClassTable(int d, int max_length, std::uint64_t limit = kDefaultEnumerationLimit);

  int d() const { return d_; }
  int max_length() const { return max_length_; }
  std::size_t size() const { return classes_.size(); }
  const WordClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<WordClass>& classes() const { return classes_; }

  // Index of the class of w, or -1 when |w| exceeds max_length.
  int index_of(const WordClass& w) const;
  int index_of_word(const Word& w) const;

  // Target class of doubling letter `position` (0-based) of class i, or -1
  // when the result is longer than max_length.
  int doubled(std::size_t i, int position) const { return doubling_[i][static_cast<std::size_t>(position)]; }

  // Class indices of a given length.
  const std::vector<int>& of_length(int k) const { return by_length_[static_cast<std::size_t>(k)]; }

 private:
  int d_;
  int max_length_;
  std::vector<WordClass> classes_;
  std::map<Word, int> index_;
  std::vector<std::vector<int>> doubling_;
  std::vector<std::vector<int>> by_length_;
};

}  // namespace regraph
