#include "regraph/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "regraph/error.hpp"

namespace regraph {

bool is_cyclically_reduced(const Word& letters) {
  if (letters.empty()) throw InvalidInput("empty word");
  const std::size_t k = letters.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (letters[(i + 1) % k] == letters[i].inverse()) return false;
  }
  return true;
}

namespace {

int period_of(const Word& w) {
  const int k = static_cast<int>(w.size());
  for (int p = 1; p <= k; ++p) {
    if (k % p != 0) continue;
    bool same = true;
    for (int i = 0; i < k && same; ++i) same = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>((i + p) % k)];
    if (same) return k / p;
  }
  return 1;
}

int doubles_of(const Word& w) {
  const std::size_t k = w.size();
  if (k == 1) return 0;
  int c = 0;
  for (std::size_t i = 0; i < k; ++i) c += w[i] == w[(i + 1) % k] ? 1 : 0;
  return c;
}

// Minimal rotation of the word and of its inverted reversal.
Word minimal_representative(const Word& w) {
  const std::size_t k = w.size();
  Word inv(k);
  for (std::size_t i = 0; i < k; ++i) inv[i] = w[k - 1 - i].inverse();
  Word best = w;
  Word candidate(k);
  for (const Word* src : {&w, static_cast<const Word*>(&inv)}) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t i = 0; i < k; ++i) candidate[i] = (*src)[(i + r) % k];
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

WordClass make_class(Word rep) {
  WordClass c;
  c.length = static_cast<int>(rep.size());
  c.period = period_of(rep);
  c.doubles = doubles_of(rep);
  c.representative = std::move(rep);
  return c;
}

}  // namespace

WordClass canonicalize(const Word& w) {
  if (!is_cyclically_reduced(w)) throw InvalidInput("word is not cyclically reduced: " + to_string(w));
  return make_class(minimal_representative(w));
}

WordStats word_stats(const WordClass& w) { return {w.length, w.period, w.doubles}; }

std::int64_t count_reduced_words(int d, int k) {
  if (d < 1 || k < 0) throw InvalidInput("count_reduced_words needs d >= 1, k >= 0");
  if (k == 0) return 0;
  const std::int64_t base = 2 * static_cast<std::int64_t>(d) - 1;
  std::int64_t power = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(power, base, &power)) throw RangeError("a(d,k) overflows 64 bits");
  }
  std::int64_t result = 0;
  const std::int64_t tail = (k % 2 == 0) ? 2 * static_cast<std::int64_t>(d) - 1 : 1;
  if (__builtin_add_overflow(power, tail, &result)) throw RangeError("a(d,k) overflows 64 bits");
  return result;
}

std::vector<WordClass> enumerate_word_classes(int d, int k, std::uint64_t limit) {
  if (d < 1 || k < 1) throw InvalidInput("enumerate_word_classes needs d >= 1, k >= 1");
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(d);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > limit / alphabet + 1) throw ResourceError("word enumeration exceeds limit");
    total *= alphabet;
  }
  if (total > limit) throw ResourceError("word enumeration exceeds limit");

  std::vector<WordClass> out;
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  Word w(static_cast<std::size_t>(k));
  for (;;) {
    for (std::size_t i = 0; i < digits.size(); ++i) w[i] = Letter::from_code(digits[i]);
    if (is_cyclically_reduced(w)) {
      Word rep = minimal_representative(w);
      if (rep == w) out.push_back(make_class(std::move(rep)));
    }
    int pos = k - 1;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == static_cast<int>(alphabet)) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

WordClass double_letter(const WordClass& w, int position) {
  if (position < 1 || position > w.length) throw InvalidInput("doubling position out of range");
  Word out = w.representative;
  out.insert(out.begin() + position, out[static_cast<std::size_t>(position - 1)]);
  return canonicalize(out);
}

std::vector<std::pair<WordClass, int>> halvings(const WordClass& w) {
  std::map<WordClass, int> acc;
  const auto& rep = w.representative;
  const std::size_t k = rep.size();
  if (k < 2) return {};
  for (std::size_t i = 0; i < k; ++i) {
    if (rep[i] != rep[(i + 1) % k]) continue;
    Word shorter = rep;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>((i + 1) % k));
    ++acc[canonicalize(shorter)];
  }
  return {acc.begin(), acc.end()};
}

Rational mu_rate(const WordClass& w) { return Rational(w.length - w.doubles, w.period); }

int max_letter_index(const Word& w) {
  int m = 0;
  for (Letter l : w) m = std::max(m, l.index());
  return m;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    const char base = w[i].inverted() ? 'A' : 'a';
    s += static_cast<char>(base + w[i].index() - 1);
  }
  return s;
}

std::string to_string(const WordClass& w) { return to_string(w.representative); }

Word parse_word(std::string_view text) {
  Word w;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch >= 'a' && ch <= 'z') {
      w.emplace_back(ch - 'a' + 1, false);
    } else if (ch >= 'A' && ch <= 'Z') {
      w.emplace_back(ch - 'A' + 1, true);
    } else {
      throw InvalidInput(std::string("bad letter in word: ") + ch);
    }
  }
  if (w.empty()) throw InvalidInput("empty word");
  return w;
}

WordClassTable::WordClassTable(int d, int max_length, std::uint64_t limit)
    : d_(d), max_length_(max_length), by_length_(static_cast<std::size_t>(max_length) + 2) {
  if (max_length < 1) throw InvalidInput("WordClassTable needs max_length >= 1");
  for (int k = 1; k <= max_length; ++k) {
    for (auto& c : enumerate_word_classes(d, k, limit)) {
      by_length_[static_cast<std::size_t>(k)].push_back(static_cast<int>(classes_.size()));
      index_.emplace(c.representative, static_cast<int>(classes_.size()));
      classes_.push_back(std::move(c));
    }
  }
  doubling_.resize(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& c = classes_[i];
    auto& row = doubling_[i];
    row.resize(static_cast<std::size_t>(c.length));
    for (int p = 0; p < c.length; ++p) {
      row[static_cast<std::size_t>(p)] = c.length < max_length ? index_of(double_letter(c, p + 1)) : -1;
    }
  }
}

int WordClassTable::index_of(const WordClass& w) const {
  if (w.length > max_length_) return -1;
  auto it = index_.find(w.representative);
  if (it == index_.end()) throw InvalidInput("word uses letters beyond the table alphabet: " + to_string(w));
  return it->second;
}

int WordClassTable::index_of_word(const Word& w) const {
  if (static_cast<int>(w.size()) > max_length_) return -1;
  return index_of(canonicalize(w));
}

}  // namespace regraph
