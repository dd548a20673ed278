#ifndef GSBASIS_WORD_HPP
#define GSBASIS_WORD_HPP

#include <string>
#include <utility>
#include <vector>

#include "gsbasis/error.hpp"

namespace gsb {

/// Word in the free monoid: a string of generator indices, one char per
/// letter.  Generator precedence equals the index, so plain char comparison
/// implements the letter order.
using Word = std::string;

/// Ordered generator alphabet; index 0 is the smallest generator.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 120) throw ParseError("too many generators");
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool has(const std::string& name) const {
    for (const auto& n : names_)
      if (n == name) return true;
    return false;
  }

  size_t index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw ParseError("unknown generator: " + name);
  }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

/// Degree-lexicographic comparison: length first, then left-to-right by
/// generator precedence.  Returns <0, 0, >0.
inline int deglex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const { return deglex_compare(a, b) < 0; }
};

/// Leftmost occurrence of u inside w, or npos.
inline size_t find_subword(const Word& w, const Word& u) { return w.find(u); }

/// Proper overlaps u*a = b*v with 0 < |overlap| < min(|u|, |v|).
/// Returned as (a, b) pairs ordered by increasing overlap length.
inline std::vector<std::pair<Word, Word>> find_intersections(const Word& u, const Word& v) {
  std::vector<std::pair<Word, Word>> out;
  size_t maxk = std::min(u.size(), v.size());
  for (size_t k = 1; k < maxk; ++k) {
    if (u.compare(u.size() - k, k, v, 0, k) == 0)
      out.emplace_back(v.substr(k), u.substr(0, u.size() - k));
  }
  return out;
}

/// All factorizations u = a*v*b, including a = b = empty when u == v.
inline std::vector<std::pair<Word, Word>> find_inclusions(const Word& u, const Word& v) {
  std::vector<std::pair<Word, Word>> out;
  if (v.size() > u.size()) return out;
  for (size_t pos = u.find(v); pos != Word::npos;
       pos = pos + 1 <= u.size() - v.size() ? u.find(v, pos + 1) : Word::npos) {
    out.emplace_back(u.substr(0, pos), u.substr(pos + v.size()));
  }
  return out;
}

/// Render a word like z*y^2 with consecutive equal letters collapsed.
inline std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += alphabet.name(static_cast<unsigned char>(w[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace gsb

#endif  // GSBASIS_WORD_HPP
