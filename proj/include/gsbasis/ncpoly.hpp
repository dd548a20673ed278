#ifndef GSBASIS_NCPOLY_HPP
#define GSBASIS_NCPOLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "gsbasis/coefficient.hpp"
#include "gsbasis/word.hpp"

namespace gsb {

/// Noncommutative polynomial: finitely many words with exact coefficients.
/// Terms are kept in ascending deglex order; the leading term is the last.
class NCPoly {
 public:
  using Terms = std::map<Word, Coefficient, DeglexLess>;

  NCPoly() = default;

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  const Word& lead_word() const { return lead().first; }
  const Coefficient& lead_coeff() const { return lead().second; }

  void add_term(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }

  NCPoly operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
  }

  NCPoly operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  NCPoly scaled(const Coefficient& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : terms_) {
      Coefficient prod = cc * c;
      if (!prod.is_zero()) r.terms_.emplace(w, prod);
    }
    return r;
  }

  /// a * f * b in the free algebra.
  NCPoly conjugated(const Word& a, const Word& b) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(a + w + b, c);
    return r;
  }

  /// Value equality, term by term.
  bool operator==(const NCPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    for (; ia != terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  std::string str(const Alphabet& alphabet) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string cs = it->second.str();
      bool negative = !cs.empty() && cs[0] == '-';
      if (s.empty()) {
        if (negative) {
          s += "-";
          cs = cs.substr(1);
        }
      } else {
        s += negative ? " - " : " + ";
        if (negative) cs = cs.substr(1);
      }
      const bool one = cs == "1";
      if (it->first.empty()) {
        s += one ? "1" : cs;
        continue;
      }
      if (!one) s += cs + "*";
      s += word_to_string(alphabet, it->first);
    }
    return s;
  }

 private:
  const std::pair<const Word, Coefficient>& lead() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
  }

  Terms terms_;
};

}  // namespace gsb

#endif  // GSBASIS_NCPOLY_HPP
