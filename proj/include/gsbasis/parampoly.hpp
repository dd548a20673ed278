#ifndef GSBASIS_PARAMPOLY_HPP
#define GSBASIS_PARAMPOLY_HPP

#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gsbasis/rational.hpp"

namespace gsb {

/// Commutative power product of named parameters, e.g. a^2*s.
/// Ordered by total degree, ties broken lexicographically on the exponent
/// vector over parameter names in ascending name order.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  explicit ParamMonomial(const std::string& name, unsigned exp = 1) {
    if (exp > 0) exps_[name] = exp;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [name, e] : exps_) d += e;
    return d;
  }

  bool is_one() const { return exps_.empty(); }
  const std::map<std::string, unsigned>& exponents() const { return exps_; }

  unsigned exponent(const std::string& name) const {
    auto it = exps_.find(name);
    return it == exps_.end() ? 0 : it->second;
  }

  ParamMonomial operator*(const ParamMonomial& o) const {
    ParamMonomial r = *this;
    for (const auto& [name, e] : o.exps_) r.exps_[name] += e;
    return r;
  }

  bool divides(const ParamMonomial& o) const {
    for (const auto& [name, e] : exps_)
      if (o.exponent(name) < e) return false;
    return true;
  }

  /// Requires divides(o).
  ParamMonomial divide_into(const ParamMonomial& o) const {
    ParamMonomial r;
    for (const auto& [name, e] : o.exps_) {
      unsigned d = e - exponent(name);
      if (d > 0) r.exps_[name] = d;
    }
    return r;
  }

  int compare(const ParamMonomial& o) const {
    unsigned da = degree(), db = o.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = exps_.begin();
    auto ib = o.exps_.begin();
    while (ia != exps_.end() && ib != o.exps_.end()) {
      if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
      if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
      ++ia, ++ib;
    }
    return 0;
  }

  bool operator<(const ParamMonomial& o) const { return compare(o) < 0; }
  bool operator==(const ParamMonomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const ParamMonomial& o) const { return exps_ != o.exps_; }

  std::string str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [name, e] : exps_) {
      if (!s.empty()) s += "*";
      s += name;
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<std::string, unsigned> exps_;
};

/// Polynomial in the parameters over Q.  Terms keyed by monomial in
/// ascending order; the leading term is the map's last entry.
class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT: implicit by design
    if (c != 0) terms_[ParamMonomial()] = c;
  }
  ParamPoly(int c) : ParamPoly(Rational(c)) {}  // NOLINT
  explicit ParamPoly(const ParamMonomial& m, const Rational& c = 1) {
    if (c != 0) terms_[m] = c;
  }

  static ParamPoly parameter(const std::string& name) {
    return ParamPoly(ParamMonomial(name));
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational rational_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
  }

  const Terms& terms() const { return terms_; }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  const ParamMonomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const ParamMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ParamPoly operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  ParamPoly operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  ParamPoly operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  ParamPoly operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  ParamPoly operator*(const Rational& c) const {
    ParamPoly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
    return r;
  }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return terms_ != o.terms_; }
  bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

  std::set<std::string> variables() const {
    std::set<std::string> v;
    for (const auto& [m, c] : terms_)
      for (const auto& [name, e] : m.exponents()) v.insert(name);
    return v;
  }

  /// Substitute a rational value for one parameter.
  ParamPoly substitute(const std::string& name, const Rational& value) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
      unsigned e = m.exponent(name);
      if (e == 0) {
        r.add_term(m, c);
        continue;
      }
      Rational scale = c;
      for (unsigned k = 0; k < e; ++k) scale *= value;
      ParamMonomial rest = ParamMonomial(name, e).divide_into(m);
      r.add_term(rest, scale);
    }
    return r;
  }

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& at) const {
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t(static_cast<double>(numerator(c)) / static_cast<double>(denominator(c)));
      for (const auto& [name, e] : m.exponents()) {
        auto it = at.find(name);
        std::complex<double> base = it == at.end() ? std::complex<double>(0.0) : it->second;
        for (unsigned k = 0; k < e; ++k) t *= base;
      }
      total += t;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c;
      if (s.empty()) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (m.is_one()) {
        s += gsb::to_string(a);
      } else {
        if (a != 1) s += gsb::to_string(a) + "*";
        s += m.str();
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

inline ParamPoly operator*(const Rational& c, const ParamPoly& p) { return p * c; }

}  // namespace gsb

#endif  // GSBASIS_PARAMPOLY_HPP
