#ifndef GSBASIS_POLYGCD_HPP
#define GSBASIS_POLYGCD_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsbasis/parampoly.hpp"

namespace gsb {

/// True when d divides p exactly in Q[params]; if so, q receives p / d.
/// Long division on leading terms: in the graded order, d | r and r != 0
/// imply lm(d) | lm(r), so any non-divisible leading monomial refutes
/// divisibility immediately.
inline bool try_exact_divide(const ParamPoly& p, const ParamPoly& d, ParamPoly& q) {
  if (d.is_zero()) return false;
  q = ParamPoly();
  ParamPoly r = p;
  while (!r.is_zero()) {
    const ParamMonomial& lr = r.leading_monomial();
    const ParamMonomial& ld = d.leading_monomial();
    if (!ld.divides(lr)) return false;
    ParamPoly t(ld.divide_into(lr), r.leading_coeff() / d.leading_coeff());
    q = q + t;
    r = r - t * d;
  }
  return true;
}

namespace detail {

/// Univariate view of a ParamPoly in one chosen variable: degree -> coefficient
/// polynomial in the remaining variables.
using UniPoly = std::map<unsigned, ParamPoly>;

inline UniPoly to_uni(const ParamPoly& p, const std::string& var) {
  UniPoly u;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(var);
    ParamMonomial rest = ParamMonomial(var, e).divide_into(m);
    u[e].add_term(rest, c);
  }
  for (auto it = u.begin(); it != u.end();)
    it = it->second.is_zero() ? u.erase(it) : std::next(it);
  return u;
}

inline ParamPoly from_uni(const UniPoly& u, const std::string& var) {
  ParamPoly p;
  for (const auto& [e, coeff] : u) p = p + coeff * ParamPoly(ParamMonomial(var, e));
  return p;
}

inline unsigned uni_degree(const UniPoly& u) { return u.empty() ? 0 : u.rbegin()->first; }

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      ParamPoly prod = ca * cb;
      if (prod.is_zero()) continue;
      auto [it, inserted] = r.emplace(ea + eb, prod);
      if (!inserted) {
        it->second = it->second + prod;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  for (const auto& [e, c] : b) {
    auto [it, inserted] = r.emplace(e, -c);
    if (!inserted) {
      it->second = it->second - c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

ParamPoly gcd_impl(ParamPoly a, ParamPoly b, const std::vector<std::string>& vars);

/// Content of a univariate view: gcd of its coefficients over the remaining
/// variables.
inline ParamPoly uni_content(const UniPoly& u, const std::vector<std::string>& rest) {
  ParamPoly g = 0;
  for (const auto& [e, c] : u) {
    g = gcd_impl(g, c, rest);
    if (g.is_rational() && !g.is_zero()) break;
  }
  return g;
}

/// Collective rational content: gcd of the numerators over lcm of the
/// denominators of every rational coefficient in the view.
inline Rational uni_rational_content(const UniPoly& u) {
  Integer g = 0, l = 1;
  for (const auto& [e, c] : u)
    for (const auto& [m, r] : c.terms()) {
      g = boost::multiprecision::gcd(g, numerator(r));
      l = boost::multiprecision::lcm(l, denominator(r));
    }
  if (g == 0) return 1;
  return Rational(g, l);
}

/// Divides out the polynomial content and then the rational content.  The
/// rational step is what keeps pseudo-remainder chains from the classical
/// coefficient explosion: without it the remainders stay primitive as
/// polynomials while their rational coefficients double in size per step.
inline UniPoly uni_primitive(UniPoly u, const ParamPoly& content) {
  if (!content.is_rational()) {
    for (auto& [e, c] : u) {
      ParamPoly q;
      try_exact_divide(c, content, q);
      c = std::move(q);
    }
  }
  Rational rc = uni_rational_content(u);
  if (rc != 0 && rc != 1) {
    Rational inv = Rational(1) / rc;
    for (auto& [e, c] : u) c = c * inv;
  }
  return u;
}

/// Pseudo-remainder of a by b in the main variable (b nonzero).
inline UniPoly uni_prem(UniPoly a, const UniPoly& b) {
  unsigned db = uni_degree(b);
  const ParamPoly& lb = b.rbegin()->second;
  while (!a.empty() && uni_degree(a) >= db) {
    unsigned da = uni_degree(a);
    ParamPoly la = a.rbegin()->second;
    UniPoly scaled;
    for (const auto& [e, c] : a) scaled[e] = c * lb;
    UniPoly shift;
    shift[da - db] = la;
    a = uni_sub(scaled, uni_mul(shift, b));
  }
  return a;
}

inline ParamPoly gcd_impl(ParamPoly a, ParamPoly b, const std::vector<std::string>& vars) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_rational() || b.is_rational()) return 1;
  std::vector<std::string> used;
  for (const auto& v : vars)
    if (a.variables().count(v) || b.variables().count(v)) used.push_back(v);
  if (used.empty()) return 1;
  std::string main = used.front();
  std::vector<std::string> rest(used.begin() + 1, used.end());

  UniPoly ua = to_uni(a, main), ub = to_uni(b, main);
  ParamPoly ca = uni_content(ua, rest), cb = uni_content(ub, rest);
  ParamPoly content_gcd = gcd_impl(ca, cb, rest);
  ua = uni_primitive(std::move(ua), ca);
  ub = uni_primitive(std::move(ub), cb);

  if (uni_degree(ua) < uni_degree(ub)) std::swap(ua, ub);
  while (!ub.empty()) {
    UniPoly r = uni_prem(ua, ub);
    ua = std::move(ub);
    if (r.empty()) {
      ub.clear();
    } else {
      ParamPoly cr = uni_content(r, rest);
      ub = uni_primitive(std::move(r), cr);
      if (uni_degree(ub) == 0) {
        // A nonzero constant remainder makes the primitive parts coprime.
        return content_gcd;
      }
    }
  }
  if (uni_degree(ua) == 0) return content_gcd;
  return from_uni(ua, main) * content_gcd;
}

}  // namespace detail

/// Polynomial gcd over Q[params] by primitive pseudo-remainder sequences.
/// The result is defined up to a rational factor; callers normalize.
inline ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
  std::set<std::string> vs = a.variables();
  for (const auto& v : b.variables()) vs.insert(v);
  std::vector<std::string> vars(vs.begin(), vs.end());
  return detail::gcd_impl(a, b, vars);
}

}  // namespace gsb

#endif  // GSBASIS_POLYGCD_HPP
