#ifndef GSBASIS_CONSTRAINTS_HPP
#define GSBASIS_CONSTRAINTS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gsbasis/error.hpp"
#include "gsbasis/parampoly.hpp"

namespace gsb {

/// Oriented rewriting rules on parameter monomials (e.g. a^3 -> -1) together
/// with the list of expressions assumed nonzero.  Rules must be strictly
/// decreasing in the deg-then-lex order and are checked for confluence when
/// the set is finalized, so normal forms are unique.
class ConstraintSet {
 public:
  struct Rule {
    ParamMonomial lhs;
    ParamPoly rhs;
  };

  void add_rule(const ParamMonomial& lhs, const ParamPoly& rhs) {
    if (lhs.is_one()) throw ParseError("constraint left side must be a nonconstant monomial");
    for (const auto& [m, c] : rhs.terms())
      if (!(m < lhs))
        throw ParseError("constraint " + lhs.str() + " -> " + rhs.str() +
                         " is not strictly decreasing");
    rules_.push_back({lhs, rhs});
  }

  void add_nonzero(const ParamPoly& atom) {
    ParamPoly a = normal_form(atom);
    if (a.is_zero())
      throw ParseError("nonzero assumption reduces to zero: " + atom.str());
    nonzero_.push_back(a);
  }

  /// Checks local confluence on all critical pairs of the rule set.
  void finalize() const {
    for (size_t i = 0; i < rules_.size(); ++i)
      for (size_t j = i + 1; j < rules_.size(); ++j) {
        ParamMonomial l = lcm(rules_[i].lhs, rules_[j].lhs);
        ParamPoly via_i = normal_form(ParamPoly(rules_[i].lhs.divide_into(l)) * rules_[i].rhs);
        ParamPoly via_j = normal_form(ParamPoly(rules_[j].lhs.divide_into(l)) * rules_[j].rhs);
        if (via_i != via_j)
          throw ParseError("constraint rules are not confluent at " + l.str());
      }
  }

  ParamPoly normal_form(const ParamPoly& p) const {
    ParamPoly f = p;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const ParamMonomial& m = it->first;
        for (const auto& r : rules_) {
          if (!r.lhs.divides(m)) continue;
          Rational c = it->second;
          ParamPoly replaced = ParamPoly(r.lhs.divide_into(m)) * r.rhs * c;
          f.add_term(m, -c);
          f = f + replaced;
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
    return f;
  }

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<ParamPoly>& nonzero() const { return nonzero_; }
  bool trivial() const { return rules_.empty() && nonzero_.empty(); }

 private:
  static ParamMonomial lcm(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r = a;
    for (const auto& [name, e] : b.exponents()) {
      unsigned ea = a.exponent(name);
      if (e > ea) r = r * ParamMonomial(name, e - ea);
    }
    return r;
  }

  std::vector<Rule> rules_;
  std::vector<ParamPoly> nonzero_;
};

using ConstraintSetPtr = std::shared_ptr<const ConstraintSet>;

}  // namespace gsb

#endif  // GSBASIS_CONSTRAINTS_HPP
