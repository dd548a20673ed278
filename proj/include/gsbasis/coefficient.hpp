#ifndef GSBASIS_COEFFICIENT_HPP
#define GSBASIS_COEFFICIENT_HPP

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "gsbasis/constraints.hpp"
#include "gsbasis/error.hpp"
#include "gsbasis/parampoly.hpp"
#include "gsbasis/polygcd.hpp"

namespace gsb {

/// Exact scalar from the parametric coefficient field: a fraction of
/// parameter polynomials, both kept in normal form with respect to the
/// constraint set, gcd-reduced, with the denominator normalized to positive
/// leading rational coefficient.  Constrained parameters are never
/// rationalized out of denominators, so 1/a^2 stays 1/a^2.
///
/// Zero testing is exact (numerator normal form), and equality is value
/// equality via cross-multiplication.  Inversion is certified: it succeeds
/// only when the numerator is visibly a product of rationals and declared
/// nonzero atoms, and throws NotProvablyNonzero otherwise.
class Coefficient {
 public:
  Coefficient() : num_(0), den_(1) {}
  Coefficient(const Rational& c) : num_(c), den_(1) {}  // NOLINT: implicit by design
  Coefficient(int c) : num_(c), den_(1) {}              // NOLINT

  Coefficient(ConstraintSetPtr ctx, ParamPoly num, ParamPoly den = ParamPoly(1))
      : num_(std::move(num)), den_(std::move(den)), ctx_(std::move(ctx)) {
    normalize();
  }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  const ConstraintSetPtr& context() const { return ctx_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

  Rational rational_value() const { return num_.rational_value() / den_.rational_value(); }

  Coefficient operator+(const Coefficient& o) const {
    return Coefficient(merge(ctx_, o.ctx_), num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Coefficient operator-(const Coefficient& o) const {
    return Coefficient(merge(ctx_, o.ctx_), num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Coefficient operator*(const Coefficient& o) const {
    return Coefficient(merge(ctx_, o.ctx_), num_ * o.num_, den_ * o.den_);
  }
  Coefficient operator-() const { return Coefficient(ctx_, -num_, den_); }

  /// Certified inversion.  Throws NotProvablyNonzero when the numerator is
  /// not a visible product of rationals, declared-nonzero parameters, and
  /// nonzero-list polynomials.  Refusal is the conservative outcome; it does
  /// not assert that the value is zero.
  Coefficient invert() const {
    if (is_zero()) throw NotProvablyNonzero("0", "inversion of exact zero");
    certify_nonzero();
    return Coefficient(ctx_, den_, num_);
  }

  Coefficient operator/(const Coefficient& o) const { return *this * o.invert(); }

  /// Value equality: is_zero of the cross-multiplied difference.  Canonical
  /// forms with constrained denominators are not unique per value, so the
  /// representations themselves are not compared.
  bool operator==(const Coefficient& o) const {
    const ConstraintSet* cs = merged_context(o);
    ParamPoly diff = num_ * o.den_ - o.num_ * den_;
    if (cs != nullptr) diff = cs->normal_form(diff);
    return diff.is_zero();
  }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& at) const {
    return num_.eval(at) / den_.eval(at);
  }

  /// Renders the value so that `str() + "*" + word` re-parses to the same
  /// term: multi-term numerators are parenthesized, and denominators are
  /// parenthesized unless they are a single parameter power.
  std::string str() const {
    if (!num_.is_zero() && num_.leading_coeff() < 0) {
      Coefficient flipped = -*this;
      return "-" + flipped.str();
    }
    if (den_ == ParamPoly(1)) return wrap_num(num_);
    return wrap_num(num_) + "/" + wrap_den(den_);
  }

 private:
  static ConstraintSetPtr merge(const ConstraintSetPtr& a, const ConstraintSetPtr& b) {
    return a ? a : b;
  }

  const ConstraintSet* merged_context(const Coefficient& o) const {
    return ctx_ ? ctx_.get() : o.ctx_.get();
  }

  static std::string wrap_num(const ParamPoly& p) {
    std::string s = p.str();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  }

  static std::string wrap_den(const ParamPoly& p) {
    std::string s = p.str();
    bool single_power = p.terms().size() == 1 && p.leading_coeff() == 1 &&
                        p.leading_monomial().exponents().size() == 1;
    return single_power ? s : "(" + s + ")";
  }

  void normalize() {
    if (ctx_) {
      num_ = ctx_->normal_form(num_);
      den_ = ctx_->normal_form(den_);
    }
    if (den_.is_zero()) throw NotProvablyNonzero("0", "zero denominator");
    if (num_.is_zero()) {
      den_ = ParamPoly(1);
      return;
    }
    ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_rational()) {
      ParamPoly qn, qd;
      if (try_exact_divide(num_, g, qn) && try_exact_divide(den_, g, qd)) {
        num_ = qn;
        den_ = qd;
      }
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      Rational inv = Rational(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  /// Greedy syntactic factorization of the numerator into declared atoms.
  void certify_nonzero() const {
    if (num_.is_rational()) return;
    if (!ctx_) throw NotProvablyNonzero(num_.str());
    ParamPoly rem = num_;
    bool progress = true;
    while (progress && !rem.is_rational()) {
      progress = false;
      for (const auto& atom : ctx_->nonzero()) {
        if (atom.is_rational()) continue;
        ParamPoly q;
        while (!rem.is_rational() && try_exact_divide(rem, atom, q)) {
          rem = q;
          progress = true;
        }
      }
    }
    if (!rem.is_rational() || rem.is_zero()) throw NotProvablyNonzero(num_.str());
  }

  ParamPoly num_;
  ParamPoly den_;
  ConstraintSetPtr ctx_;
};

inline Coefficient invert(const Coefficient& c) { return c.invert(); }

}  // namespace gsb

#endif  // GSBASIS_COEFFICIENT_HPP
