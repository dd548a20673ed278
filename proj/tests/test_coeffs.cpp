#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <map>
#include <memory>
#include <string>

#include "gsbasis/coefficient.hpp"
#include "gsbasis/polygcd.hpp"

using namespace gsb;

namespace {

ParamPoly P(const std::string& name) { return ParamPoly::parameter(name); }

// a^3 = -1 with a, s, s^3+1 assumed nonzero.
ConstraintSetPtr cube_root_context() {
  auto cs = std::make_shared<ConstraintSet>();
  ParamPoly s = P("s");
  cs->add_rule(ParamMonomial("a", 3), ParamPoly(-1));
  cs->add_nonzero(P("a"));
  cs->add_nonzero(s);
  cs->add_nonzero(s * s * s + ParamPoly(1));
  cs->finalize();
  return cs;
}

ConstraintSetPtr nonzero_only(const ParamPoly& atom) {
  auto cs = std::make_shared<ConstraintSet>();
  cs->add_nonzero(atom);
  cs->finalize();
  return cs;
}

}  // namespace

TEST_CASE("constraint rules reduce parameter powers to normal form") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a"), s = P("s");

  CHECK(Coefficient(ctx, a * a * a) == Coefficient(-1));
  CHECK(Coefficient(ctx, a * a * a * s + s, a * a).is_zero());
  CHECK(Coefficient(ctx, ParamPoly(1)) == Coefficient(1));
}

TEST_CASE("addition is exact and collapses under constraints") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a"), s = P("s");
  ParamPoly s3p1 = s * s * s + ParamPoly(1);

  CHECK((Coefficient(ctx, ParamPoly(1), a) + Coefficient(ctx, ParamPoly(-1), a)).is_zero());

  // a/s - s^2/a^2 = (a^3 - s^3)/(s a^2), and a^3 -> -1 turns the numerator
  // into -(s^3 + 1).
  Coefficient sum = Coefficient(ctx, a, s) - Coefficient(ctx, s * s, a * a);
  CHECK(sum == Coefficient(ctx, -s3p1, s * a * a));
  CHECK(sum.str() == "-(s^3 + 1)/(a^2*s)");

  Coefficient c(ctx, a + s, s);
  CHECK(Coefficient(0) + c == c);
}

TEST_CASE("multiplication respects the constraint set") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a");

  CHECK(Coefficient(ctx, a) * Coefficient(ctx, a * a) == Coefficient(-1));

  Coefficient c(ctx, a + ParamPoly(2), P("s"));
  CHECK(c * Coefficient(1) == c);

  // 1/a^2 = a/a^3 = -a; cross-check the oracle identity a^2 * (-a) = 1.
  Coefficient inv_sq = Coefficient(ctx, ParamPoly(1), a) * Coefficient(ctx, ParamPoly(1), a);
  CHECK(inv_sq == Coefficient(ctx, -a));
  CHECK(Coefficient(ctx, a * a) * Coefficient(ctx, -a) == Coefficient(1));
}

TEST_CASE("invert succeeds on certified-nonzero numerators") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a"), s = P("s");
  ParamPoly s3p1 = s * s * s + ParamPoly(1);

  Coefficient c(ctx, -s3p1, a * s);
  Coefficient inv = c.invert();
  CHECK(inv == Coefficient(ctx, -(a * s), s3p1));
  CHECK(c * inv == Coefficient(1));

  CHECK(Coefficient(1).invert() == Coefficient(1));

  auto pctx = nonzero_only(P("p"));
  Coefficient p(pctx, P("p"));
  CHECK(p.invert() == Coefficient(pctx, ParamPoly(1), P("p")));
  CHECK(p * p.invert() == Coefficient(1));
}

TEST_CASE("invert refuses numerators it cannot certify") {
  auto pctx = nonzero_only(P("p"));

  CHECK_THROWS_AS(Coefficient(pctx, P("p") - ParamPoly(1)).invert(), NotProvablyNonzero);
  CHECK_THROWS_AS(Coefficient(pctx, P("p") + ParamPoly(2)).invert(), NotProvablyNonzero);
  CHECK_THROWS_AS(Coefficient(0).invert(), NotProvablyNonzero);

  try {
    Coefficient(pctx, ParamPoly(2) * P("p") + ParamPoly(1)).invert();
    FAIL("expected NotProvablyNonzero");
  } catch (const NotProvablyNonzero& e) {
    CHECK(e.culprit() == "2*p + 1");
  }
}

TEST_CASE("zero test is decided by the numerator normal form") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a"), s = P("s");

  CHECK(Coefficient(ctx, s * a * a * a + s, a * a * a).is_zero());
  CHECK_FALSE(Coefficient(ctx, s * s * s + ParamPoly(1)).is_zero());
  CHECK(Coefficient(ctx, a * a * a + ParamPoly(1)).is_zero());
}

TEST_CASE("fractions are gcd-reduced with monic denominator") {
  auto cs = std::make_shared<ConstraintSet>();
  cs->finalize();
  ConstraintSetPtr ctx = cs;
  ParamPoly s = P("s");

  Coefficient reduced(ctx, s * s - ParamPoly(1), s - ParamPoly(1));
  CHECK(reduced == Coefficient(ctx, s + ParamPoly(1)));
  CHECK(reduced.den() == ParamPoly(1));

  Coefficient scaled(ctx, ParamPoly(1), -s);
  CHECK(scaled.den().leading_coeff() == Rational(1));
  CHECK(scaled.str() == "-1/s");

  // Construction normalizes; renormalizing the components is a fixpoint.
  Coefficient again(ctx, reduced.num(), reduced.den());
  CHECK(again.num() == reduced.num());
  CHECK(again.den() == reduced.den());
}

TEST_CASE("multivariate gcd reduction") {
  ParamPoly a = P("a"), s = P("s");
  ParamPoly g = poly_gcd(a * s + a, s + ParamPoly(1));
  ParamPoly q;
  REQUIRE(try_exact_divide(a * s + a, g, q));
  CHECK(q * g == a * s + a);
  CHECK_FALSE(try_exact_divide(a * s + ParamPoly(1), a, q));
}

TEST_CASE("constraint sets reject ill-formed rule systems") {
  auto increasing = std::make_shared<ConstraintSet>();
  CHECK_THROWS_AS(increasing->add_rule(ParamMonomial("p"), P("p") * P("p")), ParseError);

  auto nonconfluent = std::make_shared<ConstraintSet>();
  nonconfluent->add_rule(ParamMonomial("p") * ParamMonomial("q"), ParamPoly(1));
  nonconfluent->add_rule(ParamMonomial("p", 2), ParamPoly(1));
  CHECK_THROWS_AS(nonconfluent->finalize(), ParseError);

  auto zero_atom = std::make_shared<ConstraintSet>();
  zero_atom->add_rule(ParamMonomial("a", 3), ParamPoly(-1));
  ParamPoly a = P("a");
  CHECK_THROWS_AS(zero_atom->add_nonzero(a * a * a + ParamPoly(1)), ParseError);
}

TEST_CASE("numeric substitution agrees with the symbolic value") {
  auto ctx = cube_root_context();
  ParamPoly a = P("a"), s = P("s");
  Coefficient c(ctx, -(s * s * s + ParamPoly(1)), a * s);

  // a = -1 is a rational root of a^3 = -1.
  std::map<std::string, std::complex<double>> at{{"a", {-1.0, 0.0}}, {"s", {2.0, 0.0}}};
  CHECK(std::abs(c.eval(at) - std::complex<double>(4.5, 0.0)) < 1e-9);

  // A primitive complex root of a^3 = -1 annihilates the same numerators the
  // rewrite rule does symbolically.
  std::complex<double> omega = std::polar(1.0, 3.14159265358979323846 / 3.0);
  std::map<std::string, std::complex<double>> at2{{"a", omega}, {"s", {2.0, 0.0}}};
  ParamPoly vanishing = a * a * a * s + s;
  CHECK(std::abs(vanishing.eval(at2)) < 1e-9);
  CHECK(Coefficient(ctx, vanishing, a * a).is_zero());
}
