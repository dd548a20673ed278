#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "gsbasis/families.hpp"
#include "gsbasis/presentation.hpp"
#include "gsbasis/shirshov.hpp"

using namespace gsb;

namespace {

const char* kCubeRootInput = R"(
generators z < y < x
constraint a^3 = -1
nonzero a, s, s^3 + 1
relation x^2 - 1/s*y*z + a/s*z*y
relation x*y - a*y*x - s*z^2
relation x*z - 1/a*z*x + s/a*y^2
)";

struct Fixture {
  Presentation pres = parse_presentation(kCubeRootInput);
  ReductionSystem S = build_system(pres);

  NCPoly parse(const std::string& text) const {
    return parse_polynomial(text, pres.alphabet, pres.constraints);
  }
  ReductionSystem enlarged() const {
    ReductionSystem R = S;
    R.add_rule(parse("y^2*z + 1/a*z*y^2"));
    R.add_rule(parse("y*z^2 + 1/a*z^2*y"));
    return R;
  }
  std::string wstr(const Word& w) const { return word_to_string(pres.alphabet, w); }
};

Presentation family(const std::string& label) {
  for (auto& [name, pres] : parse_catalog(builtin_catalog_text()))
    if (name == label) return pres;
  FAIL("family " + label + " not in catalog");
  return {};
}

}  // namespace

TEST_CASE_METHOD(Fixture, "the initial system admits exactly three ambiguities") {
  auto ambs = ambiguities(S);
  REQUIRE(ambs.size() == 3);

  CHECK(wstr(ambs[0].w) == "x^2*z");
  CHECK(ambs[0].left_rule == 0);
  CHECK(ambs[0].right_rule == 2);

  CHECK(wstr(ambs[1].w) == "x^2*y");
  CHECK(ambs[1].left_rule == 0);
  CHECK(ambs[1].right_rule == 1);
  CHECK(wstr(ambs[1].a) == "y");
  CHECK(wstr(ambs[1].b) == "x");

  CHECK(wstr(ambs[2].w) == "x^3");
  CHECK(ambs[2].left_rule == 0);
  CHECK(ambs[2].right_rule == 0);

  for (const auto& amb : ambs) {
    CHECK(amb.kind == AmbiguityKind::Intersection);
    CHECK(amb.w == S.rules()[amb.left_rule].lead_word() + amb.a);
    CHECK(amb.w == amb.b + S.rules()[amb.right_rule].lead_word());
  }
}

TEST_CASE_METHOD(Fixture, "the enlarged system gains the three quartic ambiguities") {
  auto ambs = ambiguities(enlarged());
  std::vector<std::string> words;
  for (const auto& amb : ambs) words.push_back(wstr(amb.w));
  CHECK(words == std::vector<std::string>{"x^2*z", "x^2*y", "x^3", "y^2*z^2", "x*y*z^2",
                                          "x*y^2*z"});

  CHECK(ambs[3].left_rule == 3);
  CHECK(ambs[3].right_rule == 4);
  CHECK(ambs[4].left_rule == 1);
  CHECK(ambs[4].right_rule == 4);
  CHECK(ambs[5].left_rule == 1);
  CHECK(ambs[5].right_rule == 3);
}

TEST_CASE_METHOD(Fixture, "words without overlap admit no ambiguities") {
  ReductionSystem R(pres.alphabet, pres.constraints);
  R.add_rule(parse("x*y - y*x"));
  CHECK(ambiguities(R).empty());

  R.add_rule(parse("x*z + y^2"));
  // x*y and x*z share no suffix-prefix pair in either order.
  CHECK(ambiguities(R).empty());
}

TEST_CASE_METHOD(Fixture, "raw compositions match the hand expansion") {
  auto ambs = ambiguities(S);
  REQUIRE(ambs.size() == 3);

  CHECK(composition(S, ambs[1]) == parse("-1/s*y*z*y + a/s*z*y^2 + a*x*y*x + s*x*z^2"));
  CHECK(composition(S, ambs[2]) == parse("-1/s*y*z*x + a/s*z*y*x + 1/s*x*y*z - a/s*x*z*y"));
}

TEST_CASE_METHOD(Fixture, "equal leading words meet in an inclusion ambiguity") {
  ReductionSystem R(pres.alphabet, pres.constraints);
  R.add_rule(parse("x*y - y*x"));
  R.add_rule(parse("x*y - 2*y*x"));
  auto ambs = ambiguities(R);
  REQUIRE(ambs.size() == 2);
  CHECK(ambs[0].kind == AmbiguityKind::Inclusion);
  CHECK(ambs[0].a.empty());
  CHECK(ambs[0].b.empty());
  CHECK(composition(R, ambs[0]) == parse("y*x"));

  auto report = certify(R);
  CHECK_FALSE(report.certified);
}

TEST_CASE_METHOD(Fixture, "certification of the initial system pins the residue") {
  auto report = certify(S);
  CHECK_FALSE(report.certified);
  REQUIRE(report.records.size() == 3);

  const auto& at_x2z = report.records[0];
  CHECK_FALSE(at_x2z.trivial);
  CHECK(at_x2z.normal_form ==
        parse("-(s^3 + 1)/s*y*z^2 - (s^3 + 1)/(a*s)*z^2*y"));
  CHECK(make_monic(at_x2z.normal_form) == parse("y*z^2 + 1/a*z^2*y"));

  const auto& at_x2y = report.records[1];
  CHECK_FALSE(at_x2y.trivial);
  CHECK(at_x2y.normal_form ==
        parse("-(s^3 + 1)/(a^2*s)*z*y^2 - (s^3 + 1)/(a*s)*y^2*z"));
  CHECK(make_monic(at_x2y.normal_form) == parse("y^2*z + 1/a*z*y^2"));

  const auto& at_x3 = report.records[2];
  CHECK(at_x3.trivial);

  // Each record's certificate re-expands to the raw composition.
  for (const auto& rec : report.records) {
    NCPoly rebuilt = rec.normal_form;
    for (const auto& step : rec.trace)
      rebuilt =
          rebuilt + S.rules()[step.rule].conjugated(step.left, step.right).scaled(step.coeff);
    CHECK(rebuilt == rec.raw);
  }
}

TEST_CASE_METHOD(Fixture, "certification of the completed basis succeeds") {
  auto report = certify(enlarged());
  CHECK(report.certified);
  REQUIRE(report.records.size() == 6);
  for (const auto& rec : report.records) {
    CHECK(rec.trivial);
    CHECK(rec.normal_form.is_zero());
  }
}

TEST_CASE_METHOD(Fixture, "completion adds the two cubic rules in order") {
  auto result = complete(S);
  CHECK(result.status == CompletionStatus::Certified);
  CHECK(result.iterations == 2);
  REQUIRE(result.added.size() == 2);
  CHECK(result.added[0] == parse("y*z^2 + 1/a*z^2*y"));
  CHECK(result.added[1] == parse("y^2*z + 1/a*z*y^2"));
  CHECK(result.basis.size() == 5);
  CHECK(result.warnings.empty());

  // The x^2*z ambiguity sorts below x^2*y, so its residue lands first.
  REQUIRE(result.trace.size() == 2);
  CHECK(wstr(result.trace[0].ambiguity.w) == "x^2*z");
  CHECK(wstr(result.trace[1].ambiguity.w) == "x^2*y");

  CHECK(certify(result.basis).certified);
  for (const auto& r : result.basis.rules()) CHECK(r.lead_coeff() == Coefficient(1));
}

TEST_CASE_METHOD(Fixture, "completion is idempotent on a certified basis") {
  auto first = complete(S);
  auto second = complete(first.basis);
  CHECK(second.status == CompletionStatus::Certified);
  CHECK(second.iterations == 0);
  CHECK(second.added.empty());
  CHECK(second.basis.rules() == first.basis.rules());
}

TEST_CASE_METHOD(Fixture, "a lone commutator certifies with no ambiguities") {
  ReductionSystem R(pres.alphabet, pres.constraints);
  R.add_rule(parse("x*y - y*x"));
  CHECK(ambiguities(R).empty());
  auto result = complete(R);
  CHECK(result.status == CompletionStatus::Certified);
  CHECK(result.iterations == 0);
  CHECK(result.added.empty());
}

TEST_CASE_METHOD(Fixture, "budget limits interrupt completion honestly") {
  CompletionLimits one_pass;
  one_pass.max_iterations = 1;
  auto result = complete(S, one_pass);
  CHECK(result.status == CompletionStatus::BudgetExceeded);
  CHECK(result.iterations == 1);
  CHECK(result.added.size() == 1);
  CHECK(result.basis.size() == 4);

  CompletionLimits three_rules;
  three_rules.max_rules = 3;
  auto capped = complete(S, three_rules);
  CHECK(capped.status == CompletionStatus::BudgetExceeded);
  CHECK(capped.iterations == 0);
  CHECK(capped.added.size() == 1);

  CompletionLimits quadratic_only;
  quadratic_only.max_degree = 2;
  auto degree_capped = complete(S, quadratic_only);
  CHECK(degree_capped.status == CompletionStatus::BudgetExceeded);
  CHECK(degree_capped.added.empty());
}

TEST_CASE("completion propagates a refused monicization") {
  Presentation f = family("F");
  try {
    complete(build_system(f));
    FAIL("expected NotProvablyNonzero");
  } catch (const NotProvablyNonzero& e) {
    CHECK(e.culprit() == "p - 1");
  }
}

TEST_CASE("family K certifies with exactly four trivial compositions") {
  Presentation k = family("K");
  auto subs = expand_choices(k);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].first == "q=1");
  CHECK(subs[1].first == "q=-1");

  for (const auto& [tag, pres] : subs) {
    ReductionSystem R = build_system(pres);
    CHECK(R.interreduce().empty());
    auto report = certify(R);
    CHECK(report.certified);
    REQUIRE(report.records.size() == 4);
    std::vector<std::string> words;
    for (const auto& rec : report.records)
      words.push_back(word_to_string(R.alphabet(), rec.ambiguity.w));
    CHECK(words == std::vector<std::string>{"x1*y2*y1", "x2*y2*y1", "x2*x1*y1", "x2*x1*y2"});
  }
}

TEST_CASE("pbw_check recognizes the pairwise quadratic shape") {
  Presentation a = family("A");
  ReductionSystem R = build_system(a);
  R.interreduce();
  auto report = pbw_check(R);
  CHECK(report.shape_ok);
  CHECK(report.pbw);
  // The x2*y1 rule carries the tail word y2*x1 above the reversed lead.
  CHECK_FALSE(report.tail_in_order);
}

TEST_CASE("pbw_check on shape-breaking and non-certifying systems") {
  Presentation pres = parse_presentation(kCubeRootInput);
  auto completed = complete(build_system(pres));
  auto cubic = pbw_check(completed.basis);
  CHECK_FALSE(cubic.shape_ok);
  CHECK_FALSE(cubic.pbw);

  // A perturbed coefficient keeps the pairwise shape but breaks confluence.
  Presentation skew = parse_presentation(R"(generators y1 < y2 < x1 < x2
relation x2*x1 - x1*x2
relation y2*y1 - y1*y2 - y1^2
relation x1*y1 - y1*x1
relation x2*y1 + y2*x1 - 2*y1*x2
relation x1*y2 - y2*x1
relation x2*y2 - y2*x2 + y2*x1 - 2*y1*x2
)");
  auto broken = pbw_check(build_system(skew));
  CHECK(broken.shape_ok);
  CHECK_FALSE(broken.pbw);

  // Family F's colliding x2*y2 leads cannot be separated without dividing
  // by p - 1, so interreduction leaves the shape check unsatisfied.
  Presentation f = family("F");
  ReductionSystem RF = build_system(f);
  RF.interreduce();
  auto refused = pbw_check(RF);
  CHECK_FALSE(refused.shape_ok);
  CHECK_FALSE(refused.pbw);
}
