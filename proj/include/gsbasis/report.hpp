#ifndef GSBASIS_REPORT_HPP
#define GSBASIS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "gsbasis/families.hpp"

namespace gsb {

/// Version tag carried in the top-level `schema` field of every structured
/// report this library emits.
inline constexpr const char* kReportSchema = "gsbasis.report/1";

namespace report {

using nlohmann::json;

inline json word_json(const Alphabet& alphabet, const Word& w) {
  return word_to_string(alphabet, w);
}

inline json poly_json(const Alphabet& alphabet, const NCPoly& f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"word", word_to_string(alphabet, it->first)},
                     {"coeff", it->second.str()}});
  return {{"text", f.str(alphabet)}, {"terms", terms}};
}

inline json rules_json(const ReductionSystem& R) {
  json rules = json::array();
  for (const auto& r : R.rules()) rules.push_back(poly_json(R.alphabet(), r));
  return rules;
}

inline json ambiguity_json(const Alphabet& alphabet, const Ambiguity& amb) {
  return {{"kind", amb.kind == AmbiguityKind::Intersection ? "intersection" : "inclusion"},
          {"left_rule", amb.left_rule},
          {"right_rule", amb.right_rule},
          {"word", word_to_string(alphabet, amb.w)},
          {"a", word_to_string(alphabet, amb.a)},
          {"b", word_to_string(alphabet, amb.b)}};
}

inline json composition_json(const Alphabet& alphabet, const CompositionRecord& rec) {
  return {{"ambiguity", ambiguity_json(alphabet, rec.ambiguity)},
          {"raw", poly_json(alphabet, rec.raw)},
          {"normal_form", poly_json(alphabet, rec.normal_form)},
          {"reduction_steps", rec.trace.size()},
          {"trivial", rec.trivial}};
}

inline json certify_json(const Alphabet& alphabet, const CertifyReport& rep) {
  json records = json::array();
  for (const auto& rec : rep.records) records.push_back(composition_json(alphabet, rec));
  return {{"certified", rep.certified}, {"compositions", records}};
}

inline json warnings_json(const std::vector<InterreduceWarning>& warnings) {
  json out = json::array();
  for (const auto& w : warnings)
    out.push_back({{"rule", w.rule_index}, {"refused", w.refused}});
  return out;
}

inline json completion_json(const CompletionResult& res) {
  const Alphabet& alphabet = res.basis.alphabet();
  json added = json::array();
  for (const auto& f : res.added) added.push_back(poly_json(alphabet, f));
  json trace = json::array();
  for (const auto& rec : res.trace) trace.push_back(composition_json(alphabet, rec));
  return {{"status", res.status == CompletionStatus::Certified ? "Certified" : "BudgetExceeded"},
          {"iterations", res.iterations},
          {"basis", rules_json(res.basis)},
          {"added", added},
          {"trace", trace},
          {"warnings", warnings_json(res.warnings)}};
}

inline json pbw_json(const PBWReport& rep) {
  return {{"shape_ok", rep.shape_ok}, {"tail_in_order", rep.tail_in_order}, {"pbw", rep.pbw}};
}

inline json sub_instance_json(const Alphabet& alphabet, const SubInstanceReport& rep) {
  json j{{"name", rep.name},
         {"status", to_string(rep.status)},
         {"basis_size", rep.basis_size},
         {"warnings", warnings_json(rep.warnings)}};
  if (rep.status == VerifyStatus::Refused) {
    j["error"] = rep.error;
    return j;
  }
  j["certification"] = certify_json(alphabet, rep.certification);
  if (rep.status == VerifyStatus::Certified) j["pbw"] = pbw_json(rep.pbw);
  return j;
}

inline json family_json(const Alphabet& alphabet, const FamilyReport& rep) {
  json subs = json::array();
  for (const auto& s : rep.subs) subs.push_back(sub_instance_json(alphabet, s));
  return {{"label", rep.label},
          {"expected_finite", rep.expected_finite},
          {"sub_instances", subs}};
}

/// Wraps a payload in the versioned envelope: {"schema": ..., "kind": ...}.
inline json envelope(const std::string& kind, json payload) {
  payload["schema"] = kReportSchema;
  payload["kind"] = kind;
  return payload;
}

}  // namespace report

}  // namespace gsb

#endif  // GSBASIS_REPORT_HPP
