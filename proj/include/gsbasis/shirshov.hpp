#ifndef GSBASIS_SHIRSHOV_HPP
#define GSBASIS_SHIRSHOV_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gsbasis/rewrite.hpp"

namespace gsb {

enum class AmbiguityKind { Intersection, Inclusion };

/// Overlap between two leading words.  Intersection: u*a = b*v = w with a
/// proper overlap.  Inclusion: u = a*v*b = w for distinct rules, where the
/// inner rule's leading word is no longer than the outer one.
struct Ambiguity {
  AmbiguityKind kind;
  size_t left_rule;
  size_t right_rule;
  Word w;
  Word a;
  Word b;
};

/// Every ambiguity of the system: intersections over all ordered rule pairs
/// (a rule may overlap itself), inclusions over distinct pairs only.
/// Sorted by deglex of the ambiguity word, then by rule indices.
inline std::vector<Ambiguity> ambiguities(const ReductionSystem& R) {
  const auto& rules = R.rules();
  std::vector<Ambiguity> out;
  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& u = rules[i].lead_word();
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& v = rules[j].lead_word();
      for (const auto& [a, b] : find_intersections(u, v))
        out.push_back({AmbiguityKind::Intersection, i, j, u + a, a, b});
      if (i == j) continue;
      for (const auto& [a, b] : find_inclusions(u, v))
        out.push_back({AmbiguityKind::Inclusion, i, j, u, a, b});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Ambiguity& x, const Ambiguity& y) {
    int c = deglex_compare(x.w, y.w);
    if (c != 0) return c < 0;
    if (x.left_rule != y.left_rule) return x.left_rule < y.left_rule;
    return x.right_rule < y.right_rule;
  });
  return out;
}

/// The raw composition polynomial at an ambiguity: f*a - b*g for an
/// intersection, f - a*g*b for an inclusion.  Leading terms cancel because
/// rules are monic.
inline NCPoly composition(const ReductionSystem& R, const Ambiguity& amb) {
  const NCPoly& f = R.rules()[amb.left_rule];
  const NCPoly& g = R.rules()[amb.right_rule];
  if (amb.kind == AmbiguityKind::Intersection)
    return f.conjugated(Word(), amb.a) - g.conjugated(amb.b, Word());
  return f - g.conjugated(amb.a, amb.b);
}

struct CompositionRecord {
  Ambiguity ambiguity;
  NCPoly raw;
  NCPoly normal_form;
  std::vector<ReductionStep> trace;
  bool trivial;
};

struct CertifyReport {
  bool certified;
  std::vector<CompositionRecord> records;
};

/// Checks every composition for triviality (zero normal form), keeping the
/// reduction trace of each as its certificate.
inline CertifyReport certify(const ReductionSystem& R) {
  CertifyReport report;
  report.certified = true;
  for (const auto& amb : ambiguities(R)) {
    NCPoly raw = composition(R, amb);
    auto [nf, trace] = R.normal_form_traced(raw);
    bool trivial = nf.is_zero();
    if (!trivial) report.certified = false;
    report.records.push_back({amb, std::move(raw), std::move(nf), std::move(trace), trivial});
  }
  return report;
}

struct CompletionLimits {
  unsigned max_iterations = 50;
  unsigned max_degree = 12;
  size_t max_rules = 500;
};

enum class CompletionStatus { Certified, BudgetExceeded };

struct CompletionResult {
  ReductionSystem basis;
  CompletionStatus status;
  unsigned iterations;
  std::vector<NCPoly> added;
  std::vector<CompositionRecord> trace;
  std::vector<InterreduceWarning> warnings;
};

/// Shirshov's completion loop.  Interreduces, then repeatedly scans the
/// ambiguities in sorted order; the first nontrivial composition found has
/// its monic normal form appended as a new rule, the system is interreduced
/// again, and the scan restarts.  Certified once a full scan is trivial;
/// BudgetExceeded when a limit trips.  NotProvablyNonzero propagates if a
/// new element cannot be made monic.
inline CompletionResult complete(const ReductionSystem& input, const CompletionLimits& limits = {}) {
  CompletionResult result{input, CompletionStatus::Certified, 0, {}, {}, {}};
  ReductionSystem& R = result.basis;
  auto warn = R.interreduce();
  result.warnings.insert(result.warnings.end(), warn.begin(), warn.end());
  for (;;) {
    bool found = false;
    for (const auto& amb : ambiguities(R)) {
      NCPoly raw = composition(R, amb);
      auto [nf, trace] = R.normal_form_traced(raw);
      if (nf.is_zero()) continue;
      found = true;
      if (result.iterations >= limits.max_iterations ||
          nf.lead_word().size() > limits.max_degree) {
        result.status = CompletionStatus::BudgetExceeded;
        return result;
      }
      result.trace.push_back({amb, std::move(raw), nf, std::move(trace), false});
      NCPoly rule = make_monic(nf);
      R.add_rule(rule);
      result.added.push_back(rule);
      if (R.size() > limits.max_rules) {
        result.status = CompletionStatus::BudgetExceeded;
        return result;
      }
      warn = R.interreduce();
      result.warnings.insert(result.warnings.end(), warn.begin(), warn.end());
      ++result.iterations;
      break;
    }
    if (!found) return result;
  }
}

struct PBWReport {
  bool shape_ok;
  bool tail_in_order;
  bool pbw;
};

/// Tests whether the rules have the pairwise quadratic shape: exactly one
/// rule per generator pair i < j with leading word x_j x_i, a scalar
/// multiple of x_i x_j, and a remaining tail none of whose words occurs as
/// a subword of any leading word.  pbw holds when the shape check and the
/// certification both pass.  tail_in_order is informational: it reports
/// whether every tail word stays deglex-below the reversed leading word.
inline PBWReport pbw_check(const ReductionSystem& R) {
  const auto& rules = R.rules();
  const size_t n = R.alphabet().size();
  PBWReport report{true, true, false};
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  size_t pairs = 0;
  for (const auto& r : rules) {
    const Word& lw = r.lead_word();
    if (lw.size() != 2 || lw[0] <= lw[1]) {
      report.shape_ok = false;
      continue;
    }
    size_t hi = static_cast<unsigned char>(lw[0]);
    size_t lo = static_cast<unsigned char>(lw[1]);
    if (seen[lo][hi]) {
      report.shape_ok = false;
      continue;
    }
    seen[lo][hi] = true;
    ++pairs;
    Word reversed{lw[1], lw[0]};
    for (const auto& [w, c] : r.terms()) {
      if (w == lw) continue;
      if (deglex_compare(w, reversed) > 0) report.tail_in_order = false;
      if (w == reversed) continue;
      for (const auto& other : rules)
        if (find_subword(other.lead_word(), w) != Word::npos) report.shape_ok = false;
    }
  }
  if (pairs != n * (n - 1) / 2) report.shape_ok = false;
  report.pbw = report.shape_ok && certify(R).certified;
  return report;
}

}  // namespace gsb

#endif  // GSBASIS_SHIRSHOV_HPP
