#ifndef GSBASIS_FAMILIES_HPP
#define GSBASIS_FAMILIES_HPP

#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gsbasis/presentation.hpp"
#include "gsbasis/shirshov.hpp"

namespace gsb {

/// One catalogued family: a quadratic presentation on y1 < y2 < x1 < x2
/// plus the published finite-basis expectation.
struct FamilyPresentation {
  std::string label;
  Presentation presentation;
  bool expected_finite;
};

enum class VerifyStatus { Certified, FirstPassNontrivial, BudgetExceeded, Refused };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Certified: return "Certified";
    case VerifyStatus::FirstPassNontrivial: return "FirstPassNontrivial";
    case VerifyStatus::BudgetExceeded: return "BudgetExceeded";
    case VerifyStatus::Refused: return "Refused";
  }
  return "?";
}

/// Verification outcome for one concrete parameter assignment.  Refused
/// rows carry the refusal message; the other fields describe the
/// interreduced system and its certification.
struct SubInstanceReport {
  std::string name;
  VerifyStatus status = VerifyStatus::Refused;
  std::string error;
  size_t basis_size = 0;
  std::vector<InterreduceWarning> warnings;
  CertifyReport certification;
  PBWReport pbw{false, false, false};
};

struct FamilyReport {
  std::string label;
  bool expected_finite = false;
  std::vector<SubInstanceReport> subs;

  bool all_certified() const {
    for (const auto& s : subs)
      if (s.status != VerifyStatus::Certified) return false;
    return !subs.empty();
  }
};

/// Builds, interreduces, and certifies one concrete presentation; runs the
/// PBW check when certification succeeds.  A refused coefficient inversion
/// is recorded on the report instead of propagating.
inline SubInstanceReport verify_instance(const std::string& name, const Presentation& pres) {
  SubInstanceReport rep;
  rep.name = name;
  try {
    ReductionSystem R = build_system(pres);
    rep.warnings = R.interreduce();
    rep.basis_size = R.size();
    rep.certification = certify(R);
    if (rep.certification.certified) {
      rep.status = VerifyStatus::Certified;
      rep.pbw = pbw_check(R);
    } else {
      rep.status = VerifyStatus::FirstPassNontrivial;
    }
  } catch (const NotProvablyNonzero& e) {
    rep.status = VerifyStatus::Refused;
    rep.error = e.what();
  }
  return rep;
}

/// Verifies a family, expanding discrete parameter choices into named
/// sub-instances like "D[p=1]".
inline FamilyReport verify_family(const FamilyPresentation& fam) {
  FamilyReport report{fam.label, fam.expected_finite, {}};
  for (const auto& [tag, pres] : expand_choices(fam.presentation)) {
    std::string name = tag.empty() ? fam.label : fam.label + "[" + tag + "]";
    report.subs.push_back(verify_instance(name, pres));
  }
  return report;
}

/// Verifies every family in catalog order; `jobs` > 1 distributes families
/// across that many threads.  Output order is independent of scheduling.
inline std::vector<FamilyReport> verify_all(const std::vector<FamilyPresentation>& catalog,
                                            unsigned jobs = 1) {
  std::vector<FamilyReport> out(catalog.size());
  if (jobs <= 1 || catalog.size() <= 1) {
    for (size_t i = 0; i < catalog.size(); ++i) out[i] = verify_family(catalog[i]);
    return out;
  }
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (size_t i = cursor.fetch_add(1); i < catalog.size(); i = cursor.fetch_add(1))
      out[i] = verify_family(catalog[i]);
  };
  std::vector<std::thread> pool;
  size_t nthreads = std::min<size_t>(jobs, catalog.size());
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

/// The catalog text, identical to the data/families.txt file shipped with
/// the repository so the relations stay auditable in one format.
inline const char* builtin_catalog_text() {
  static const char* text = R"cat(# Quadratic presentations of the 26 double-extension families,
# one block per label, in the format the CLI accepts.

family A
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 - x1*x2
relation y2*y1 - y1*y2 - y1^2
relation y1*x1 - x1*y1
relation y1*x2 - x2*y1 - x1*y2
relation y2*x1 - x1*y2
relation y2*x2 + 2*x2*y1 + x1*y2 - x2*y2

family B
generators y1 < y2 < x1 < x2
constraint p^2 = -1
nonzero p
meta expected_finite = true
relation x2*x1 - p*x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 - x2*y2
relation y1*x2 - x1*y2
relation y2*x1 + x2*y1
relation y2*x2 - x1*y1

family C
generators y1 < y2 < x1 < x2
constraint p^2 = -p - 1
nonzero p
meta expected_finite = false
relation x2*x1 - p*x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 + x1*y1 - p^2*x2*y1 - x1*y2 + p*x2*y2
relation y1*x2 + p*x1*y1 - x2*y1 - x1*y2 + p*x2*y2
relation y2*x1 + p*x1*y1 + 2*p^2*x2*y1 - p*x1*y2 + p*x2*y2
relation y2*x2 + p*x1*y1 - p^2*x2*y1 - x1*y2 + x2*y2

family D
generators y1 < y2 < x1 < x2
choices p = 1, -1
meta expected_finite = true
relation x2*x1 + x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 + p*x1*y1
relation y1*x2 + p^2*x2*y1 - x1*y2
relation y2*x1 - p*x1*y2
relation y2*x2 - x1*y1 - x2*y2

family E
generators y1 < y2 < x1 < x2
constraint p^2 = -1
nonzero p
meta expected_finite = true
relation x2*x1 + x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 - x1*y2 - x2*y2
relation y1*x2 - x1*y2 + x2*y2
relation y2*x1 + x1*y1 - x2*y1
relation y2*x2 - x1*y1 - x2*y1

family F
generators y1 < y2 < x1 < x2
constraint p^2 = -1
nonzero p
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 + x1*y1 + p*x2*y1 - x1*y2 + x2*y2
relation y1*x2 + p*x1*y1 - x2*y1 - x1*y2 - x2*y2
relation y2*x1 + p*x1*y1 - p*x2*y1 - p*x1*y2 - x2*y2
relation y2*x2 + p*x1*y1 + p*x2*y1 - x1*y2 + p*x2*y2

family G
generators y1 < y2 < x1 < x2
nonzero p, p - 1, p + 1, alpha
meta expected_finite = true
relation x2*x1 - x1*x2
relation y2*y1 - p*y1*y2
relation y1*x1 - p*x1*y1
relation y1*x2 - p*x1*y1 - p^2*x2*y1 - x1*y2
relation y2*x1 - p*x1*y2
relation y2*x2 - alpha*x1*y1 + x1*y2 - x2*y2

family H
generators y1 < y2 < x1 < x2
nonzero alpha
meta expected_finite = false
relation x2*x1 - x1*x2 - x1^2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y2
relation y1*x2 - alpha*x1*y2 - x2*y2
relation y2*x1 - x1*y1
relation y2*x2 - alpha*x1*y1 - x2*y1

family I
generators y1 < y2 < x1 < x2
constraint q^2 = -1
nonzero q
meta expected_finite = false
relation x2*x1 - q*x1*x2
relation y2*y1 + y1*y2
relation y1*x1 + q*x1*y1 + q*x2*y1 - x1*y2 + q*x2*y2
relation y1*x2 - x1*y1 - x2*y1 - x1*y2 + q*x2*y2
relation y2*x1 - x1*y1 - q*x2*y1 - q*x1*y2 + q*x2*y2
relation y2*x2 + x1*y1 + q*x2*y1 - x1*y2 + x2*y2

family J
generators y1 < y2 < x1 < x2
constraint q^2 = -1
nonzero q
meta expected_finite = false
relation x2*x1 - q*x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x2*y1 - x2*y2
relation y1*x2 + x1*y1 - x1*y2
relation y2*x1 - x2*y1 + x2*y2
relation y2*x2 - x1*y1 - x1*y2

family K
generators y1 < y2 < x1 < x2
nonzero alpha
choices q = 1, -1
meta expected_finite = true
relation x2*x1 - q*x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y1
relation y1*x2 - x2*y2
relation y2*x1 - x1*y2
relation y2*x2 - alpha*x2*y1

family L
generators y1 < y2 < x1 < x2
nonzero alpha
choices q = 1, -1
meta expected_finite = true
relation x2*x1 - q*x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - alpha*x1*y2
relation y1*x2 - x2*y2
relation y2*x1 - alpha*x1*y1
relation y2*x2 - x2*y1

family M
generators y1 < y2 < x1 < x2
nonzero alpha - 1
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x2*y1 - x1*y2
relation y1*x2 - alpha*x1*y1 + x2*y2
relation y2*x1 - x1*y1 + x2*y2
relation y2*x2 + x2*y1 + alpha*x1*y2

family N
generators y1 < y2 < x1 < x2
nonzero alpha^2 - beta^2
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 + beta*x2*y1 - alpha*x2*y2
relation y1*x2 - beta*x1*y1 - alpha*x1*y2
relation y2*x1 - alpha*x2*y1 + beta*x2*y2
relation y2*x2 - alpha*x1*y1 - beta*x1*y2

family O
generators y1 < y2 < x1 < x2
nonzero alpha + 1
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y1 - alpha*x2*y2
relation y1*x2 + x2*y1 - x1*y2
relation y2*x1 - alpha*x2*y1 + x1*y2
relation y2*x2 - x1*y1 - x2*y2

family P
generators y1 < y2 < x1 < x2
nonzero alpha + 1
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y2 - alpha*x2*y2
relation y1*x2 - x1*y2 - x2*y2
relation y2*x1 - x1*y1 + alpha*x2*y1
relation y2*x2 + x1*y1 - x2*y1

family Q
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y2
relation y1*x2 - x1*y1 - x2*y1 - x1*y2
relation y2*x1 + x1*y1
relation y2*x2 - x1*y1 + x1*y2 - x2*y2

family R
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y1 - x2*y1 - x1*y2
relation y1*x2 - x1*y2
relation y2*x1 - x2*y1
relation y2*x2 + x2*y1 + x1*y2 - x2*y2

family S
generators y1 < y2 < x1 < x2
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 + x1*y1 - x2*y1 - x1*y2 - x2*y2
relation y1*x2 - x1*y1 + x2*y1 - x1*y2 - x2*y2
relation y2*x1 - x1*y1 - x2*y1 + x1*y2 - x2*y2
relation y2*x2 - x1*y1 - x2*y1 - x1*y2 + x2*y2

family T
generators y1 < y2 < x1 < x2
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 + x1*y1 - x2*y1 - x1*y2 - x2*y2
relation y1*x2 - x1*y1 + x2*y1 - x1*y2 - x2*y2
relation y2*x1 - x1*y1 - x2*y1 - x1*y2 + x2*y2
relation y2*x2 - x1*y1 - x2*y1 + x1*y2 - x2*y2

family U
generators y1 < y2 < x1 < x2
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 + y1*y2
relation y1*x1 + x1*y1 - x2*y1 - x1*y2 - x2*y2
relation y1*x2 - x1*y1 - x2*y1 - x1*y2 + x2*y2
relation y2*x1 - x1*y1 - x2*y1 + x1*y2 - x2*y2
relation y2*x2 - x1*y1 + x2*y1 - x1*y2 - x2*y2

family V
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 - x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x2*y1 - x1*y2
relation y1*x2 - x2*y1
relation y2*x1 + x1*y1 - x2*y1
relation y2*x2 - x2*y2

family W
generators y1 < y2 < x1 < x2
nonzero alpha + 1
meta expected_finite = false
relation x2*x1 - x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - alpha*x2*y1 - x1*y2
relation y1*x2 - x1*y1 + x2*y2
relation y2*x1 - x1*y1 - alpha*x2*y2
relation y2*x2 + x2*y1 - x1*y2

family X
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 - x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y2
relation y1*x2 - x1*y2 - x2*y2
relation y2*x1 - x1*y1
relation y2*x2 - x1*y1 - x2*y1

family Y
generators y1 < y2 < x1 < x2
meta expected_finite = true
relation x2*x1 - x1*x2
relation y2*y1 + y1*y2
relation y1*x1 - x1*y1
relation y1*x2 - alpha*x1*y1 + x2*y1 - x1*y2
relation y2*x1 - x1*y2
relation y2*x2 - x1*y1 - alpha*x1*y2 + x2*y2

family Z
generators y1 < y2 < x1 < x2
nonzero alpha, alpha + 1
meta expected_finite = false
relation x2*x1 + x1*x2
relation y2*y1 - y1*y2
relation y1*x1 - x1*y1 - x2*y2
relation y1*x2 - x2*y1 - x1*y2
relation y2*x1 - alpha*x2*y1 + x1*y2
relation y2*x2 - alpha*x1*y1 + x2*y2
)cat";
  return text;
}

inline std::vector<FamilyPresentation> builtin_catalog() {
  std::vector<FamilyPresentation> out;
  for (auto& [label, pres] : parse_catalog(builtin_catalog_text())) {
    auto it = pres.meta.find("expected_finite");
    bool finite = it != pres.meta.end() && it->second == "true";
    out.push_back({label, std::move(pres), finite});
  }
  return out;
}

}  // namespace gsb

#endif  // GSBASIS_FAMILIES_HPP
