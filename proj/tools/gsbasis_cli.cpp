// Command-line surface for the Groebner-Shirshov engine: normal forms,
// completion, certification, irreducible words, the PBW check, and the
// catalogued family driver.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsbasis/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotBasis = 1;
constexpr int kExitParse = 2;
constexpr int kExitRefused = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gsb::ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gsb::Presentation load_presentation(const std::string& path) {
  return gsb::parse_presentation(read_file(path));
}

void print_rules(const gsb::ReductionSystem& R) {
  for (size_t i = 0; i < R.rules().size(); ++i)
    std::cout << "  " << i + 1 << ". " << R.rules()[i].str(R.alphabet()) << "\n";
}

void print_composition(const gsb::Alphabet& alphabet, const gsb::CompositionRecord& rec) {
  const auto& amb = rec.ambiguity;
  std::cout << "  " << (rec.trivial ? "[trivial]    " : "[nontrivial] ")
            << (amb.kind == gsb::AmbiguityKind::Intersection ? "intersection" : "inclusion")
            << " (" << amb.left_rule + 1 << "," << amb.right_rule + 1 << ") at "
            << gsb::word_to_string(alphabet, amb.w)
            << "  nf = " << rec.normal_form.str(alphabet) << "\n";
}

/// The completed or certified basis printed as a presentation block, so the
/// output parses back into the same system.
void print_basis_block(const gsb::ReductionSystem& R) {
  gsb::Presentation out;
  out.alphabet = R.alphabet();
  out.constraints = R.context();
  out.relations = R.rules();
  std::cout << gsb::serialize(out);
}

int cmd_nf(const std::string& file, const std::string& poly_text) {
  gsb::Presentation pres = load_presentation(file);
  gsb::ReductionSystem R = build_system(pres);
  gsb::NCPoly f = gsb::parse_polynomial(poly_text, pres.alphabet, pres.constraints);
  std::cout << R.normal_form(f).str(pres.alphabet) << "\n";
  return kExitOk;
}

int cmd_complete(const std::string& file, const gsb::CompletionLimits& limits, bool as_json) {
  gsb::Presentation pres = load_presentation(file);
  gsb::ReductionSystem R = build_system(pres);
  gsb::CompletionResult res = gsb::complete(R, limits);
  if (as_json) {
    std::cout << gsb::report::envelope("completion", gsb::report::completion_json(res)).dump(2)
              << "\n";
  } else {
    std::cout << "# status: "
              << (res.status == gsb::CompletionStatus::Certified ? "Certified" : "BudgetExceeded")
              << "\n# iterations: " << res.iterations << "\n# rules: " << res.basis.size()
              << "\n# added: " << res.added.size() << "\n";
    for (const auto& f : res.added)
      std::cout << "# new rule: " << f.str(res.basis.alphabet()) << "\n";
    for (const auto& w : res.warnings)
      std::cout << "# interreduce kept rule " << w.rule_index + 1
                << " (cannot certify nonzero: " << w.refused << ")\n";
    print_basis_block(res.basis);
  }
  return res.status == gsb::CompletionStatus::Certified ? kExitOk : kExitBudget;
}

int cmd_certify(const std::string& file, bool as_json) {
  gsb::Presentation pres = load_presentation(file);
  gsb::ReductionSystem R = build_system(pres);
  gsb::CertifyReport rep = gsb::certify(R);
  if (as_json) {
    std::cout << gsb::report::envelope("certification",
                                       gsb::report::certify_json(R.alphabet(), rep))
                     .dump(2)
              << "\n";
  } else {
    std::cout << "certified: " << (rep.certified ? "true" : "false") << "\n";
    std::cout << "compositions (" << rep.records.size() << "):\n";
    for (const auto& rec : rep.records) print_composition(R.alphabet(), rec);
  }
  return rep.certified ? kExitOk : kExitNotBasis;
}

int cmd_irr(const std::string& file, unsigned max_degree) {
  gsb::Presentation pres = load_presentation(file);
  gsb::ReductionSystem R = build_system(pres);
  auto levels = R.irreducible_words(max_degree);
  size_t total = 0;
  for (unsigned d = 0; d < levels.size(); ++d) {
    std::cout << "degree " << d << " (" << levels[d].size() << "):";
    for (const auto& w : levels[d]) std::cout << " " << gsb::word_to_string(pres.alphabet, w);
    std::cout << "\n";
    total += levels[d].size();
  }
  std::cout << "total: " << total << "\n";
  return kExitOk;
}

int cmd_pbw(const std::string& file, bool as_json) {
  gsb::Presentation pres = load_presentation(file);
  gsb::ReductionSystem R = build_system(pres);
  gsb::PBWReport rep = gsb::pbw_check(R);
  if (as_json) {
    std::cout << gsb::report::envelope("pbw", gsb::report::pbw_json(rep)).dump(2) << "\n";
  } else {
    std::cout << "shape_ok: " << (rep.shape_ok ? "true" : "false") << "\n"
              << "tail_in_order: " << (rep.tail_in_order ? "true" : "false") << "\n"
              << "pbw: " << (rep.pbw ? "true" : "false") << "\n";
  }
  return kExitOk;
}

std::string family_status(const gsb::FamilyReport& rep) {
  if (rep.subs.empty()) return "Empty";
  std::string s = to_string(rep.subs.front().status);
  for (const auto& sub : rep.subs)
    if (std::string(to_string(sub.status)) != s) return "Mixed";
  return s;
}

int cmd_families(const std::string& label, bool all, unsigned jobs, const std::string& catalog_path,
                 bool as_json) {
  std::vector<gsb::FamilyPresentation> catalog;
  if (catalog_path.empty()) {
    catalog = gsb::builtin_catalog();
  } else {
    for (auto& [lab, pres] : gsb::parse_catalog(read_file(catalog_path))) {
      auto it = pres.meta.find("expected_finite");
      bool finite = it != pres.meta.end() && it->second == "true";
      catalog.push_back({lab, std::move(pres), finite});
    }
  }
  if (!all) {
    std::vector<gsb::FamilyPresentation> filtered;
    for (auto& fam : catalog)
      if (fam.label == label) filtered.push_back(std::move(fam));
    catalog = std::move(filtered);
  }
  std::vector<gsb::FamilyReport> reports = gsb::verify_all(catalog, jobs);

  if (as_json) {
    nlohmann::json fams = nlohmann::json::array();
    for (size_t i = 0; i < reports.size(); ++i)
      fams.push_back(gsb::report::family_json(catalog[i].presentation.alphabet, reports[i]));
    std::cout << gsb::report::envelope("families", {{"families", fams}}).dump(2) << "\n";
    return kExitOk;
  }

  std::printf("%-6s %-15s %-20s %-6s %-12s %-11s %s\n", "label", "expected_finite", "status",
              "rules", "ambiguities", "nontrivial", "pbw");
  size_t certified = 0;
  for (const auto& rep : reports) {
    std::string status = family_status(rep);
    if (status == "Certified") ++certified;
    size_t ambs = 0;
    size_t nontrivial = 0;
    size_t rules = 0;
    bool pbw = !rep.subs.empty();
    for (const auto& sub : rep.subs) {
      ambs = std::max(ambs, sub.certification.records.size());
      rules = std::max(rules, sub.basis_size);
      for (const auto& rec : sub.certification.records) nontrivial += rec.trivial ? 0 : 1;
      pbw = pbw && sub.pbw.pbw;
    }
    std::printf("%-6s %-15s %-20s %-6zu %-12zu %-11zu %s\n", rep.label.c_str(),
                rep.expected_finite ? "true" : "false", status.c_str(), rules, ambs, nontrivial,
                pbw ? "yes" : "no");
    for (const auto& sub : rep.subs) {
      if (sub.status == gsb::VerifyStatus::Refused)
        std::printf("       %s: %s\n", sub.name.c_str(), sub.error.c_str());
      for (const auto& w : sub.warnings)
        std::printf("       %s: interreduce kept rule %zu (cannot certify nonzero: %s)\n",
                    sub.name.c_str(), w.rule_index + 1, w.refused.c_str());
    }
  }
  std::printf("families: %zu, certified: %zu\n", reports.size(), certified);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner-Shirshov bases for finitely presented associative algebras"};
  app.require_subcommand(1);

  std::string file;
  std::string poly_text;
  std::string label;
  std::string catalog_path;
  bool all = false;
  bool as_json = false;
  unsigned max_degree = 6;
  unsigned jobs = 1;
  gsb::CompletionLimits limits;

  auto* nf = app.add_subcommand("nf", "Normal form of a polynomial modulo the presentation");
  nf->add_option("file", file, "presentation file")->required();
  nf->add_option("polynomial", poly_text, "polynomial to reduce")->required();

  auto* complete = app.add_subcommand("complete", "Run Shirshov completion on the presentation");
  complete->add_option("file", file, "presentation file")->required();
  complete->add_option("--max-iter", limits.max_iterations, "iteration budget");
  complete->add_option("--max-deg", limits.max_degree, "degree budget for new rules");
  complete->add_option("--max-rules", limits.max_rules, "rule count budget");
  complete->add_flag("--json", as_json, "structured output");

  auto* certify = app.add_subcommand("certify", "Check whether the rules form a GS basis");
  certify->add_option("file", file, "presentation file")->required();
  certify->add_flag("--json", as_json, "structured output");

  auto* irr = app.add_subcommand("irr", "List irreducible words up to a degree");
  irr->add_option("file", file, "presentation file")->required();
  irr->add_option("--max-deg", max_degree, "maximum degree");

  auto* pbw = app.add_subcommand("pbw", "Check the pairwise quadratic PBW shape");
  pbw->add_option("file", file, "presentation file")->required();
  pbw->add_flag("--json", as_json, "structured output");

  auto* families = app.add_subcommand("families", "Verify the catalogued families");
  families->add_flag("--all", all, "verify every family");
  families->add_option("--label", label, "verify a single family by label");
  families->add_option("--jobs", jobs, "parallel family verifications");
  families->add_option("--catalog", catalog_path, "catalog file overriding the builtin");
  families->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (nf->parsed()) return cmd_nf(file, poly_text);
    if (complete->parsed()) return cmd_complete(file, limits, as_json);
    if (certify->parsed()) return cmd_certify(file, as_json);
    if (irr->parsed()) return cmd_irr(file, max_degree);
    if (pbw->parsed()) return cmd_pbw(file, as_json);
    if (families->parsed()) {
      if (!all && label.empty()) {
        std::cerr << "error: families needs --all or --label\n";
        return kExitParse;
      }
      return cmd_families(label, all, jobs, catalog_path, as_json);
    }
  } catch (const gsb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const gsb::NotProvablyNonzero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRefused;
  }
  return kExitOk;
}
