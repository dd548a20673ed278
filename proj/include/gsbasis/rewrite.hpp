#ifndef GSBASIS_REWRITE_HPP
#define GSBASIS_REWRITE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsbasis/ncpoly.hpp"

namespace gsb {

/// Scale the polynomial so its leading coefficient is 1.  The required
/// inversion is certified; NotProvablyNonzero propagates on refusal.
inline NCPoly make_monic(const NCPoly& f) {
  if (f.is_zero()) return f;
  if (f.lead_coeff() == Coefficient(1)) return f;
  return f.scaled(f.lead_coeff().invert());
}

/// One rewriting step: f gained -coeff * (left * rules[rule] * right).
struct ReductionStep {
  size_t rule;
  Word left;
  Word right;
  Coefficient coeff;
};

struct InterreduceWarning {
  size_t rule_index;
  std::string refused;
};

/// Ordered list of monic rewriting rules over a shared alphabet and
/// constraint set.  Reduction is deterministic: highest reducible term,
/// first matching rule in system order, leftmost occurrence of its leading
/// word.
class ReductionSystem {
 public:
  ReductionSystem(Alphabet alphabet, ConstraintSetPtr ctx)
      : alphabet_(std::move(alphabet)), ctx_(std::move(ctx)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const ConstraintSetPtr& context() const { return ctx_; }
  const std::vector<NCPoly>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }

  /// Adds the monic form of a nonzero polynomial as the last rule.
  void add_rule(const NCPoly& raw) {
    if (raw.is_zero()) throw ParseError("zero polynomial cannot be a rule");
    rules_.push_back(make_monic(raw));
  }

  /// Performs the single deterministic rewriting step, if any applies.
  std::optional<std::pair<NCPoly, ReductionStep>> reduce_once(const NCPoly& f) const {
    return reduce_once_skipping(f, rules_.size());
  }

  NCPoly normal_form(const NCPoly& f) const {
    NCPoly g = f;
    while (auto step = reduce_once(g)) g = std::move(step->first);
    return g;
  }

  /// Normal form together with the certificate trace: the list of steps
  /// (rule, left, right, coeff) with f = nf + sum coeff * left*rule*right.
  std::pair<NCPoly, std::vector<ReductionStep>> normal_form_traced(const NCPoly& f) const {
    NCPoly g = f;
    std::vector<ReductionStep> trace;
    while (auto step = reduce_once(g)) {
      g = std::move(step->first);
      trace.push_back(std::move(step->second));
    }
    return {g, trace};
  }

  /// Reduces every rule to normal form against the others until nothing
  /// changes.  A rule whose reduced form cannot be re-monicized (refused
  /// inversion) is kept unchanged and reported in the returned warnings.
  std::vector<InterreduceWarning> interreduce() {
    std::vector<InterreduceWarning> warnings;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < rules_.size(); ++i) {
        auto [h, applied] = normal_form_skipping(rules_[i], i);
        if (!applied) continue;
        if (h.is_zero()) {
          rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        try {
          rules_[i] = make_monic(h);
          changed = true;
          break;
        } catch (const NotProvablyNonzero& e) {
          warnings.push_back({i, e.culprit()});
        }
      }
    }
    return warnings;
  }

  bool is_irreducible(const Word& w) const {
    for (const auto& r : rules_)
      if (find_subword(w, r.lead_word()) != Word::npos) return false;
    return true;
  }

  /// Irreducible words per degree, 0..max_degree, each list in deglex order.
  std::vector<std::vector<Word>> irreducible_words(unsigned max_degree) const {
    std::vector<std::vector<Word>> out(max_degree + 1);
    out[0].push_back(Word());
    for (unsigned d = 1; d <= max_degree; ++d) {
      for (const auto& w : out[d - 1]) {
        if (!is_irreducible(w)) continue;
        for (size_t g = 0; g < alphabet_.size(); ++g) {
          Word next = w + static_cast<char>(g);
          if (is_irreducible(next)) out[d].push_back(next);
        }
      }
    }
    return out;
  }

 private:
  /// Reduction with one rule excluded (used by interreduce); skip == size()
  /// means no exclusion.
  std::optional<std::pair<NCPoly, ReductionStep>> reduce_once_skipping(const NCPoly& f,
                                                                       size_t skip) const {
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const Word& w = it->first;
      for (size_t r = 0; r < rules_.size(); ++r) {
        if (r == skip) continue;
        const Word& lw = rules_[r].lead_word();
        size_t pos = find_subword(w, lw);
        if (pos == Word::npos) continue;
        Word left = w.substr(0, pos);
        Word right = w.substr(pos + lw.size());
        Coefficient c = it->second;
        NCPoly tail;
        for (const auto& [tw, tc] : rules_[r].terms())
          if (tw != lw) tail.add_term(tw, tc);
        NCPoly g = f;
        g.add_term(w, -c);
        g = g + tail.conjugated(left, right).scaled(-c);
        return std::make_pair(std::move(g), ReductionStep{r, std::move(left), std::move(right), c});
      }
    }
    return std::nullopt;
  }

  std::pair<NCPoly, bool> normal_form_skipping(const NCPoly& f, size_t skip) const {
    NCPoly g = f;
    bool any = false;
    while (auto step = reduce_once_skipping(g, skip)) {
      g = std::move(step->first);
      any = true;
    }
    return {g, any};
  }

  Alphabet alphabet_;
  ConstraintSetPtr ctx_;
  std::vector<NCPoly> rules_;
};

}  // namespace gsb

#endif  // GSBASIS_REWRITE_HPP
