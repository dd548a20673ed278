#ifndef GSBASIS_PRESENTATION_HPP
#define GSBASIS_PRESENTATION_HPP

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsbasis/rewrite.hpp"

namespace gsb {

/// Parsed presentation file: an ordered alphabet, a finalized constraint
/// set, the relation polynomials, and any discrete parameter choices and
/// meta entries.
struct Presentation {
  Alphabet alphabet;
  ConstraintSetPtr constraints;
  std::vector<NCPoly> relations;
  std::vector<std::pair<std::string, std::vector<Rational>>> choices;
  std::map<std::string, std::string> meta;
};

namespace detail {

struct Token {
  enum Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  char sym = 0;
};

/// Token stream over one logical line.  Text after '#' is a comment.
class LineParser {
 public:
  LineParser(const std::string& line, int lineno) : lineno_(lineno) {
    size_t i = 0;
    while (i < line.size() && line[i] != '#') {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
          ++j;
        tokens_.push_back({Token::Ident, line.substr(i, j - i), 0});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        tokens_.push_back({Token::Number, line.substr(i, j - i), 0});
        i = j;
        continue;
      }
      if (std::string("+-*/^()=<,").find(c) != std::string::npos) {
        tokens_.push_back({Token::Symbol, std::string(1, c), c});
        ++i;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", lineno);
    }
    tokens_.push_back({Token::End, "", 0});
  }

  int lineno() const { return lineno_; }
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Token::End; }

  bool accept_sym(char c) {
    if (peek().kind == Token::Symbol && peek().sym == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_sym(char c) {
    if (!accept_sym(c)) fail(std::string("expected '") + c + "'");
  }

  std::string expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident) fail("expected " + what);
    return next().text;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, lineno_); }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int lineno_;
};

inline Integer parse_integer(LineParser& lp) {
  if (lp.peek().kind != Token::Number) lp.fail("expected a number");
  return Integer(lp.next().text);
}

inline unsigned parse_exponent(LineParser& lp) {
  if (lp.peek().kind != Token::Number) lp.fail("expected an exponent");
  return static_cast<unsigned>(std::stoul(lp.next().text));
}

inline Rational parse_rational(LineParser& lp) {
  bool neg = false;
  while (lp.peek().kind == Token::Symbol && (lp.peek().sym == '+' || lp.peek().sym == '-'))
    neg ^= (lp.next().sym == '-');
  Rational r(parse_integer(lp));
  if (lp.accept_sym('/')) {
    Integer d = parse_integer(lp);
    if (d == 0) lp.fail("division by zero");
    r /= Rational(d);
  }
  return neg ? -r : r;
}

inline ParamPoly pow(const ParamPoly& base, unsigned exp) {
  ParamPoly r(1);
  for (unsigned k = 0; k < exp; ++k) r = r * base;
  return r;
}

ParamPoly parse_param_poly(LineParser& lp, const Alphabet* forbidden);

/// Parameter polynomial factor: number, parameter, or parenthesized group,
/// each with an optional integer exponent.
inline ParamPoly parse_param_factor(LineParser& lp, const Alphabet* forbidden) {
  ParamPoly base;
  if (lp.peek().kind == Token::Number) {
    base = ParamPoly(Rational(parse_integer(lp)));
  } else if (lp.peek().kind == Token::Ident) {
    std::string name = lp.next().text;
    if (forbidden && forbidden->has(name))
      lp.fail("generator '" + name + "' is not allowed inside a coefficient");
    base = ParamPoly::parameter(name);
  } else if (lp.accept_sym('(')) {
    base = parse_param_poly(lp, forbidden);
    lp.expect_sym(')');
  } else {
    lp.fail("expected a coefficient factor");
  }
  if (lp.accept_sym('^')) return pow(base, parse_exponent(lp));
  return base;
}

inline ParamPoly parse_param_poly(LineParser& lp, const Alphabet* forbidden) {
  ParamPoly sum;
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (lp.accept_sym('-'))
      sign = -1;
    else if (!lp.accept_sym('+') && !first)
      break;
    first = false;
    ParamPoly term(sign);
    for (;;) {
      term = term * parse_param_factor(lp, forbidden);
      if (lp.accept_sym('*')) continue;
      if (lp.accept_sym('/')) {
        if (lp.peek().kind != Token::Number) lp.fail("coefficient division must be by a number");
        Rational d(parse_integer(lp));
        if (d == 0) lp.fail("division by zero");
        term = term * (Rational(1) / d);
        continue;
      }
      break;
    }
    sum = sum + term;
    if (!(lp.peek().kind == Token::Symbol && (lp.peek().sym == '+' || lp.peek().sym == '-')))
      break;
  }
  return sum;
}

/// One term of a relation: signed product of coefficient factors and
/// generator powers, with '/' introducing denominator factors.  Generators
/// may not appear in a denominator.
inline void parse_relation_term(LineParser& lp, const Alphabet& alphabet,
                                const ConstraintSetPtr& ctx, const Rational& sign, NCPoly& out) {
  ParamPoly num(sign);
  ParamPoly den(1);
  Word word;
  bool dividing = false;
  for (;;) {
    if (lp.peek().kind == Token::Ident && alphabet.has(lp.peek().text)) {
      if (dividing) lp.fail("cannot divide by a generator");
      size_t g = alphabet.index(lp.next().text);
      unsigned exp = lp.accept_sym('^') ? parse_exponent(lp) : 1;
      word.append(exp, static_cast<char>(g));
    } else {
      ParamPoly f = parse_param_factor(lp, nullptr);
      if (dividing) {
        if (f.is_zero()) lp.fail("division by zero");
        den = den * f;
      } else {
        num = num * f;
      }
    }
    dividing = false;
    if (lp.accept_sym('*')) continue;
    if (lp.accept_sym('/')) {
      dividing = true;
      continue;
    }
    break;
  }
  out.add_term(word, Coefficient(ctx, num, den));
}

inline NCPoly parse_relation_expr(LineParser& lp, const Alphabet& alphabet,
                                  const ConstraintSetPtr& ctx) {
  NCPoly out;
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (lp.accept_sym('-'))
      sign = -1;
    else if (!lp.accept_sym('+') && !first)
      break;
    first = false;
    parse_relation_term(lp, alphabet, ctx, sign, out);
    if (lp.at_end()) break;
  }
  if (!lp.at_end()) lp.fail("unexpected trailing input in relation");
  return out;
}

}  // namespace detail

/// Parses one presentation block.  Lines: `generators a < b < c`,
/// `constraint a^3 = -1`, `nonzero a, s^3 + 1`, `relation x*y - a*y*x`,
/// `choices p = 1, -1`, `meta key = value`, `#` comments.
inline Presentation parse_presentation(const std::vector<std::pair<int, std::string>>& lines) {
  using detail::LineParser;
  Presentation pres;
  bool have_generators = false;
  auto constraints = std::make_shared<ConstraintSet>();
  std::vector<std::pair<int, std::string>> relation_lines;

  for (const auto& [lineno, text] : lines) {
    LineParser lp(text, lineno);
    if (lp.at_end()) continue;
    std::string keyword = lp.expect_ident("a directive");
    if (keyword == "generators") {
      if (have_generators) lp.fail("duplicate generators line");
      std::vector<std::string> names;
      names.push_back(lp.expect_ident("a generator name"));
      while (lp.accept_sym('<')) names.push_back(lp.expect_ident("a generator name"));
      if (!lp.at_end()) lp.fail("unexpected trailing input after generators");
      for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
          if (names[i] == names[j]) lp.fail("duplicate generator '" + names[i] + "'");
      pres.alphabet = Alphabet(names);
      have_generators = true;
    } else if (keyword == "constraint") {
      ParamPoly lhs = detail::parse_param_poly(lp, nullptr);
      lp.expect_sym('=');
      ParamPoly rhs = detail::parse_param_poly(lp, nullptr);
      if (!lp.at_end()) lp.fail("unexpected trailing input after constraint");
      if (lhs.terms().size() != 1 || lhs.leading_coeff() != 1)
        lp.fail("constraint left side must be a plain monomial");
      try {
        constraints->add_rule(lhs.leading_monomial(), rhs);
      } catch (const ParseError& e) {
        lp.fail(e.what());
      }
    } else if (keyword == "nonzero") {
      for (;;) {
        ParamPoly atom = detail::parse_param_poly(lp, nullptr);
        try {
          constraints->add_nonzero(atom);
        } catch (const ParseError& e) {
          lp.fail(e.what());
        }
        if (!lp.accept_sym(',')) break;
      }
      if (!lp.at_end()) lp.fail("unexpected trailing input after nonzero");
    } else if (keyword == "relation") {
      relation_lines.emplace_back(lineno, text);
    } else if (keyword == "choices") {
      std::string name = lp.expect_ident("a parameter name");
      lp.expect_sym('=');
      std::vector<Rational> values;
      values.push_back(detail::parse_rational(lp));
      while (lp.accept_sym(',')) values.push_back(detail::parse_rational(lp));
      if (!lp.at_end()) lp.fail("unexpected trailing input after choices");
      pres.choices.emplace_back(name, values);
    } else if (keyword == "meta") {
      std::string key = lp.expect_ident("a meta key");
      lp.expect_sym('=');
      std::string value = lp.next().text;
      if (!lp.at_end()) lp.fail("meta values are single tokens");
      pres.meta[key] = value;
    } else {
      lp.fail("unknown directive '" + keyword + "'");
    }
  }

  if (!have_generators) throw ParseError("missing generators line");
  constraints->finalize();
  pres.constraints = constraints;

  for (const auto& [lineno, text] : relation_lines) {
    LineParser lp(text, lineno);
    lp.expect_ident("a directive");
    try {
      pres.relations.push_back(detail::parse_relation_expr(lp, pres.alphabet, pres.constraints));
    } catch (const NotProvablyNonzero& e) {
      lp.fail(e.what());
    }
  }
  return pres;
}

inline Presentation parse_presentation(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.emplace_back(++lineno, text.substr(start, end - start));
    start = end + 1;
  }
  return parse_presentation(lines);
}

/// Splits a catalog file on `family <label>` header lines; each block
/// parses as an ordinary presentation.
inline std::vector<std::pair<std::string, Presentation>> parse_catalog(const std::string& text) {
  std::vector<std::pair<std::string, std::vector<std::pair<int, std::string>>>> blocks;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    detail::LineParser lp(line, lineno);
    if (lp.peek().kind == detail::Token::Ident && lp.peek().text == "family") {
      lp.next();
      std::string label = lp.expect_ident("a family label");
      if (!lp.at_end()) lp.fail("unexpected trailing input after family label");
      blocks.emplace_back(label, std::vector<std::pair<int, std::string>>{});
      continue;
    }
    if (blocks.empty()) {
      if (!lp.at_end()) lp.fail("content before the first family header");
      continue;
    }
    blocks.back().second.emplace_back(lineno, line);
  }
  std::vector<std::pair<std::string, Presentation>> out;
  for (auto& [label, lines] : blocks) out.emplace_back(label, parse_presentation(lines));
  return out;
}

/// Parses a single polynomial in the relation syntax.
inline NCPoly parse_polynomial(const std::string& text, const Alphabet& alphabet,
                               const ConstraintSetPtr& ctx) {
  detail::LineParser lp(text, 0);
  if (lp.at_end()) throw ParseError("empty polynomial");
  return detail::parse_relation_expr(lp, alphabet, ctx);
}

/// The reduction system of a presentation: every relation becomes a monic
/// rule.  NotProvablyNonzero propagates if a leading coefficient cannot be
/// certified invertible.
inline ReductionSystem build_system(const Presentation& pres) {
  ReductionSystem R(pres.alphabet, pres.constraints);
  for (const auto& rel : pres.relations) R.add_rule(rel);
  return R;
}

/// Rebuilds a coefficient with one parameter substituted by a rational.
inline Coefficient substitute(const Coefficient& c, const std::string& name,
                              const Rational& value) {
  return Coefficient(c.context(), c.num().substitute(name, value),
                     c.den().substitute(name, value));
}

/// Expands the discrete parameter choices into concrete presentations, one
/// per combination, labeled like "p=1".  A presentation without choices
/// expands to itself with an empty label.
inline std::vector<std::pair<std::string, Presentation>> expand_choices(const Presentation& pres) {
  std::vector<std::pair<std::string, Presentation>> out;
  out.emplace_back("", pres);
  out.back().second.choices.clear();
  for (const auto& [name, values] : pres.choices) {
    std::vector<std::pair<std::string, Presentation>> next;
    for (const auto& [tag, base] : out) {
      for (const auto& v : values) {
        Presentation sub = base;
        for (auto& rel : sub.relations) {
          NCPoly replaced;
          for (const auto& [w, c] : rel.terms()) replaced.add_term(w, substitute(c, name, v));
          rel = replaced;
        }
        std::string vtag = name + "=" + to_string(v);
        next.emplace_back(tag.empty() ? vtag : tag + "," + vtag, sub);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Serializes a presentation in the same line format the parser accepts.
inline std::string serialize(const Presentation& pres) {
  std::string s = "generators ";
  for (size_t i = 0; i < pres.alphabet.size(); ++i) {
    if (i) s += " < ";
    s += pres.alphabet.name(i);
  }
  s += "\n";
  if (pres.constraints) {
    for (const auto& r : pres.constraints->rules())
      s += "constraint " + r.lhs.str() + " = " + r.rhs.str() + "\n";
    for (const auto& a : pres.constraints->nonzero()) s += "nonzero " + a.str() + "\n";
  }
  for (const auto& [name, values] : pres.choices) {
    s += "choices " + name + " = ";
    for (size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += to_string(values[i]);
    }
    s += "\n";
  }
  for (const auto& [key, value] : pres.meta) s += "meta " + key + " = " + value + "\n";
  for (const auto& rel : pres.relations) s += "relation " + rel.str(pres.alphabet) + "\n";
  return s;
}

}  // namespace gsb

#endif  // GSBASIS_PRESENTATION_HPP
