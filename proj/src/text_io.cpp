/*
 *  Copyright 2026 The qopt authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "qopt/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace qopt {

ParseError::ParseError(SourceSpan span, const std::string& message)
    : std::runtime_error(std::to_string(span.line) + ":" +
                         std::to_string(span.column) + ": " + message),
      span_(span) {}

namespace {

enum class Tok {
  Ident,     // atom name
  KwBot,
  KwTop,
  KwNot,
  KwGen,
  KwPref,
  Neg,       // -
  AndOp,     // &
  OrOp,      // |
  Arrow,     // ->
  DArrow,    // <->
  LParen,
  RParen,
  LBracket,
  RBracket,
  Colon,     // :
  ColonDash, // :-
  Gt,        // >
  Dot,       // .
  Number,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      const SourceSpan at = span();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back(word(at));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number(at));
        continue;
      }
      switch (c) {
        case '-':
          if (peek(1) == '>') {
            advance(2);
            out.push_back({Tok::Arrow, "->", at});
          } else {
            advance(1);
            out.push_back({Tok::Neg, "-", at});
          }
          break;
        case '<':
          if (peek(1) == '-' && peek(2) == '>') {
            advance(3);
            out.push_back({Tok::DArrow, "<->", at});
          } else {
            throw ParseError(at, "unknown token '<'");
          }
          break;
        case ':':
          if (peek(1) == '-') {
            advance(2);
            out.push_back({Tok::ColonDash, ":-", at});
          } else {
            advance(1);
            out.push_back({Tok::Colon, ":", at});
          }
          break;
        case '&':
          advance(1);
          out.push_back({Tok::AndOp, "&", at});
          break;
        case '|':
          advance(1);
          out.push_back({Tok::OrOp, "|", at});
          break;
        case '(':
          advance(1);
          out.push_back({Tok::LParen, "(", at});
          break;
        case ')':
          advance(1);
          out.push_back({Tok::RParen, ")", at});
          break;
        case '[':
          advance(1);
          out.push_back({Tok::LBracket, "[", at});
          break;
        case ']':
          advance(1);
          out.push_back({Tok::RBracket, "]", at});
          break;
        case '>':
          advance(1);
          out.push_back({Tok::Gt, ">", at});
          break;
        case '.':
          advance(1);
          out.push_back({Tok::Dot, ".", at});
          break;
        default:
          throw ParseError(at, std::string("unknown token '") + c + "'");
      }
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  SourceSpan span() const { return SourceSpan{line_, column_}; }

  Token word(SourceSpan at) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      advance(1);
    }
    std::string w(text_.substr(start, pos_ - start));
    if (w == "bot") return {Tok::KwBot, w, at};
    if (w == "top") return {Tok::KwTop, w, at};
    if (w == "not") return {Tok::KwNot, w, at};
    if (w == "gen") return {Tok::KwGen, w, at};
    if (w == "pref") return {Tok::KwPref, w, at};
    if (!Atom::valid_name(w)) {
      throw ParseError(at, "invalid atom name '" + w + "'");
    }
    return {Tok::Ident, w, at};
  }

  Token number(SourceSpan at) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
    return {Tok::Number, std::string(text_.substr(start, pos_ - start)), at};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula formula_only() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Problem problem() {
    Problem out;
    while (!at(Tok::End)) {
      if (at(Tok::KwGen)) {
        advance();
        expect(Tok::Colon, "':' after 'gen'");
        out.generator.insert(formula());
        expect(Tok::Dot, "'.' ending the statement");
      } else if (at(Tok::KwPref)) {
        advance();
        int rank = 1;
        if (at(Tok::LBracket)) {
          advance();
          rank = rank_number();
          expect(Tok::RBracket, "']' closing the rank");
        }
        expect(Tok::Colon, "':' after 'pref'");
        std::vector<Formula> heads;
        heads.push_back(formula());
        while (at(Tok::Gt)) {
          advance();
          heads.push_back(formula());
        }
        Formula body = Formula::top();
        if (at(Tok::ColonDash)) {
          advance();
          body = formula();
        }
        expect(Tok::Dot, "'.' ending the statement");
        out.selector.insert(
            PreferenceRule(std::move(heads), std::move(body), rank));
      } else {
        throw ParseError(here().span,
                         "expected 'gen:' or 'pref:' statement, got '" +
                             here().text + "'");
      }
    }
    return out;
  }

 private:
  const Token& here() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return here().kind == kind; }
  void advance() { ++pos_; }

  void expect(Tok kind, const char* what) {
    if (!at(kind)) {
      throw ParseError(here().span, std::string("expected ") + what +
                                        ", got '" +
                                        (at(Tok::End) ? "end of input"
                                                      : here().text) +
                                        "'");
    }
    if (kind != Tok::End) advance();
  }

  int rank_number() {
    if (!at(Tok::Number)) {
      throw ParseError(here().span, "expected a rank number");
    }
    const Token t = here();
    advance();
    long value = 0;
    for (char c : t.text) {
      value = value * 10 + (c - '0');
      if (value > 1'000'000) throw ParseError(t.span, "rank too large");
    }
    if (value < 1) throw ParseError(t.span, "ranks start at 1");
    return static_cast<int>(value);
  }

  // precedence, loosest binding first: <->, ->, |, &, negation
  Formula formula() { return iff(); }

  Formula iff() {
    Formula l = impl();
    if (at(Tok::DArrow)) {
      advance();
      return Formula::iff(std::move(l), iff());  // right-associative
    }
    return l;
  }

  Formula impl() {
    Formula l = disj();
    if (at(Tok::Arrow)) {
      advance();
      return Formula::implies(std::move(l), impl());  // right-associative
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (at(Tok::OrOp)) {
      advance();
      l = Formula::disj(std::move(l), conj());
    }
    return l;
  }

  Formula conj() {
    Formula l = neg();
    while (at(Tok::AndOp)) {
      advance();
      l = Formula::conj(std::move(l), neg());
    }
    return l;
  }

  Formula neg() {
    if (at(Tok::Neg) || at(Tok::KwNot)) {
      advance();
      return Formula::neg(neg());
    }
    return primary();
  }

  Formula primary() {
    if (at(Tok::KwBot)) {
      advance();
      return Formula::bottom();
    }
    if (at(Tok::KwTop)) {
      advance();
      return Formula::top();
    }
    if (at(Tok::Ident)) {
      Formula f = Formula::atom(here().text);
      advance();
      return f;
    }
    if (at(Tok::LParen)) {
      advance();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError(here().span,
                     "expected a formula, got '" +
                         (at(Tok::End) ? "end of input" : here().text) + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strengths for minimal-parenthesis rendering.
enum Level : int {
  kIff = 0,
  kImplies = 1,
  kOr = 2,
  kAnd = 3,
  kNeg = 4,
  kPrimary = 5,
};

int display_level(const Formula& f) {
  if (f.is_top()) return kPrimary;
  if (f.is_negation()) return kNeg;
  if (f.is_iff()) return kIff;
  switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom:
      return kPrimary;
    case Formula::Kind::And:
      return kAnd;
    case Formula::Kind::Or:
      return kOr;
    case Formula::Kind::Implies:
      return kImplies;
  }
  return kPrimary;
}

void render(const Formula& f, int min_level, std::string& out) {
  const int level = display_level(f);
  const bool parens = level < min_level;
  if (parens) out += '(';

  if (f.is_top()) {
    out += "top";
  } else if (f.is_negation()) {
    out += '-';
    render(f.lhs(), kNeg, out);
  } else if (f.is_iff()) {
    render(f.lhs().lhs(), kIff + 1, out);
    out += " <-> ";
    render(f.lhs().rhs(), kIff, out);  // right-associative
  } else {
    switch (f.kind()) {
      case Formula::Kind::Bottom:
        out += "bot";
        break;
      case Formula::Kind::Atom:
        out += f.atom_name().name();
        break;
      case Formula::Kind::And:
        render(f.lhs(), kAnd, out);
        out += " & ";
        render(f.rhs(), kAnd + 1, out);  // left-associative
        break;
      case Formula::Kind::Or:
        render(f.lhs(), kOr, out);
        out += " | ";
        render(f.rhs(), kOr + 1, out);
        break;
      case Formula::Kind::Implies:
        render(f.lhs(), kImplies + 1, out);
        out += " -> ";
        render(f.rhs(), kImplies, out);
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(Lexer(text).run()).formula_only();
}

Problem parse_problem(std::string_view text) {
  return Parser(Lexer(text).run()).problem();
}

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, kIff, out);
  return out;
}

std::string render_rule(const PreferenceRule& r) {
  std::string out;
  for (std::size_t k = 0; k < r.heads().size(); ++k) {
    if (k > 0) out += " > ";
    out += render_formula(r.heads()[k]);
  }
  out += " :- ";
  out += render_formula(r.body());
  return out;
}

std::string render_problem(const Problem& p) {
  std::vector<std::string> gen_lines;
  for (const auto& f : p.generator.formulas()) {
    gen_lines.push_back("gen: " + render_formula(f) + ".");
  }
  std::sort(gen_lines.begin(), gen_lines.end());

  std::vector<std::pair<int, std::string>> rule_lines;
  for (const auto& r : p.selector.rules()) {
    rule_lines.emplace_back(r.rank(), render_rule(r));
  }
  std::sort(rule_lines.begin(), rule_lines.end());

  std::string out;
  for (const auto& line : gen_lines) {
    out += line;
    out += '\n';
  }
  for (const auto& [rank, text] : rule_lines) {
    out += "pref[" + std::to_string(rank) + "]: " + text + ".\n";
  }
  return out;
}

std::string render_interpretation(const Interpretation& i) {
  if (i.empty()) return "{}";
  std::string out;
  for (const auto& a : i.atoms()) {
    if (!out.empty()) out += ',';
    out += a.name();
  }
  return out;
}

Interpretation parse_interpretation(std::string_view text) {
  std::set<Atom> atoms;
  if (text == "{}" || text.empty()) return Interpretation{};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string name(text.substr(start, end - start));
    // trim surrounding blanks
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
      name.erase(name.begin());
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    if (name.empty()) {
      throw ParseError(SourceSpan{1, static_cast<int>(start) + 1},
                       "empty atom name in interpretation");
    }
    if (!Atom::valid_name(name)) {
      throw ParseError(SourceSpan{1, static_cast<int>(start) + 1},
                       "invalid atom name '" + name + "'");
    }
    atoms.insert(Atom(name));
    if (end == text.size()) break;
    start = end + 1;
  }
  return Interpretation(std::move(atoms));
}

RankInterval parse_interval(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw ParseError(SourceSpan{1, 1},
                     "interval must look like '1..3' or '2..inf'");
  }
  const auto parse_int = [&](std::string_view part, int offset) {
    if (part.empty() ||
        !std::all_of(part.begin(), part.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw ParseError(SourceSpan{1, offset + 1},
                       "expected a rank number in interval");
    }
    long v = 0;
    for (char c : part) {
      v = v * 10 + (c - '0');
      if (v > 1'000'000) {
        throw ParseError(SourceSpan{1, offset + 1}, "rank too large");
      }
    }
    return static_cast<int>(v);
  };
  const std::string_view lo = text.substr(0, dots);
  const std::string_view hi = text.substr(dots + 2);
  const int low = parse_int(lo, 0);
  try {
    if (hi == "inf") return RankInterval(low, RankBound::infinite());
    return RankInterval(low, RankBound::at(parse_int(hi, static_cast<int>(dots) + 2)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(SourceSpan{1, 1}, e.what());
  }
}

std::string render_interval(const RankInterval& interval) {
  std::string out = std::to_string(interval.low()) + "..";
  out += interval.high().is_infinite() ? "inf"
                                       : std::to_string(interval.high().value());
  return out;
}

}  // namespace qopt
