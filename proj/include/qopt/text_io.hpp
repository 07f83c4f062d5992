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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qopt/problem.hpp"

namespace qopt {

/// 1-based position of a parse error in its input.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message);
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Formula grammar: atoms [a-z][A-Za-z0-9_]*, keywords `bot` and `top`,
/// negation `-` or `not`, then `&`, `|`, `->`, `<->` with precedence
/// (tightest first) ¬, ∧, ∨, →, ↔; `->` and `<->` associate right, `&` and
/// `|` left; parentheses override. The whole input must be one formula.
Formula parse_formula(std::string_view text);

/// Problem format: statements terminated by `.`, comments from `%` to end of
/// line. `gen: <formula>.` adds a generator formula;
/// `pref[<rank>]: <f1> > ... > <fk> (:- <body>)?.` adds a preference rule,
/// with rank defaulting to 1 and body to top. Duplicate rules collapse.
Problem parse_problem(std::string_view text);

/// Minimal-parenthesis rendering; derived forms display as `top`, `-f` and
/// `f <-> g`. parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

/// The rule without the `pref[rank]:` prefix: "f1 > f2 :- body".
std::string render_rule(const PreferenceRule& r);

/// Canonical text: generator statements sorted by rendered form, then rules
/// sorted by (rank, rendered form); ranks and bodies always printed, LF line
/// endings, single space after `:`.
std::string render_problem(const Problem& p);

/// "a,b,c" with atoms sorted; "{}" for the empty interpretation.
std::string render_interpretation(const Interpretation& i);

/// Accepts "" or "{}" for the empty interpretation, else comma-separated
/// atom names.
Interpretation parse_interpretation(std::string_view text);

/// "low..high" with "inf" for the unbounded end, e.g. "1..inf", "2..3".
RankInterval parse_interval(std::string_view text);
std::string render_interval(const RankInterval& interval);

}  // namespace qopt
