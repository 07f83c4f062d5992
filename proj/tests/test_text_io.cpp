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

#include <doctest.h>

#include "support.hpp"

using namespace qtest;

TEST_SUITE("text_io") {

TEST_CASE("formula grammar") {
  CHECK(parse_formula("a <-> -b") ==
        Formula::iff(Formula::atom("a"), Formula::neg(Formula::atom("b"))));
  CHECK(parse_formula("a & b | c") ==
        Formula::disj(Formula::conj(Formula::atom("a"), Formula::atom("b")),
                      Formula::atom("c")));
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implies(Formula::atom("a"),
                         Formula::implies(Formula::atom("b"),
                                          Formula::atom("c"))));
  CHECK(parse_formula("not a") == Formula::neg(Formula::atom("a")));
  CHECK(parse_formula("--a") == Formula::neg(Formula::neg(Formula::atom("a"))));
  CHECK(parse_formula("bot") == Formula::bottom());
  CHECK(parse_formula("top") == Formula::top());
  CHECK(parse_formula("(a | b) & c") ==
        Formula::conj(Formula::disj(Formula::atom("a"), Formula::atom("b")),
                      Formula::atom("c")));
  CHECK(parse_formula("a & b & c") ==
        Formula::conj(Formula::conj(Formula::atom("a"), Formula::atom("b")),
                      Formula::atom("c")));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_formula("a &\n& b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 1);
  }
  CHECK_THROWS_AS(parse_formula("(a | b"), ParseError);    // unbalanced
  CHECK_THROWS_AS(parse_formula("a ? b"), ParseError);     // unknown token
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);       // trailing junk
  CHECK_THROWS_AS(parse_formula("Apple"), ParseError);     // bad atom
  CHECK_THROWS_AS(parse_problem("pref[0]: a > b."), ParseError);
  CHECK_THROWS_AS(parse_problem("pref: ."), ParseError);   // empty head list
  CHECK_THROWS_AS(parse_problem("gen: a"), ParseError);    // missing dot
}

TEST_CASE("problem parsing") {
  const Problem p1 = parse_problem("gen: a <-> -b.\npref: a > b.");
  CHECK(p1.generator.size() == 1);
  CHECK(p1.selector.size() == 1);
  const PreferenceRule& r = *p1.selector.rules().begin();
  CHECK(r.rank() == 1);
  CHECK(r.body() == Formula::top());
  CHECK(r.heads().size() == 2);

  const Problem ranked = parse_problem("pref[2]: a > b :- top.");
  CHECK(ranked.selector.rules().begin()->rank() == 2);
  CHECK(*ranked.selector.rules().begin() ==
        PreferenceRule({Formula::atom("a"), Formula::atom("b")},
                       Formula::top(), 2));

  const Problem top_gen = parse_problem("gen: bot -> bot.");
  CHECK(top_gen.generator.formulas() == std::set<Formula>{Formula::top()});
  CHECK(top_gen.selector.empty());

  const Problem commented = parse_problem(
      "% comment line\ngen: a. % trailing comment\n\npref: a.\n");
  CHECK(commented.generator.size() == 1);
  CHECK(commented.selector.size() == 1);

  // duplicate rules collapse
  const Problem dup = parse_problem("pref: a > b.\npref: a > b.");
  CHECK(dup.selector.size() == 1);
}

TEST_CASE("canonical rendering") {
  const Problem p1 = load_fixture("ex1-p1.qopt");
  CHECK(render_problem(p1) == "gen: a <-> -b.\npref[1]: a > b :- top.\n");
  CHECK(render_problem(Problem{}) == "");

  CHECK(render_formula(parse_formula("a & b | c")) == "a & b | c");
  CHECK(render_formula(parse_formula("a & (b | c)")) == "a & (b | c)");
  CHECK(render_formula(parse_formula("a -> b -> c")) == "a -> b -> c");
  CHECK(render_formula(parse_formula("(a -> b) -> c")) == "(a -> b) -> c");
  CHECK(render_formula(parse_formula("-(a & b)")) == "-(a & b)");
  CHECK(render_formula(parse_formula("--a")) == "--a");
  CHECK(render_formula(parse_formula("(a -> b) & (b -> a)")) == "a <-> b");
}

TEST_CASE("render/parse round trip on random problems") {
  Rng rng(7);
  const auto pool = atom_pool(4);
  for (int round = 0; round < 300; ++round) {
    const Problem p = random_problem(rng, pool, 3, 3, 3, 3);
    const std::string text = render_problem(p);
    const Problem back = parse_problem(text);
    CHECK(back == p);
    // canonical rendering is a fixpoint
    CHECK(render_problem(back) == text);
  }
  for (int round = 0; round < 300; ++round) {
    const Formula f = random_formula(rng, pool, 4);
    CHECK(parse_formula(render_formula(f)) == f);
  }
}

TEST_CASE("interval and interpretation text forms") {
  CHECK(parse_interval("1..inf") == RankInterval::all());
  CHECK(parse_interval("2..3") == RankInterval::between(2, 3));
  CHECK(render_interval(RankInterval::between(2, 3)) == "2..3");
  CHECK(render_interval(RankInterval::all()) == "1..inf");
  CHECK_THROWS_AS(parse_interval("3..2"), ParseError);
  CHECK_THROWS_AS(parse_interval("0..2"), ParseError);
  CHECK_THROWS_AS(parse_interval("nope"), ParseError);

  CHECK(parse_interpretation("a,b") == interp({"a", "b"}));
  CHECK(parse_interpretation("{}") == interp({}));
  CHECK(parse_interpretation("") == interp({}));
  CHECK(render_interpretation(interp({"b", "a"})) == "a,b");
  CHECK(render_interpretation(interp({})) == "{}");
}

}  // TEST_SUITE
