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

namespace {

constexpr SemanticsMode kCl = SemanticsMode::Classical;
constexpr SemanticsMode kAs = SemanticsMode::AnswerSet;

const std::vector<RankInterval> kIntervals{
    RankInterval::single(1), RankInterval::single(2),
    RankInterval::between(2, 3), RankInterval::all(),
    RankInterval(2, RankBound::infinite())};

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("pin_single builds the literal constraint theory") {
  const Alphabet ab = Alphabet::over({"a", "b"});
  CHECK(pin_single(interp({"a"}), ab) ==
        Theory::of({parse_formula("b -> bot"), parse_formula("-a -> bot")}));
  CHECK(pin_single(interp({}), Alphabet::over({"a"})) ==
        Theory::of({parse_formula("a -> bot")}));
  CHECK(pin_single(interp({"a", "b"}), ab) ==
        Theory::of({parse_formula("-a -> bot"), parse_formula("-b -> bot")}));
}

TEST_CASE("pin_single pins models under the matching semantics") {
  Rng rng(71);
  const auto pool = atom_pool(3);
  const Alphabet a = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  int classical_cases = 0, answer_cases = 0;
  for (int round = 0; round < 400 && (classical_cases < 100 ||
                                      answer_cases < 100);
       ++round) {
    const Theory t = random_theory(rng, pool, 3, 3);
    const auto mods = classical_models(t, a);
    if (!mods.empty() && classical_cases < 100) {
      ++classical_cases;
      const auto& i = mods[rng.next(mods.size())];
      CHECK(classical_models(t.unioned(pin_single(i, a)), a) ==
            std::vector<Interpretation>{i});
    }
    const auto as = answer_sets(t, a);
    if (!as.empty() && answer_cases < 100) {
      ++answer_cases;
      const auto& i = as[rng.next(as.size())];
      CHECK(answer_sets(t.unioned(pin_single(i, a)), a) ==
            std::vector<Interpretation>{i});
    }
  }
  CHECK(classical_cases >= 100);
  CHECK(answer_cases >= 100);
}

TEST_CASE("pin_single is only constraints: it cannot make an answer set") {
  // {a} is a classical but not an equilibrium model of ¬a → a, and the pin
  // does not change that
  const Theory t = Theory::of({parse_formula("-a -> a")});
  const Alphabet a = Alphabet::over({"a"});
  CHECK(classical_models(t.unioned(pin_single(interp({"a"}), a)), a) ==
        members({{"a"}}));
  CHECK(answer_sets(t.unioned(pin_single(interp({"a"}), a)), a).empty());
}

TEST_CASE("pin_pair pins any two classical models under both semantics") {
  const Alphabet ab = Alphabet::over({"a", "b"});
  CHECK(classical_models(pin_pair(interp({"a"}), interp({"b"}), ab), ab) ==
        members({{"a"}, {"b"}}));
  // argument order does not matter semantically
  CHECK(classical_models(pin_pair(interp({"b"}), interp({"a"}), ab), ab) ==
        members({{"a"}, {"b"}}));
  CHECK_THROWS_AS(pin_pair(interp({"a"}), interp({"a"}), ab),
                  std::invalid_argument);

  Rng rng(73);
  const auto pool = atom_pool(3);
  const Alphabet a = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  int cases = 0;
  for (int round = 0; round < 400 && cases < 100; ++round) {
    const Theory t = random_theory(rng, pool, 3, 3);
    const auto mods = classical_models(t, a);
    if (mods.size() < 2) continue;
    ++cases;
    const auto i = mods[rng.next(mods.size())];
    auto j = i;
    while (j == i) j = mods[rng.next(mods.size())];
    const Theory pinned = t.unioned(pin_pair(i, j, a));
    std::vector<Interpretation> expect{i, j};
    std::sort(expect.begin(), expect.end());
    CHECK(classical_models(pinned, a) == expect);
    CHECK(answer_sets(pinned, a) == expect);
  }
  CHECK(cases >= 100);
}

TEST_CASE("promote grades its target best") {
  const Alphabet ab = Alphabet::over({"a", "b"});
  const Selector r2 = promote(interp({"a"}), 2, ab);
  CHECK(r2.size() == 2);
  for (const auto& r : r2.rules()) {
    CHECK(r.rank() == 2);
    CHECK(r.heads().size() == 2);
    CHECK(satisfaction_degree(interp({"a"}), r) == 1);
  }
  // every other interpretation flips some literal
  for (const auto& k : all_interpretations(ab)) {
    if (k == interp({"a"})) continue;
    bool some_two = false;
    for (const auto& r : r2.rules()) {
      if (satisfaction_degree(k, r) == 2) some_two = true;
    }
    CHECK(some_two);
  }
  const Selector lone = promote(interp({}), 3, Alphabet::over({"a"}));
  CHECK(lone.size() == 1);
  CHECK(lone.rules().begin()->heads()[0] == parse_formula("-a"));
}

// Promote lemma: a preferred-below-rank outcome stays preferred after its
// promotion; outcomes it weakly beats up to the rank become strictly beaten.
TEST_CASE("promote lemma") {
  Rng rng(79);
  const auto pool = atom_pool(3);
  const Alphabet a = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  const auto interps = all_interpretations(a);
  for (int round = 0; round < 100; ++round) {
    const Problem p = random_problem(rng, pool, 2, 3, 3, 2);
    for (const SemanticsMode m : {kCl, kAs}) {
      for (int rank = 1; rank <= 3; ++rank) {
        const auto pi_below = optimal(restrict_below(p, rank), m, a);
        const Selector upto = rank_slice(
            p.selector, RankInterval(1, RankBound::at(rank)));
        for (const auto& i : pi_below.members) {
          const Problem promoted =
              union_of(p, Problem{Theory{}, promote(i, rank, a)});
          CHECK(optimal(promoted, m, a).contains(i));
          for (const auto& k : interps) {
            if (k == i || !pref_geq(i, k, upto)) continue;
            CHECK(pref_gt(i, k, promoted.selector));
          }
        }
      }
    }
  }
}

TEST_CASE("protect_pair grades both targets best and everything else worse") {
  Rng rng(83);
  const auto pool = atom_pool(3);
  const Alphabet a = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  const auto interps = all_interpretations(a);
  for (const auto& i : interps) {
    for (const auto& j : interps) {
      const Selector s = protect_pair(i, j, 2, a);
      for (const auto& r : s.rules()) {
        CHECK(r.rank() == 2);
        CHECK(satisfaction_degree(i, r) == 1);
        CHECK(satisfaction_degree(j, r) == 1);
      }
      for (const auto& k : interps) {
        if (k == i || k == j) continue;
        bool some_two = false;
        for (const auto& r : s.rules()) {
          if (satisfaction_degree(k, r) == 2) some_two = true;
        }
        CHECK(some_two);
      }
    }
  }
  // i = j degenerates to the promote-style pinning
  const auto both = protect_pair(interp({"a"}), interp({"a"}), 3, a);
  CHECK(both == promote(interp({"a"}), 3, a));
}

// Protect lemma assertions (2) and (4) on random problems whose
// below-rank optima contain the pinned pair.
TEST_CASE("protect lemma") {
  Rng rng(89);
  const auto pool = atom_pool(3);
  const Alphabet a = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  int cases = 0;
  for (int round = 0; round < 400 && cases < 100; ++round) {
    const Problem p = random_problem(rng, pool, 2, 3, 3, 2);
    const int rank = 1 + static_cast<int>(rng.next(3));
    for (const SemanticsMode m : {kCl, kAs}) {
      const auto pi_below = optimal(restrict_below(p, rank), m, a);
      if (pi_below.members.size() < 2) continue;
      ++cases;
      const auto& i = pi_below.members[rng.next(pi_below.members.size())];
      auto j = i;
      while (j == i) j = pi_below.members[rng.next(pi_below.members.size())];
      const Problem guarded =
          union_of(p, Problem{Theory{}, protect_pair(i, j, rank, a)});
      if (pref_gt(i, j, p.selector)) {
        CHECK_FALSE(optimal(guarded, m, a).contains(j));
      } else {
        CHECK(optimal(guarded, m, a).contains(j));
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("separating contexts for the published example pairs") {
  struct Case {
    const char* f1;
    const char* f2;
    EquivalenceMode mode;
    RankInterval iv;
  };
  const std::vector<Case> cases{
      {"ex1-p1.qopt", "ex1-p2.qopt", EquivalenceMode::Gen,
       RankInterval::all()},
      {"ex2-p3.qopt", "ex2-p4.qopt", EquivalenceMode::Gen,
       RankInterval::all()},
      {"ex3-p5.qopt", "ex1-p1.qopt", EquivalenceMode::Sel,
       RankInterval::all()},
      {"ex4-p6.qopt", "ex4-p7.qopt", EquivalenceMode::Sel,
       RankInterval::all()},
      {"ex4-p6.qopt", "ex4-p7.qopt", EquivalenceMode::Sel,
       RankInterval::single(1)},
      {"ex4-p6.qopt", "ex4-p7.qopt", EquivalenceMode::Combined,
       RankInterval::all()},
      {"ex6-p.qopt", "ex6-pprime.qopt", EquivalenceMode::Sel,
       RankInterval::single(2)},
      {"ex6-p.qopt", "ex6-pprime.qopt", EquivalenceMode::Sel,
       RankInterval::single(3)},
      {"ex6-p.qopt", "ex6-pprime.qopt", EquivalenceMode::Sel,
       RankInterval::between(2, 3)},
      {"ex6-p.qopt", "ex6-pprime.qopt", EquivalenceMode::Combined,
       RankInterval::single(2)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.f1);
    CAPTURE(c.f2);
    const Problem p = load_fixture(c.f1);
    const Problem q = load_fixture(c.f2);
    const Alphabet a = default_alphabet(p, q);
    const Verdict v = decide_with_context(p, q, c.mode, c.iv, kCl, a);
    REQUIRE_FALSE(v.equivalent);
    REQUIRE(v.separating_context.has_value());
    CHECK(verify_verdict(p, q, v, kCl, a));
    // selector ranks of sel/combined contexts stay inside the interval
    if (c.mode != EquivalenceMode::Gen) {
      for (const auto& r : v.separating_context->selector.rules()) {
        CHECK(c.iv.contains(r.rank()));
      }
    }
    if (c.mode == EquivalenceMode::Sel) {
      CHECK(v.separating_context->generator.empty());
    }
  }
}

// Deterministic instances driving each failure condition and construction
// branch: the three diff-condition cases (lead diff below, at, and above the
// interval's low end), argument order swapped, the answer-set variants, and
// the below-interval relation condition of the combined mode.
TEST_CASE("separating contexts across all failure conditions") {
  const std::string xor_gen = "gen: a <-> -b.\n";
  const std::string or_gen = "gen: a | b.\n";
  struct Case {
    const char* name;
    std::string p;
    std::string q;
    EquivalenceMode mode;
    RankInterval iv;
    SemanticsMode sem;
    const char* condition;
  };
  const std::vector<Case> cases{
      {"sel cond3, lead diff below the interval",
       xor_gen + "pref[1]: a > b.\npref[1]: b > a.\n",
       xor_gen + "pref[3]: a > b.\npref[3]: b > a.\n", EquivalenceMode::Sel,
       RankInterval::single(2), kCl, "Thm2(3)"},
      {"sel cond3, lead diff at the interval",
       xor_gen + "pref[2]: a > b.\npref[2]: b > a.\n",
       xor_gen + "pref[3]: a > b.\npref[3]: b > a.\n", EquivalenceMode::Sel,
       RankInterval(2, RankBound::infinite()), kCl, "Thm2(3)"},
      {"sel cond3, lead diff above the interval",
       xor_gen + "pref[3]: a > b.\npref[3]: b > a.\n",
       xor_gen + "pref[4]: a > b.\npref[4]: b > a.\n", EquivalenceMode::Sel,
       RankInterval(2, RankBound::infinite()), kCl, "Thm2(3)"},
      {"sel cond3, finite high end",
       xor_gen + "pref[3]: a > b.\npref[3]: b > a.\n",
       xor_gen + "pref[4]: a > b.\npref[4]: b > a.\n", EquivalenceMode::Sel,
       RankInterval::between(2, 3), kCl, "Thm2(3)"},
      {"sel cond3, arguments swapped",
       xor_gen + "pref[4]: a > b.\npref[4]: b > a.\n",
       xor_gen + "pref[3]: a > b.\npref[3]: b > a.\n", EquivalenceMode::Sel,
       RankInterval(2, RankBound::infinite()), kCl, "Thm2(3)"},
      {"sel cond2 under answer sets", or_gen + "pref: a > b.\n", or_gen,
       EquivalenceMode::Sel, RankInterval::all(), kAs, "Thm2(2)"},
      {"sel cond3 under answer sets",
       or_gen + "pref[2]: a > b.\npref[2]: b > a.\n",
       or_gen + "pref[3]: a > b.\npref[3]: b > a.\n", EquivalenceMode::Sel,
       RankInterval(2, RankBound::infinite()), kAs, "Thm2(3)"},
      {"sel cond1 above rank one",
       xor_gen + "pref[1]: a > b.\n", xor_gen, EquivalenceMode::Sel,
       RankInterval::single(2), kCl, "Thm2(1)"},
      {"combined cond4", "pref[1]: a > -a.\n", "pref[2]: a > -a.\n",
       EquivalenceMode::Combined, RankInterval::single(2), kCl, "Thm4(4)"},
      {"combined cond4 under answer sets", "pref[1]: a > -a.\n",
       "pref[2]: a > -a.\n", EquivalenceMode::Combined,
       RankInterval(2, RankBound::infinite()), kAs, "Thm4(4)"},
      {"combined cond3 via pinned sel subproblem",
       xor_gen + "pref[2]: a > b.\n", xor_gen + "pref[3]: a > b.\n",
       EquivalenceMode::Combined, RankInterval::single(2), kCl, "Thm4(3)"},
      {"combined cond2", xor_gen + "pref: a > b.\n", xor_gen,
       EquivalenceMode::Combined, RankInterval::all(), kCl, "Thm4(2)"},
      {"gen cond1 with a proper HT pair", or_gen,
       "gen: -a -> b.\ngen: -b -> a.\n", EquivalenceMode::Gen,
       RankInterval::all(), kAs, "Thm3(1)"},
      {"combined cond1 with a proper HT pair", or_gen + "pref: a > b.\n",
       "gen: -a -> b.\ngen: -b -> a.\npref: a > b.\n",
       EquivalenceMode::Combined, RankInterval::all(), kAs, "Thm4(1)"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const Problem p = parse_problem(c.p);
    const Problem q = parse_problem(c.q);
    const Alphabet a = default_alphabet(p, q);
    const Verdict v = decide_with_context(p, q, c.mode, c.iv, c.sem, a);
    REQUIRE_FALSE(v.equivalent);
    CHECK(*v.failed_condition == c.condition);
    REQUIRE(v.separating_context.has_value());
    CHECK(verify_verdict(p, q, v, c.sem, a));
    if (c.mode != EquivalenceMode::Gen) {
      for (const auto& r : v.separating_context->selector.rules()) {
        CHECK(c.iv.contains(r.rank()));
      }
    }
  }
}

TEST_CASE("separating context for the example gen pair is the paper's pin") {
  const Problem p1 = load_fixture("ex1-p1.qopt");
  const Problem p2 = load_fixture("ex1-p2.qopt");
  const Alphabet a = default_alphabet(p1, p2);
  const auto ctx =
      separating_context(p1, p2, EquivalenceMode::Gen, RankInterval::all(),
                         kCl, a);
  REQUIRE(ctx.has_value());
  CHECK(ctx->generator == pin_single(interp({"b"}), a));
  CHECK(optimal(union_of(p1, *ctx), kCl, a).members == members({{"b"}}));
  CHECK(optimal(union_of(p2, *ctx), kCl, a).members.empty());
}

TEST_CASE("equivalent pairs have no separating context") {
  const Problem p = load_fixture("ex5-p.qopt");
  const Problem q = load_fixture("ex5-pprime.qopt");
  const Alphabet a = default_alphabet(p, q);
  CHECK_FALSE(separating_context(p, q, EquivalenceMode::Sel,
                                 RankInterval::all(), kCl, a)
                  .has_value());
}

TEST_CASE("oracle finds the example disagreement and honors equivalences") {
  const Problem p6 = load_fixture("ex4-p6.qopt");
  const Problem p7 = load_fixture("ex4-p7.qopt");
  const Alphabet a = default_alphabet(p6, p7);
  const OracleReport bad = oracle_check(p6, p7, EquivalenceMode::Sel,
                                        RankInterval::all(), kCl, a, 10);
  CHECK_FALSE(bad.agreed);
  REQUIRE(bad.first_disagreement.has_value());
  CHECK_FALSE(bad.first_disagreement->pi_p.same_members(
      bad.first_disagreement->pi_q));

  const Problem e6 = load_fixture("ex6-p.qopt");
  const Problem e6p = load_fixture("ex6-pprime.qopt");
  const OracleReport good =
      oracle_check(e6, e6p, EquivalenceMode::Sel,
                   RankInterval(4, RankBound::infinite()), kCl,
                   default_alphabet(e6, e6p), 60, 5);
  CHECK(good.agreed);
  CHECK(good.checked > 60);

  const OracleReport self = oracle_check(p6, p6, EquivalenceMode::Combined,
                                         RankInterval::all(), kCl, a, 25);
  CHECK(self.agreed);
}

TEST_CASE("oracle rejects an empty context family") {
  // unsatisfiable generators leave sel mode without outcome gadgets
  const Problem p = parse_problem("gen: bot.");
  CHECK_THROWS_AS(oracle_check(p, p, EquivalenceMode::Sel, RankInterval::all(),
                               kCl, Alphabet::over({"a"}), 0),
                  std::invalid_argument);
}

TEST_CASE("nnf recognition") {
  CHECK(is_nnf(parse_formula("a & (-b | c)")));
  CHECK(is_nnf(parse_formula("top")));
  CHECK(is_nnf(parse_formula("bot")));
  CHECK_FALSE(is_nnf(parse_formula("-(a & b)")));
  CHECK_FALSE(is_nnf(parse_formula("a -> b")));
  CHECK_FALSE(is_nnf(parse_formula("--a")));
}

TEST_CASE("primed companions avoid collisions") {
  CHECK(primed_companion(Atom("a"), {}) == Atom("a_p"));
  CHECK(primed_companion(Atom("a"), {Atom("a_p")}) == Atom("a_p_"));
}

TEST_CASE("minimal-model encoding on fixed theories") {
  const Alphabet ab = Alphabet::over({"a", "b"});
  {
    const Problem enc = encode_min_models(Theory::of({parse_formula("a | b")}));
    const Alphabet full = default_alphabet(enc);
    const auto pi = optimal(enc, kCl, full);
    CHECK(pi.members == members({{"a", "b_p"}, {"b", "a_p"}}));
  }
  {
    const Problem enc =
        encode_min_models(Theory::of({parse_formula("a")}), ab);
    const auto pi = optimal(enc, kCl, default_alphabet(enc));
    CHECK(pi.members == members({{"a", "b_p"}}));
  }
  {
    const Problem enc = encode_min_models(
        Theory::of({parse_formula("a"), parse_formula("-a")}), ab);
    CHECK(outcomes(enc, kCl, default_alphabet(enc)).members.empty());
    CHECK(optimal(enc, kCl, default_alphabet(enc)).members.empty());
  }
  CHECK_THROWS_AS(encode_min_models(Theory::of({parse_formula("a -> b")})),
                  std::invalid_argument);
}

TEST_CASE("minimal-model encoding matches brute force on random theories") {
  Rng rng(97);
  const auto pool = atom_pool(4);
  const Alphabet u = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  for (int round = 0; round < 60; ++round) {
    Theory t;
    const auto count = 1 + rng.next(3);
    for (std::uint64_t k = 0; k < count; ++k) {
      t.insert(random_nnf(rng, pool, 3));
    }
    const Problem enc = encode_min_models(t, u);
    const auto pi = optimal(enc, kCl, default_alphabet(enc));
    std::set<Interpretation> projected;
    for (const auto& i : pi.members) projected.insert(i.restricted_to(u.atom_set()));
    const auto expect = brute_minimal_models(t, u);
    CHECK(std::vector<Interpretation>(projected.begin(), projected.end()) ==
          expect);
    CHECK(pi.members.size() == expect.size());
  }
}

TEST_CASE("equal minimal models is sel-equivalence at ranks two and up") {
  Rng rng(101);
  const auto pool = atom_pool(3);
  const Alphabet u = Alphabet(std::set<Atom>(pool.begin(), pool.end()));
  const RankInterval high(2, RankBound::infinite());
  for (int round = 0; round < 40; ++round) {
    Theory s, t;
    const auto sc = 1 + rng.next(2);
    for (std::uint64_t k = 0; k < sc; ++k) s.insert(random_nnf(rng, pool, 2));
    if (rng.coin()) {
      // a structurally different theory with the same models
      t = s.unioned(Theory::of({Formula::disj(*s.formulas().begin(),
                                              *s.formulas().begin())}));
    } else {
      const auto tc = 1 + rng.next(2);
      for (std::uint64_t k = 0; k < tc; ++k) t.insert(random_nnf(rng, pool, 2));
    }
    const Problem ps = encode_min_models(s, u);
    const Problem pt = encode_min_models(t, u);
    const Alphabet full = default_alphabet(ps, pt);
    const bool same_minmodels =
        brute_minimal_models(s, u) == brute_minimal_models(t, u);
    const Verdict v = sel_equivalent(ps, pt, high, kCl, full);
    CHECK(v.equivalent == same_minmodels);
  }
}

}  // TEST_SUITE
