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

#include "qopt/gadgets.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "engine.hpp"

namespace qopt {

namespace {

using detail::Mask;

// Contexts are enumerated exhaustively over the alphabet's interpretation
// space; beyond this many atoms the pin families are no longer desk-scale.
constexpr std::size_t kOracleAtomCap = 8;

Formula lit(const Atom& x, bool positive) {
  return positive ? Formula::atom(x) : Formula::neg(Formula::atom(x));
}

std::vector<Interpretation> interpretations_over(const Alphabet& a) {
  std::vector<Mask> masks;
  masks.reserve(std::size_t{1} << a.size());
  for (Mask m = 0; m < (Mask{1} << a.size()); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), detail::canonical_mask_less);
  std::vector<Interpretation> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(detail::interp_of(m, a));
  return out;
}

}  // namespace

Theory pin_single(const Interpretation& i, const Alphabet& a) {
  detail::require_covers(a, i.atoms(), "interpretation");
  Theory t;
  for (const auto& x : a.atoms()) {
    if (i.contains(x)) {
      t.insert(Formula::implies(Formula::neg(Formula::atom(x)),
                                Formula::bottom()));
    } else {
      t.insert(Formula::implies(Formula::atom(x), Formula::bottom()));
    }
  }
  return t;
}

Theory pin_pair(const Interpretation& i, const Interpretation& j,
                const Alphabet& a) {
  if (i == j) {
    throw std::invalid_argument("pin_pair needs two distinct interpretations");
  }
  detail::require_covers(a, i.atoms(), "interpretation");
  detail::require_covers(a, j.atoms(), "interpretation");
  Theory t;
  for (const auto& x : a.atoms()) {
    for (const auto& y : a.atoms()) {
      t.insert(Formula::disj(lit(x, i.contains(x)), lit(y, j.contains(y))));
    }
  }
  return t;
}

Selector promote(const Interpretation& i, int rank, const Alphabet& a) {
  detail::require_covers(a, i.atoms(), "interpretation");
  Selector s;
  for (const auto& x : a.atoms()) {
    s.insert(PreferenceRule({lit(x, i.contains(x)), Formula::top()},
                            Formula::top(), rank));
  }
  return s;
}

Selector protect_pair(const Interpretation& i, const Interpretation& j,
                      int rank, const Alphabet& a) {
  detail::require_covers(a, i.atoms(), "interpretation");
  detail::require_covers(a, j.atoms(), "interpretation");
  const Interpretation& lo = std::min(i, j);
  const Interpretation& hi = std::max(i, j);

  std::vector<Atom> only_lo, only_hi;
  Selector s;
  auto rule = [&](Formula head) {
    s.insert(PreferenceRule({std::move(head), Formula::top()}, Formula::top(),
                            rank));
  };
  for (const auto& x : a.atoms()) {
    const bool in_lo = lo.contains(x);
    const bool in_hi = hi.contains(x);
    if (in_lo && in_hi) {
      rule(Formula::atom(x));
    } else if (!in_lo && !in_hi) {
      rule(Formula::neg(Formula::atom(x)));
    } else if (in_lo) {
      only_lo.push_back(x);
    } else {
      only_hi.push_back(x);
    }
  }
  for (const auto& x : only_lo) {
    for (const auto& y : only_hi) {
      rule(Formula::disj(Formula::atom(x), Formula::atom(y)));
      rule(Formula::disj(Formula::neg(Formula::atom(x)),
                         Formula::neg(Formula::atom(y))));
    }
  }
  // Same-polarity pairs drawn from one side of the symmetric difference;
  // both members hold at that side's interpretation and fail at the other,
  // so the head is satisfied by both pinned interpretations.
  auto same_side = [&](const std::vector<Atom>& side) {
    for (std::size_t x = 0; x < side.size(); ++x) {
      for (std::size_t y = x + 1; y < side.size(); ++y) {
        const Formula fx = Formula::atom(side[x]);
        const Formula fy = Formula::atom(side[y]);
        rule(Formula::disj(
            Formula::conj(fx, fy),
            Formula::conj(Formula::neg(fx), Formula::neg(fy))));
      }
    }
  };
  same_side(only_lo);
  same_side(only_hi);
  return s;
}

std::string to_string(GadgetProvenance p) {
  switch (p) {
    case GadgetProvenance::PinSingle:
      return "pin-single";
    case GadgetProvenance::PinPair:
      return "pin-pair";
    case GadgetProvenance::Promote:
      return "promote";
    case GadgetProvenance::ProtectPair:
      return "protect-pair";
    case GadgetProvenance::Random:
      return "random";
  }
  return "";
}

namespace {

Verdict run_decider(const Problem& p, const Problem& q, EquivalenceMode mode,
                    const RankInterval& interval, SemanticsMode m,
                    const Alphabet& a, const EnumerationLimits& limits) {
  switch (mode) {
    case EquivalenceMode::Sel:
      return sel_equivalent(p, q, interval, m, a, limits);
    case EquivalenceMode::Gen:
      return gen_equivalent(p, q, m, a, limits);
    case EquivalenceMode::Combined:
      return combined_equivalent(p, q, interval, m, a, limits);
  }
  return Verdict{};
}

// Context for a generator strong-equivalence failure. Classically this is
// the plain pin (Π[I], ∅). Under answer-set semantics the witness world Y
// must actually become an answer set on the side that has it, so the pin is
// augmented: facts for the here-world X, an implication chain over Y\X that
// leaves ⟨X,Y⟩ and ⟨Y,Y⟩ as the only HT-models of the context with
// there-world Y. π becomes {Y} on the side refuting ⟨X,Y⟩ and ∅ on the side
// satisfying it (for X = Y, {Y} on the side with the classical model).
Problem generator_failure_context(const std::vector<Interpretation>& witness,
                                  SemanticsMode m, const Alphabet& a) {
  if (m == SemanticsMode::Classical) {
    return Problem{pin_single(witness.front(), a), Selector{}};
  }
  const Interpretation& here = witness.front();
  const Interpretation& there = witness.back();
  Theory t = pin_single(there, a);
  for (const auto& x : here.atoms()) t.insert(Formula::atom(x));
  std::vector<Atom> gap;
  for (const auto& x : there.atoms()) {
    if (!here.contains(x)) gap.push_back(x);
  }
  for (const auto& x : gap) {
    for (const auto& y : gap) {
      if (!(x == y)) {
        t.insert(Formula::implies(Formula::atom(x), Formula::atom(y)));
      }
    }
  }
  return Problem{std::move(t), Selector{}};
}

// Context for a sel-equivalence failure, following the constructive proof
// case for the violated condition.
Problem sel_failure_context(const Problem& p, const Problem& q,
                            const RankInterval& interval, const Verdict& v,
                            const Alphabet& a) {
  const int low = interval.low();
  if (*v.failed_condition == "Thm2(1)") {
    return Problem{Theory{}, promote(v.witness.front(), low, a)};
  }
  if (*v.failed_condition == "Thm2(2)") {
    return Problem{Theory{},
                   protect_pair(v.witness[0], v.witness[1], low, a)};
  }
  // Thm2(3): the diffs disagree inside the reachable range. The problem
  // with the smaller diff plays the leading role; the context protects the
  // pair at the low end and promotes one member at the decisive rank.
  const Interpretation& i = v.witness[0];
  const Interpretation& j = v.witness[1];
  const RankBound dp = diff(p.selector, i, j);
  const RankBound dq = diff(q.selector, i, j);
  const Problem& lead = dp < dq ? p : q;
  const RankBound dmin = std::min(dp, dq);
  if (dmin < RankBound::at(low)) {
    return Problem{Theory{},
                   promote(j, low, a).unioned(protect_pair(i, j, low, a))};
  }
  // orient the pair so the promoted member does not already beat the other
  const bool swap = pref_gt(j, i, lead.selector);
  const Interpretation& keep = swap ? j : i;
  const Interpretation& push = swap ? i : j;
  return Problem{Theory{}, protect_pair(keep, push, low, a)
                               .unioned(promote(push, dmin.value(), a))};
}

std::optional<Problem> context_for_verdict(const Problem& p, const Problem& q,
                                           EquivalenceMode mode,
                                           const RankInterval& interval,
                                           SemanticsMode m, const Alphabet& a,
                                           const Verdict& v,
                                           const EnumerationLimits& limits) {
  if (v.equivalent) return std::nullopt;
  const std::string& cond = *v.failed_condition;

  if (mode == EquivalenceMode::Sel) {
    return sel_failure_context(p, q, interval, v, a);
  }

  if (cond == "Thm3(1)" || cond == "Thm4(1)") {
    return generator_failure_context(v.witness, m, a);
  }
  if (cond == "Thm3(2)" || cond == "Thm4(2)") {
    return Problem{pin_pair(v.witness[0], v.witness[1], a), Selector{}};
  }
  if (cond == "Thm4(3)") {
    // pin the witness pair, then separate the pinned problems as selector
    // problems; the diff violation survives pinning, so a sel context exists
    const Theory pin = pin_pair(v.witness[0], v.witness[1], a);
    const Problem wrap{pin, Selector{}};
    auto sub = separating_context(union_of(p, wrap), union_of(q, wrap),
                                  EquivalenceMode::Sel, interval, m, a, limits);
    if (!sub) {
      throw std::logic_error(
          "no sel context for a pinned diff violation; decider and "
          "construction disagree");
    }
    return Problem{pin, sub->selector};
  }
  // Thm4(4): strict relations below the interval differ on the pinned pair.
  const Interpretation& i = v.witness[0];
  const Interpretation& j = v.witness[1];
  const bool p_edge = pref_gt(i, j, restrict_below(p, interval.low()).selector);
  const Problem& other = p_edge ? q : p;
  const Theory pin = pin_pair(i, j, a);
  if (diff(other.selector, i, j) < RankBound::at(interval.low())) {
    // the edge-free side decides the pair below the interval already; the
    // pin alone separates
    return Problem{pin, Selector{}};
  }
  return Problem{pin, promote(j, interval.low(), a)};
}

}  // namespace

std::optional<Problem> separating_context(const Problem& p, const Problem& q,
                                          EquivalenceMode mode,
                                          const RankInterval& interval,
                                          SemanticsMode m, const Alphabet& a,
                                          const EnumerationLimits& limits) {
  const Verdict v = run_decider(p, q, mode, interval, m, a, limits);
  return context_for_verdict(p, q, mode, interval, m, a, v, limits);
}

Verdict decide_with_context(const Problem& p, const Problem& q,
                            EquivalenceMode mode, const RankInterval& interval,
                            SemanticsMode m, const Alphabet& a,
                            const EnumerationLimits& limits) {
  Verdict v = run_decider(p, q, mode, interval, m, a, limits);
  if (!v.equivalent) {
    v.separating_context =
        context_for_verdict(p, q, mode, interval, m, a, v, limits);
  }
  return v;
}

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t n) { return n == 0 ? 0 : eng() % n; }
};

Formula random_formula(Rng& rng, const std::vector<Atom>& pool, int depth) {
  if (pool.empty()) {
    return rng.next(2) == 0 ? Formula::bottom() : Formula::top();
  }
  const auto leaf = [&]() {
    const auto roll = rng.next(10);
    if (roll == 0) return Formula::bottom();
    if (roll == 1) return Formula::top();
    return Formula::atom(pool[rng.next(pool.size())]);
  };
  if (depth <= 0) return leaf();
  switch (rng.next(12)) {
    case 0:
    case 1:
    case 2:
      return leaf();
    case 3:
    case 4:
      return Formula::neg(random_formula(rng, pool, depth - 1));
    case 5:
    case 6:
      return Formula::conj(random_formula(rng, pool, depth - 1),
                           random_formula(rng, pool, depth - 1));
    case 7:
    case 8:
      return Formula::disj(random_formula(rng, pool, depth - 1),
                           random_formula(rng, pool, depth - 1));
    case 9:
    case 10:
      return Formula::implies(random_formula(rng, pool, depth - 1),
                              random_formula(rng, pool, depth - 1));
    default:
      return Formula::iff(random_formula(rng, pool, depth - 1),
                          random_formula(rng, pool, depth - 1));
  }
}

Problem random_context(Rng& rng, const std::vector<Atom>& pool, bool gen_side,
                       bool sel_side, int rank_lo, int rank_hi) {
  Problem ctx;
  if (gen_side) {
    const auto count = rng.next(3);
    for (std::uint64_t k = 0; k < count; ++k) {
      ctx.generator.insert(random_formula(rng, pool, 3));
    }
  }
  if (sel_side) {
    const auto count = rng.next(3);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<Formula> heads;
      const auto nheads = 1 + rng.next(2);
      for (std::uint64_t h = 0; h < nheads; ++h) {
        heads.push_back(random_formula(rng, pool, 2));
      }
      Formula body = rng.next(2) == 0 ? Formula::top()
                                      : random_formula(rng, pool, 2);
      const int rank =
          rank_lo + static_cast<int>(rng.next(
                        static_cast<std::uint64_t>(rank_hi - rank_lo) + 1));
      ctx.selector.insert(
          PreferenceRule(std::move(heads), std::move(body), rank));
    }
  }
  return ctx;
}

}  // namespace

GadgetFamily build_gadget_family(const Problem& p, const Problem& q,
                                 EquivalenceMode mode,
                                 const RankInterval& interval, SemanticsMode m,
                                 const Alphabet& a, std::size_t budget,
                                 std::uint64_t seed,
                                 const EnumerationLimits& limits) {
  if (a.size() > kOracleAtomCap) {
    throw EnumerationCapError(
        "oracle gadget family over " + std::to_string(a.size()) +
        " atoms exceeds the cap of " + std::to_string(kOracleAtomCap));
  }
  const bool gen_side =
      mode == EquivalenceMode::Gen || mode == EquivalenceMode::Combined;
  const bool sel_side =
      mode == EquivalenceMode::Sel || mode == EquivalenceMode::Combined;

  GadgetFamily family;
  const auto interps = interpretations_over(a);

  if (gen_side) {
    for (const auto& i : interps) {
      family.contexts.push_back(
          {Problem{pin_single(i, a), Selector{}}, GadgetProvenance::PinSingle});
    }
    for (std::size_t x = 0; x < interps.size(); ++x) {
      for (std::size_t y = x + 1; y < interps.size(); ++y) {
        family.contexts.push_back(
            {Problem{pin_pair(interps[x], interps[y], a), Selector{}},
             GadgetProvenance::PinPair});
      }
    }
  }

  if (sel_side) {
    // promote/protect contexts over the problems' outcomes, at the low end
    // of the interval and one rank above (clamped to it)
    std::set<Interpretation> outs;
    for (const auto& i : outcomes(p, m, a, limits).members) outs.insert(i);
    for (const auto& i : outcomes(q, m, a, limits).members) outs.insert(i);
    std::vector<int> ranks{interval.low()};
    if (RankBound::at(interval.low() + 1) <= interval.high()) {
      ranks.push_back(interval.low() + 1);
    }
    std::vector<Interpretation> outv(outs.begin(), outs.end());
    for (int rank : ranks) {
      for (const auto& i : outv) {
        family.contexts.push_back(
            {Problem{Theory{}, promote(i, rank, a)}, GadgetProvenance::Promote});
      }
      for (std::size_t x = 0; x < outv.size(); ++x) {
        for (std::size_t y = x + 1; y < outv.size(); ++y) {
          family.contexts.push_back(
              {Problem{Theory{}, protect_pair(outv[x], outv[y], rank, a)},
               GadgetProvenance::ProtectPair});
        }
      }
    }
  }

  int max_rank = interval.low();
  if (auto r = p.selector.max_rank()) max_rank = std::max(max_rank, *r);
  if (auto r = q.selector.max_rank()) max_rank = std::max(max_rank, *r);
  const int rank_hi = interval.high().is_infinite()
                          ? std::max(interval.low(), max_rank + 2)
                          : interval.high().value();

  Rng rng(seed);
  const std::vector<Atom>& pool = a.atoms();
  for (std::size_t k = 0; k < budget; ++k) {
    family.contexts.push_back(
        {random_context(rng, pool, gen_side, sel_side, interval.low(), rank_hi),
         GadgetProvenance::Random});
  }
  return family;
}

OracleReport oracle_check(const Problem& p, const Problem& q,
                          EquivalenceMode mode, const RankInterval& interval,
                          SemanticsMode m, const Alphabet& a,
                          std::size_t budget, std::uint64_t seed,
                          const EnumerationLimits& limits) {
  detail::require_covers(a, atoms_of(p), "problem");
  detail::require_covers(a, atoms_of(q), "problem");
  const GadgetFamily family =
      build_gadget_family(p, q, mode, interval, m, a, budget, seed, limits);
  if (family.contexts.empty()) {
    throw std::invalid_argument("oracle has no contexts to check (budget 0)");
  }
  OracleReport report;
  for (const auto& entry : family.contexts) {
    ++report.checked;
    const Alphabet b = a.extended(atoms_of(entry.context));
    OutcomeSet pi_p = optimal(union_of(p, entry.context), m, b, limits);
    OutcomeSet pi_q = optimal(union_of(q, entry.context), m, b, limits);
    if (!pi_p.same_members(pi_q)) {
      report.agreed = false;
      report.first_disagreement = OracleReport::Disagreement{
          entry.context, entry.provenance, std::move(pi_p), std::move(pi_q)};
      break;
    }
  }
  return report;
}

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_nnf(f.lhs()) && is_nnf(f.rhs());
    case Formula::Kind::Implies:
      if (f.is_top()) return true;
      return f.lhs().kind() == Formula::Kind::Atom &&
             f.rhs().kind() == Formula::Kind::Bottom;
  }
  return false;
}

bool is_nnf(const Theory& t) {
  return std::all_of(t.formulas().begin(), t.formulas().end(),
                     [](const Formula& f) { return is_nnf(f); });
}

Atom primed_companion(const Atom& a, const std::set<Atom>& taken) {
  std::string name = a.name() + "_p";
  while (taken.count(Atom(name))) name += "_";
  return Atom(name);
}

namespace {

Formula replace_negated_atoms(const Formula& f,
                              const std::map<Atom, Atom>& primes);

}  // namespace

Problem encode_min_models(const Theory& t, const Alphabet& universe) {
  detail::require_covers(universe, atoms_of(t), "theory");
  if (!is_nnf(t)) {
    throw std::invalid_argument(
        "minimal-model encoding needs a theory in negation normal form");
  }
  std::set<Atom> taken = universe.atom_set();
  std::map<Atom, Atom> primes;
  for (const auto& u : universe.atoms()) {
    const Atom prime = primed_companion(u, taken);
    taken.insert(prime);
    primes.emplace(u, prime);
  }
  Problem out;
  for (const auto& f : t.formulas()) {
    out.generator.insert(replace_negated_atoms(f, primes));
  }
  for (const auto& [u, prime] : primes) {
    out.generator.insert(Formula::iff(Formula::atom(u),
                                      Formula::neg(Formula::atom(prime))));
    out.selector.insert(PreferenceRule(
        {Formula::atom(prime), Formula::atom(u)}, Formula::top(), 1));
  }
  return out;
}

Problem encode_min_models(const Theory& t) {
  return encode_min_models(t, Alphabet(atoms_of(t)));
}

namespace {

Formula replace_negated_atoms(const Formula& f,
                              const std::map<Atom, Atom>& primes) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::And:
      return Formula::conj(replace_negated_atoms(f.lhs(), primes),
                           replace_negated_atoms(f.rhs(), primes));
    case Formula::Kind::Or:
      return Formula::disj(replace_negated_atoms(f.lhs(), primes),
                           replace_negated_atoms(f.rhs(), primes));
    case Formula::Kind::Implies: {
      if (f.lhs().kind() == Formula::Kind::Atom &&
          f.rhs().kind() == Formula::Kind::Bottom) {
        return Formula::atom(primes.at(f.lhs().atom_name()));
      }
      return f;  // ⊤, by the NNF check
    }
  }
  return f;
}

}  // namespace

}  // namespace qopt
