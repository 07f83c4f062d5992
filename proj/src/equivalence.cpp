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

#include "qopt/equivalence.hpp"

#include <algorithm>

#include "engine.hpp"

namespace qopt {

namespace {

using detail::Mask;

Verdict failed(std::string condition, std::vector<Interpretation> witness) {
  Verdict v;
  v.equivalent = false;
  v.failed_condition = std::move(condition);
  v.witness = std::move(witness);
  return v;
}

// Both vectors canonically sorted; returns the canonically least member of
// the symmetric difference.
Mask least_difference(const std::vector<Mask>& xs, const std::vector<Mask>& ys) {
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] == ys[j]) {
      ++i;
      ++j;
    } else {
      return detail::canonical_mask_less(xs[i], ys[j]) ? xs[i] : ys[j];
    }
  }
  return i < xs.size() ? xs[i] : ys[j];
}

void require_problem_atoms(const Problem& p, const Problem& q,
                           const Alphabet& a) {
  detail::require_covers(a, atoms_of(p), "problem");
  detail::require_covers(a, atoms_of(q), "problem");
}

// The three selector-side conditions shared by the sel and combined
// characterizations, evaluated over `domain` (π below the interval for sel,
// the classical generator models for combined). Identifiers are prefixed
// "Thm2" or "Thm4" and the condition index shifted by `base` (combined
// renumbers them 2..4). Returns a passing verdict when all hold.
Verdict selector_conditions(const Problem& p, const Problem& q,
                            const RankInterval& interval,
                            const std::vector<Mask>& domain, const Alphabet& a,
                            const char* theorem, int base) {
  detail::PrefEngine full_p(p.selector, a);
  detail::PrefEngine full_q(q.selector, a);

  auto name = [&](int k) {
    return std::string(theorem) + "(" + std::to_string(base + k) + ")";
  };

  // strict relations coincide on the domain
  for (Mask i : domain) {
    for (Mask j : domain) {
      if (i == j) continue;
      if (full_p.gt(i, j) != full_q.gt(i, j)) {
        return failed(name(0), {detail::interp_of(i, a),
                                detail::interp_of(j, a)});
      }
    }
  }

  // diff condition: when either diff exceeds the interval's low end, the
  // diffs agree or both exceed its high end
  for (std::size_t x = 0; x < domain.size(); ++x) {
    for (std::size_t y = x + 1; y < domain.size(); ++y) {
      const RankBound dp = full_p.diff(domain[x], domain[y]);
      const RankBound dq = full_q.diff(domain[x], domain[y]);
      if (!(interval.low() < dp) && !(interval.low() < dq)) continue;
      if (dp == dq) continue;
      if (dp > interval.high() && dq > interval.high()) continue;
      return failed(name(1), {detail::interp_of(domain[x], a),
                              detail::interp_of(domain[y], a)});
    }
  }

  return Verdict{};
}

}  // namespace

std::string to_string(EquivalenceMode m) {
  switch (m) {
    case EquivalenceMode::Sel:
      return "sel";
    case EquivalenceMode::Gen:
      return "gen";
    case EquivalenceMode::Combined:
      return "combined";
  }
  return "";
}

Verdict sel_equivalent(const Problem& p, const Problem& q,
                       const RankInterval& interval, SemanticsMode m,
                       const Alphabet& a, const EnumerationLimits& limits) {
  require_problem_atoms(p, q, a);

  const auto mu_p = detail::outcome_masks(p, m, a, limits);
  const auto mu_q = detail::outcome_masks(q, m, a, limits);

  // condition (1): preferred outcomes below the interval coincide
  detail::PrefEngine below_p(restrict_below(p, interval.low()).selector, a);
  detail::PrefEngine below_q(restrict_below(q, interval.low()).selector, a);
  const auto pi_p = detail::optimal_masks(mu_p, below_p);
  const auto pi_q = detail::optimal_masks(mu_q, below_q);
  if (pi_p != pi_q) {
    return failed("Thm2(1)",
                  {detail::interp_of(least_difference(pi_p, pi_q), a)});
  }

  // conditions (2) and (3) over that common set
  return selector_conditions(p, q, interval, pi_p, a, "Thm2", 2);
}

namespace {

// Generator strong-equivalence check shared by gen and combined modes.
// On failure returns the witness: a single interpretation for a classical
// model difference, a (here, there) pair for a proper HT difference.
std::optional<std::vector<Interpretation>> generator_difference(
    const Problem& p, const Problem& q, SemanticsMode m, const Alphabet& a,
    const EnumerationLimits& limits) {
  const auto mod_p = detail::classical_masks(p.generator, a, limits);
  const auto mod_q = detail::classical_masks(q.generator, a, limits);
  if (mod_p != mod_q) {
    return std::vector<Interpretation>{
        detail::interp_of(least_difference(mod_p, mod_q), a)};
  }
  if (m == SemanticsMode::Classical) return std::nullopt;

  const auto ht_p = ht_models(p.generator, a, limits);
  const auto ht_q = ht_models(q.generator, a, limits);
  if (ht_p == ht_q) return std::nullopt;
  // classical models agree, so the least difference is a proper pair
  std::size_t i = 0, j = 0;
  while (i < ht_p.size() && j < ht_q.size() && ht_p[i] == ht_q[j]) {
    ++i;
    ++j;
  }
  const HTInterpretation& w =
      i < ht_p.size() && (j == ht_q.size() || ht_p[i] < ht_q[j]) ? ht_p[i]
                                                                 : ht_q[j];
  return std::vector<Interpretation>{w.here(), w.there()};
}

}  // namespace

Verdict gen_equivalent(const Problem& p, const Problem& q, SemanticsMode m,
                       const Alphabet& a, const EnumerationLimits& limits) {
  require_problem_atoms(p, q, a);

  if (auto w = generator_difference(p, q, m, a, limits)) {
    return failed("Thm3(1)", std::move(*w));
  }

  // condition (2): strict relations on the classical generator models,
  // under either semantics
  const auto mod = detail::classical_masks(p.generator, a, limits);
  detail::PrefEngine full_p(p.selector, a);
  detail::PrefEngine full_q(q.selector, a);
  for (Mask i : mod) {
    for (Mask j : mod) {
      if (i == j) continue;
      if (full_p.gt(i, j) != full_q.gt(i, j)) {
        return failed("Thm3(2)",
                      {detail::interp_of(i, a), detail::interp_of(j, a)});
      }
    }
  }
  return Verdict{};
}

Verdict combined_equivalent(const Problem& p, const Problem& q,
                            const RankInterval& interval, SemanticsMode m,
                            const Alphabet& a,
                            const EnumerationLimits& limits) {
  require_problem_atoms(p, q, a);

  // condition (1): generator strong equivalence
  if (auto w = generator_difference(p, q, m, a, limits)) {
    return failed("Thm4(1)", std::move(*w));
  }

  // conditions (2)-(3) over the classical generator models, even under
  // answer-set semantics
  const auto mod = detail::classical_masks(p.generator, a, limits);
  Verdict v = selector_conditions(p, q, interval, mod, a, "Thm4", 2);
  if (!v.equivalent) return v;

  // condition (4): strict relations below the interval coincide on the
  // classical generator models
  detail::PrefEngine below_p(restrict_below(p, interval.low()).selector, a);
  detail::PrefEngine below_q(restrict_below(q, interval.low()).selector, a);
  for (Mask i : mod) {
    for (Mask j : mod) {
      if (i == j) continue;
      if (below_p.gt(i, j) != below_q.gt(i, j)) {
        return failed("Thm4(4)",
                      {detail::interp_of(i, a), detail::interp_of(j, a)});
      }
    }
  }
  return Verdict{};
}

bool verify_verdict(const Problem& p, const Problem& q, const Verdict& v,
                    SemanticsMode m, const Alphabet& a,
                    const EnumerationLimits& limits) {
  if (!v.separating_context) {
    throw std::invalid_argument("verdict carries no separating context");
  }
  const Problem& ctx = *v.separating_context;
  const Alphabet b = a.extended(atoms_of(ctx));
  const OutcomeSet pi_p = optimal(union_of(p, ctx), m, b, limits);
  const OutcomeSet pi_q = optimal(union_of(q, ctx), m, b, limits);
  return !pi_p.same_members(pi_q);
}

}  // namespace qopt
