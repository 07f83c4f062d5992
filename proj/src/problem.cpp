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

#include "qopt/problem.hpp"

#include <algorithm>

#include "engine.hpp"

namespace qopt {

std::set<Atom> atoms_of(const Problem& p) {
  std::set<Atom> out = atoms_of(p.generator);
  auto sel = atoms_of(p.selector);
  out.insert(sel.begin(), sel.end());
  return out;
}

Alphabet default_alphabet(const Problem& p) { return Alphabet(atoms_of(p)); }

Alphabet default_alphabet(const Problem& p, const Problem& q) {
  std::set<Atom> all = atoms_of(p);
  auto qa = atoms_of(q);
  all.insert(qa.begin(), qa.end());
  return Alphabet(all);
}

Problem union_of(const Problem& p, const Problem& q) {
  return Problem{p.generator.unioned(q.generator),
                 p.selector.unioned(q.selector)};
}

Problem restrict_ranks(const Problem& p, const RankInterval& interval) {
  return Problem{p.generator, rank_slice(p.selector, interval)};
}

Problem restrict_below(const Problem& p, int bound) {
  std::set<PreferenceRule> kept;
  for (const auto& r : p.selector.rules()) {
    if (r.rank() < bound) kept.insert(r);
  }
  return Problem{p.generator, Selector(std::move(kept))};
}

bool OutcomeSet::contains(const Interpretation& i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool OutcomeSet::same_members(const OutcomeSet& other) const {
  return members == other.members;
}

OutcomeSet outcomes(const Problem& p, SemanticsMode m, const Alphabet& a,
                    const EnumerationLimits& limits) {
  detail::require_covers(a, atoms_of(p), "problem");
  OutcomeSet out;
  out.semantics = m;
  out.alphabet = a;
  for (auto mask : detail::outcome_masks(p, m, a, limits)) {
    out.members.push_back(detail::interp_of(mask, a));
  }
  return out;
}

OutcomeSet optimal(const Problem& p, SemanticsMode m, const Alphabet& a,
                   const EnumerationLimits& limits) {
  detail::require_covers(a, atoms_of(p), "problem");
  const auto mu = detail::outcome_masks(p, m, a, limits);
  detail::PrefEngine prefs(p.selector, a);
  OutcomeSet out;
  out.semantics = m;
  out.alphabet = a;
  for (auto mask : detail::optimal_masks(mu, prefs)) {
    out.members.push_back(detail::interp_of(mask, a));
  }
  return out;
}

}  // namespace qopt
