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

// Internal bit-mask evaluation engine shared by the enumeration, optimality
// and equivalence code. Interpretations over an alphabet of n atoms are
// n-bit masks; bit k corresponds to alphabet.atoms()[k].

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qopt/models.hpp"
#include "qopt/preference.hpp"
#include "qopt/problem.hpp"

namespace qopt::detail {

using Mask = std::uint64_t;

Mask mask_of(const Interpretation& i, const Alphabet& a);
Interpretation interp_of(Mask m, const Alphabet& a);

bool holds_classical(const Formula& f, const Alphabet& a, Mask m);
bool holds_ht(const Formula& f, const Alphabet& a, Mask here, Mask there);
bool theory_holds_classical(const Theory& t, const Alphabet& a, Mask m);
bool theory_holds_ht(const Theory& t, const Alphabet& a, Mask here, Mask there);

// Canonical interpretation order on masks: cardinality first, then the
// sorted atom lists lexicographically (the mask holding the first
// differing atom is the smaller one).
bool canonical_mask_less(Mask m1, Mask m2);

void require_covers(const Alphabet& a, const std::set<Atom>& atoms,
                    const char* what);

std::vector<Mask> classical_masks(const Theory& t, const Alphabet& a,
                                  const EnumerationLimits& limits);
std::vector<Mask> answer_set_masks(const Theory& t, const Alphabet& a,
                                   const EnumerationLimits& limits);
std::vector<Mask> outcome_masks(const Problem& p, SemanticsMode m,
                                const Alphabet& a,
                                const EnumerationLimits& limits);

// Degree vectors and the rank-sorted comparison scans, with one cached
// degree vector per interpretation.
class PrefEngine {
 public:
  PrefEngine(const Selector& s, const Alphabet& a);

  const std::vector<int>& degrees(Mask m);
  bool approx(Mask i, Mask j);
  bool geq(Mask i, Mask j);
  bool gt(Mask i, Mask j);
  RankBound diff(Mask i, Mask j);

 private:
  // Index of the first rule of the rank group that decides the comparison:
  // -1 when all degrees coincide.
  int first_differing_group(const std::vector<int>& di,
                            const std::vector<int>& dj) const;
  bool group_not_worse(const std::vector<int>& di, const std::vector<int>& dj,
                       int group) const;

  Alphabet alphabet_;
  std::vector<PreferenceRule> rules_;     // ascending by rank
  std::vector<std::size_t> group_start_;  // one entry per rank group, + end
  std::vector<int> group_rank_;
  std::unordered_map<Mask, std::vector<int>> cache_;
};

std::vector<Mask> optimal_masks(const std::vector<Mask>& outcomes,
                                PrefEngine& prefs);

}  // namespace qopt::detail
