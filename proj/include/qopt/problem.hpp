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

#include "qopt/models.hpp"
#include "qopt/preference.hpp"

namespace qopt {

/// An optimization problem: a generator theory describing the outcome space
/// and a selector ordering the outcomes. Either part may be empty.
struct Problem {
  Theory generator;
  Selector selector;

  bool operator==(const Problem&) const = default;
};

std::set<Atom> atoms_of(const Problem& p);

/// Default evaluation alphabet: the union of all atoms occurring in the
/// arguments.
Alphabet default_alphabet(const Problem& p);
Alphabet default_alphabet(const Problem& p, const Problem& q);

/// Componentwise union; the selector union is duplicate-free.
Problem union_of(const Problem& p, const Problem& q);

/// Generator unchanged, selector sliced to the interval.
Problem restrict_ranks(const Problem& p, const RankInterval& interval);

/// Generator unchanged, selector restricted to ranks strictly below bound.
/// restrict_below(p, 1) clears the selector.
Problem restrict_below(const Problem& p, int bound);

/// The outcome set μ(P) or the preferred-outcome set π(P), tagged with the
/// semantics and alphabet it was computed over. Members are canonically
/// ordered.
struct OutcomeSet {
  std::vector<Interpretation> members;
  SemanticsMode semantics = SemanticsMode::Classical;
  Alphabet alphabet;

  bool contains(const Interpretation& i) const;
  bool same_members(const OutcomeSet& other) const;
};

/// μ(P): classical models or answer sets of the generator over a.
OutcomeSet outcomes(const Problem& p, SemanticsMode m, const Alphabet& a,
                    const EnumerationLimits& limits = {});

/// π(P): the outcomes no other outcome strictly dominates.
OutcomeSet optimal(const Problem& p, SemanticsMode m, const Alphabet& a,
                   const EnumerationLimits& limits = {});

}  // namespace qopt
