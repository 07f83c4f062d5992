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

#include <optional>
#include <string>

#include "qopt/problem.hpp"

namespace qopt {

/// Which class of contexts an equivalence quantifies over: selector-only
/// problems with ranks in an interval, generator-only problems, or both
/// combined.
enum class EquivalenceMode { Sel, Gen, Combined };

std::string to_string(EquivalenceMode m);

/// The outcome of an equivalence check. A negative verdict carries the
/// lowest-numbered violated characterization condition ("Thm2(1)".."Thm4(4)")
/// and the canonically least witness: one interpretation for set-equality
/// conditions, an interpretation pair for relation and diff conditions (for
/// gen/combined condition 1 under answer-set semantics the pair is a
/// here/there pair). A separating context, when attached, verifiably
/// separates the problems.
struct Verdict {
  bool equivalent = true;
  std::optional<std::string> failed_condition;
  std::vector<Interpretation> witness;  // empty, one, or two members
  std::optional<Problem> separating_context;
};

/// Strong sel-equivalence over selector contexts with ranks in `interval`,
/// decided by the three-condition characterization: equal preferred outcomes
/// below the interval, equal strict relations on them, and the diff
/// condition.
Verdict sel_equivalent(const Problem& p, const Problem& q,
                       const RankInterval& interval, SemanticsMode m,
                       const Alphabet& a, const EnumerationLimits& limits = {});

/// Strong gen-equivalence: generator theories strongly equivalent under m,
/// and equal strict relations on the classical models of the generators
/// (classical models even under answer-set semantics).
Verdict gen_equivalent(const Problem& p, const Problem& q, SemanticsMode m,
                       const Alphabet& a, const EnumerationLimits& limits = {});

/// Combined strong equivalence over contexts with selector ranks in
/// `interval`: generator strong equivalence plus the three selector
/// conditions quantified over classical models of the generators.
Verdict combined_equivalent(const Problem& p, const Problem& q,
                            const RankInterval& interval, SemanticsMode m,
                            const Alphabet& a,
                            const EnumerationLimits& limits = {});

/// True iff the verdict's separating context actually separates:
/// π(p ∪ ctx) ≠ π(q ∪ ctx) under m. Throws std::invalid_argument when the
/// verdict carries no context.
bool verify_verdict(const Problem& p, const Problem& q, const Verdict& v,
                    SemanticsMode m, const Alphabet& a,
                    const EnumerationLimits& limits = {});

}  // namespace qopt
