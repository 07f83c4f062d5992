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

#include <cstdint>
#include <optional>

#include "qopt/equivalence.hpp"

namespace qopt {

/// Π[I]: {x→⊥ : x ∈ a\I} ∪ {¬x→⊥ : x ∈ I}, kept un-simplified because HT
/// semantics distinguishes classically equivalent forms. Its classical
/// models over a are exactly {I}; joined to a theory it pins the model set
/// (and, when I is an answer set of the theory, the answer-set set) to {I}.
Theory pin_single(const Interpretation& i, const Alphabet& a);

/// Π[I,J] for I ≠ J: the four families of binary disjunctions over
/// I/J-polarized literals. Joined to any theory with classical models I and
/// J it pins both the classical models and the answer sets to {I,J}.
/// Throws std::invalid_argument when i == j.
Theory pin_pair(const Interpretation& i, const Interpretation& j,
                const Alphabet& a);

/// R_rank[I]: {x>⊤ ←^rank : x ∈ I} ∪ {¬x>⊤ ←^rank : x ∈ a\I}. Every rule
/// grades 1 at I and some rule grades 2 at every other interpretation.
Selector promote(const Interpretation& i, int rank, const Alphabet& a);

/// R'_rank[I,J]: the five rule families at the given rank; every rule grades
/// 1 at both I and J, and every interpretation other than I and J grades 2
/// on some rule. For i == j it degenerates to the promote-style pinning of i.
Selector protect_pair(const Interpretation& i, const Interpretation& j,
                      int rank, const Alphabet& a);

enum class GadgetProvenance { PinSingle, PinPair, Promote, ProtectPair, Random };

std::string to_string(GadgetProvenance p);

/// The context family oracle_check evaluates: deterministic gadget contexts
/// for the requested mode plus seeded random contexts.
struct GadgetFamily {
  struct Entry {
    Problem context;
    GadgetProvenance provenance;
  };
  std::vector<Entry> contexts;
};

GadgetFamily build_gadget_family(const Problem& p, const Problem& q,
                                 EquivalenceMode mode,
                                 const RankInterval& interval, SemanticsMode m,
                                 const Alphabet& a, std::size_t budget,
                                 std::uint64_t seed,
                                 const EnumerationLimits& limits = {});

/// Result of the brute-force strong-equivalence probe: whether π(p∪R) and
/// π(q∪R) agreed on every context tried, and if not, the canonically first
/// disagreement.
struct OracleReport {
  struct Disagreement {
    Problem context;
    GadgetProvenance provenance;
    OutcomeSet pi_p;
    OutcomeSet pi_q;
  };
  bool agreed = true;
  std::size_t checked = 0;
  std::optional<Disagreement> first_disagreement;
};

/// Compares π(p∪R) with π(q∪R) over the full gadget family for the mode and
/// interval, plus `budget` seeded random contexts. Throws when the family is
/// empty and budget is 0, or when the alphabet exceeds the desk-scale oracle
/// cap.
OracleReport oracle_check(const Problem& p, const Problem& q,
                          EquivalenceMode mode, const RankInterval& interval,
                          SemanticsMode m, const Alphabet& a,
                          std::size_t budget, std::uint64_t seed = 1,
                          const EnumerationLimits& limits = {});

/// A context problem witnessing non-equivalence, built along the
/// constructive proof direction that matches the failed condition; absent
/// when the problems are equivalent. Selector ranks stay within the interval
/// for sel/combined modes.
std::optional<Problem> separating_context(const Problem& p, const Problem& q,
                                          EquivalenceMode mode,
                                          const RankInterval& interval,
                                          SemanticsMode m, const Alphabet& a,
                                          const EnumerationLimits& limits = {});

/// Runs the decider for the mode and, on a negative verdict, attaches a
/// verified separating context.
Verdict decide_with_context(const Problem& p, const Problem& q,
                            EquivalenceMode mode, const RankInterval& interval,
                            SemanticsMode m, const Alphabet& a,
                            const EnumerationLimits& limits = {});

/// True when negation occurs on atoms only (⊤ and ⊥ allowed).
bool is_nnf(const Formula& f);
bool is_nnf(const Theory& t);

/// A fresh primed companion for an atom: the name with "_p" appended,
/// further suffixed until it avoids `taken`.
Atom primed_companion(const Atom& a, const std::set<Atom>& taken);

/// The minimal-model encoding: generator T[¬u/u'] ∪ {u ↔ ¬u' : u ∈ universe}
/// and selector {u' > u ← : u ∈ universe}. Preferred outcomes of the result
/// correspond one-to-one to the minimal models of t over the universe.
/// Throws std::invalid_argument when t is not in NNF.
Problem encode_min_models(const Theory& t, const Alphabet& universe);
Problem encode_min_models(const Theory& t);

}  // namespace qopt
