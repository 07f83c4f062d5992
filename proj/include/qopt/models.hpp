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

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qopt/logic.hpp"

namespace qopt {

/// A finite set of formulas, satisfied as their conjunction. The empty
/// theory is satisfied by every interpretation.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::set<Formula> formulas) : formulas_(std::move(formulas)) {}
  static Theory of(std::initializer_list<Formula> formulas);

  const std::set<Formula>& formulas() const { return formulas_; }
  bool empty() const { return formulas_.empty(); }
  std::size_t size() const { return formulas_.size(); }
  void insert(Formula f) { formulas_.insert(std::move(f)); }
  Theory unioned(const Theory& other) const;

  bool operator==(const Theory&) const = default;

 private:
  std::set<Formula> formulas_;
};

std::set<Atom> atoms_of(const Theory& t);

/// Which notion of outcome a generator produces: classical models or
/// equilibrium models (answer sets).
enum class SemanticsMode { Classical, AnswerSet };

std::string to_string(SemanticsMode m);

/// Hard enumeration caps; exceeding one raises EnumerationCapError instead
/// of silently running for hours. Classical enumeration walks 2^|a|
/// interpretations, answer-set / HT enumeration walks up to 3^|a| pairs.
struct EnumerationLimits {
  std::size_t max_classical_atoms = 22;
  std::size_t max_answer_set_atoms = 16;
};

class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& what)
      : std::runtime_error(what) {}
};

/// All classical models of t over a, in canonical order.
/// Requires atoms_of(t) ⊆ a.
std::vector<Interpretation> classical_models(
    const Theory& t, const Alphabet& a, const EnumerationLimits& limits = {});

/// All HT-models ⟨H,T⟩ with H ⊆ T ⊆ a, in canonical order.
std::vector<HTInterpretation> ht_models(const Theory& t, const Alphabet& a,
                                        const EnumerationLimits& limits = {});

/// All equilibrium models: I with ⟨I,I⟩ ⊨ t and no J ⊊ I with ⟨J,I⟩ ⊨ t.
std::vector<Interpretation> answer_sets(const Theory& t, const Alphabet& a,
                                        const EnumerationLimits& limits = {});

/// Strong equivalence of plain theories: equality of classical model sets
/// under classical semantics, equality of HT-model sets under answer-set
/// semantics.
bool theories_strongly_equivalent(const Theory& t1, const Theory& t2,
                                  SemanticsMode m, const Alphabet& a,
                                  const EnumerationLimits& limits = {});

}  // namespace qopt
