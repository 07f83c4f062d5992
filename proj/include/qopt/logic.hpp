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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qopt {

/// A propositional atom. Two atoms are equal iff their names are equal.
/// Valid names match [a-z][A-Za-z0-9_]*.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }
  static bool valid_name(std::string_view name);

  bool operator==(const Atom&) const = default;
  auto operator<=>(const Atom&) const = default;

 private:
  std::string name_;
};

/// A classical interpretation: the finite set of atoms it makes true.
/// Ordered canonically by (cardinality, lexicographic atom list), so ordered
/// containers of interpretations iterate in canonical order.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::set<Atom> atoms) : atoms_(std::move(atoms)) {}
  static Interpretation of(std::initializer_list<std::string> names);

  const std::set<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  bool contains(const Atom& a) const { return atoms_.count(a) != 0; }
  bool subset_of(const Interpretation& other) const;
  Interpretation restricted_to(const std::set<Atom>& keep) const;

  bool operator==(const Interpretation&) const = default;
  std::strong_ordering operator<=>(const Interpretation& other) const;

 private:
  std::set<Atom> atoms_;
};

/// A here-and-there interpretation ⟨H,T⟩ with H ⊆ T; construction rejects
/// violations.
class HTInterpretation {
 public:
  HTInterpretation(Interpretation here, Interpretation there);

  const Interpretation& here() const { return here_; }
  const Interpretation& there() const { return there_; }
  bool total() const { return here_ == there_; }

  bool operator==(const HTInterpretation&) const = default;
  std::strong_ordering operator<=>(const HTInterpretation& other) const;

 private:
  Interpretation here_;
  Interpretation there_;
};

/// A finite ordered atom set fixing the enumeration space. Every formula or
/// rule evaluated against an alphabet must draw its atoms from it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::set<Atom>& atoms);
  static Alphabet over(std::initializer_list<std::string> names);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool contains(const Atom& a) const;
  bool contains_all(const std::set<Atom>& atoms) const;
  std::size_t index_of(const Atom& a) const;  // throws std::invalid_argument
  std::set<Atom> atom_set() const;
  Alphabet joined(const Alphabet& other) const;
  Alphabet extended(const std::set<Atom>& extra) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Atom> atoms_;  // ascending by name
};

/// An immutable propositional formula over the primitive connectives
/// ⊥, ∧, ∨, →. The derived forms are definitional rewrites, never distinct
/// nodes:  ¬f = f → ⊥,  ⊤ = ⊥ → ⊥,  f ↔ g = (f → g) ∧ (g → f).
/// Equality is structural; there is no semantic normalization.
class Formula {
 public:
  enum class Kind : std::uint8_t { Bottom, Atom, And, Or, Implies };

  Formula();  // ⊥
  static Formula bottom();
  static Formula top();
  static Formula atom(Atom a);
  static Formula atom(std::string name);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula neg(Formula f);
  static Formula iff(Formula l, Formula r);

  Kind kind() const;
  const Atom& atom_name() const;  // Kind::Atom only
  Formula lhs() const;            // binary kinds only
  Formula rhs() const;

  // Display patterns recognized by the renderer.
  bool is_top() const;       // ⊥ → ⊥
  bool is_negation() const;  // f → ⊥ with f ≠ ⊥
  bool is_iff() const;       // (l → r) ∧ (r → l)

  int compare(const Formula& other) const;
  bool operator==(const Formula& other) const { return compare(other) == 0; }
  std::strong_ordering operator<=>(const Formula& other) const {
    return compare(other) <=> 0;
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Exactly the atoms occurring in f.
std::set<Atom> atoms_of(const Formula& f);

/// Standard truth-functional evaluation; an atom holds iff it is a member
/// of i, ⊥ never holds.
bool eval_classical(const Interpretation& i, const Formula& f);

/// HT satisfaction. Atoms are read in the here-world; an implication holds
/// iff the there-world satisfies it classically and the here-evaluation of
/// the antecedent fails or the consequent holds.
bool eval_ht(const HTInterpretation& p, const Formula& f);

}  // namespace qopt
