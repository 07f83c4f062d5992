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

#include "qopt/logic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qopt {

namespace {

bool lower_alpha(char c) { return c >= 'a' && c <= 'z'; }

bool name_char(char c) {
  return lower_alpha(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_name(name_)) {
    throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }
}

bool Atom::valid_name(std::string_view name) {
  if (name.empty() || !lower_alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), name_char);
}

Interpretation Interpretation::of(std::initializer_list<std::string> names) {
  std::set<Atom> atoms;
  for (const auto& n : names) atoms.insert(Atom(n));
  return Interpretation(std::move(atoms));
}

bool Interpretation::subset_of(const Interpretation& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(),
                       atoms_.begin(), atoms_.end());
}

Interpretation Interpretation::restricted_to(const std::set<Atom>& keep) const {
  std::set<Atom> out;
  for (const auto& a : atoms_) {
    if (keep.count(a)) out.insert(a);
  }
  return Interpretation(std::move(out));
}

std::strong_ordering Interpretation::operator<=>(
    const Interpretation& other) const {
  if (auto c = atoms_.size() <=> other.atoms_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end());
}

HTInterpretation::HTInterpretation(Interpretation here, Interpretation there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!here_.subset_of(there_)) {
    throw std::invalid_argument(
        "HT interpretation requires here ⊆ there");
  }
}

std::strong_ordering HTInterpretation::operator<=>(
    const HTInterpretation& other) const {
  if (auto c = there_ <=> other.there_; c != 0) return c;
  return here_ <=> other.here_;
}

Alphabet::Alphabet(const std::set<Atom>& atoms)
    : atoms_(atoms.begin(), atoms.end()) {}

Alphabet Alphabet::over(std::initializer_list<std::string> names) {
  std::set<Atom> atoms;
  for (const auto& n : names) atoms.insert(Atom(n));
  return Alphabet(atoms);
}

bool Alphabet::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool Alphabet::contains_all(const std::set<Atom>& atoms) const {
  return std::all_of(atoms.begin(), atoms.end(),
                     [this](const Atom& a) { return contains(a); });
}

std::size_t Alphabet::index_of(const Atom& a) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
  if (it == atoms_.end() || *it != a) {
    throw std::invalid_argument("atom '" + a.name() + "' not in alphabet");
  }
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::set<Atom> Alphabet::atom_set() const {
  return std::set<Atom>(atoms_.begin(), atoms_.end());
}

Alphabet Alphabet::joined(const Alphabet& other) const {
  std::set<Atom> all(atoms_.begin(), atoms_.end());
  all.insert(other.atoms_.begin(), other.atoms_.end());
  return Alphabet(all);
}

Alphabet Alphabet::extended(const std::set<Atom>& extra) const {
  std::set<Atom> all(atoms_.begin(), atoms_.end());
  all.insert(extra.begin(), extra.end());
  return Alphabet(all);
}

struct Formula::Node {
  Kind kind;
  Atom name;                      // Kind::Atom
  std::shared_ptr<const Node> l;  // binary kinds
  std::shared_ptr<const Node> r;
};

Formula::Formula() {
  static const auto bottom_node = std::make_shared<const Node>(
      Node{Kind::Bottom, Atom(), nullptr, nullptr});
  node_ = bottom_node;
}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::bottom() { return Formula(); }

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Atom, std::move(a), nullptr, nullptr}));
}

Formula Formula::atom(std::string name) { return atom(Atom(std::move(name))); }

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, Atom(), std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::disj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, Atom(), std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::implies(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, Atom(), std::move(l.node_), std::move(r.node_)}));
}

Formula Formula::neg(Formula f) { return implies(std::move(f), bottom()); }

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::iff(Formula l, Formula r) {
  return conj(implies(l, r), implies(r, l));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) {
    throw std::logic_error("atom_name() on a non-atom formula");
  }
  return node_->name;
}

Formula Formula::lhs() const {
  if (!node_->l) throw std::logic_error("lhs() on a leaf formula");
  return Formula(node_->l);
}

Formula Formula::rhs() const {
  if (!node_->r) throw std::logic_error("rhs() on a leaf formula");
  return Formula(node_->r);
}

bool Formula::is_top() const {
  return kind() == Kind::Implies && lhs().kind() == Kind::Bottom &&
         rhs().kind() == Kind::Bottom;
}

bool Formula::is_negation() const {
  return kind() == Kind::Implies && rhs().kind() == Kind::Bottom &&
         lhs().kind() != Kind::Bottom;
}

bool Formula::is_iff() const {
  if (kind() != Kind::And) return false;
  const Formula& l = lhs();
  const Formula& r = rhs();
  return l.kind() == Kind::Implies && r.kind() == Kind::Implies &&
         l.lhs() == r.rhs() && l.rhs() == r.lhs();
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  const auto k1 = static_cast<int>(kind());
  const auto k2 = static_cast<int>(other.kind());
  if (k1 != k2) return k1 < k2 ? -1 : 1;
  switch (kind()) {
    case Kind::Bottom:
      return 0;
    case Kind::Atom:
      return node_->name.name().compare(other.node_->name.name());
    default: {
      if (int c = lhs().compare(other.lhs()); c != 0) return c;
      return rhs().compare(other.rhs());
    }
  }
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

bool eval_classical(const Interpretation& i, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return i.contains(f.atom_name());
    case Formula::Kind::And:
      return eval_classical(i, f.lhs()) && eval_classical(i, f.rhs());
    case Formula::Kind::Or:
      return eval_classical(i, f.lhs()) || eval_classical(i, f.rhs());
    case Formula::Kind::Implies:
      return !eval_classical(i, f.lhs()) || eval_classical(i, f.rhs());
  }
  return false;
}

bool eval_ht(const HTInterpretation& p, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return p.here().contains(f.atom_name());
    case Formula::Kind::And:
      return eval_ht(p, f.lhs()) && eval_ht(p, f.rhs());
    case Formula::Kind::Or:
      return eval_ht(p, f.lhs()) || eval_ht(p, f.rhs());
    case Formula::Kind::Implies:
      // Both the classical there-world check and the here-level clause.
      return eval_classical(p.there(), f) &&
             (!eval_ht(p, f.lhs()) || eval_ht(p, f.rhs()));
  }
  return false;
}

}  // namespace qopt
