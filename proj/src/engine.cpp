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

#include "engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qopt::detail {

Mask mask_of(const Interpretation& i, const Alphabet& a) {
  Mask m = 0;
  for (const auto& atom : i.atoms()) m |= Mask{1} << a.index_of(atom);
  return m;
}

Interpretation interp_of(Mask m, const Alphabet& a) {
  std::set<Atom> atoms;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (m >> k & 1) atoms.insert(a.atoms()[k]);
  }
  return Interpretation(std::move(atoms));
}

bool holds_classical(const Formula& f, const Alphabet& a, Mask m) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return m >> a.index_of(f.atom_name()) & 1;
    case Formula::Kind::And:
      return holds_classical(f.lhs(), a, m) && holds_classical(f.rhs(), a, m);
    case Formula::Kind::Or:
      return holds_classical(f.lhs(), a, m) || holds_classical(f.rhs(), a, m);
    case Formula::Kind::Implies:
      return !holds_classical(f.lhs(), a, m) || holds_classical(f.rhs(), a, m);
  }
  return false;
}

bool holds_ht(const Formula& f, const Alphabet& a, Mask here, Mask there) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return here >> a.index_of(f.atom_name()) & 1;
    case Formula::Kind::And:
      return holds_ht(f.lhs(), a, here, there) &&
             holds_ht(f.rhs(), a, here, there);
    case Formula::Kind::Or:
      return holds_ht(f.lhs(), a, here, there) ||
             holds_ht(f.rhs(), a, here, there);
    case Formula::Kind::Implies:
      return holds_classical(f, a, there) &&
             (!holds_ht(f.lhs(), a, here, there) ||
              holds_ht(f.rhs(), a, here, there));
  }
  return false;
}

bool theory_holds_classical(const Theory& t, const Alphabet& a, Mask m) {
  for (const auto& f : t.formulas()) {
    if (!holds_classical(f, a, m)) return false;
  }
  return true;
}

bool theory_holds_ht(const Theory& t, const Alphabet& a, Mask here,
                     Mask there) {
  for (const auto& f : t.formulas()) {
    if (!holds_ht(f, a, here, there)) return false;
  }
  return true;
}

bool canonical_mask_less(Mask m1, Mask m2) {
  const int p1 = std::popcount(m1);
  const int p2 = std::popcount(m2);
  if (p1 != p2) return p1 < p2;
  const Mask d = m1 ^ m2;
  if (d == 0) return false;
  return m1 >> std::countr_zero(d) & 1;
}

void require_covers(const Alphabet& a, const std::set<Atom>& atoms,
                    const char* what) {
  for (const auto& atom : atoms) {
    if (!a.contains(atom)) {
      throw std::invalid_argument(std::string(what) + " mentions atom '" +
                                  atom.name() +
                                  "' outside the evaluation alphabet");
    }
  }
}

namespace {

void check_cap(const Alphabet& a, std::size_t cap, const char* which) {
  if (a.size() > cap || a.size() > 63) {
    throw EnumerationCapError(
        std::string("alphabet of ") + std::to_string(a.size()) +
        " atoms exceeds the " + which + " enumeration cap of " +
        std::to_string(std::min<std::size_t>(cap, 63)) + " atoms");
  }
}

}  // namespace

std::vector<Mask> classical_masks(const Theory& t, const Alphabet& a,
                                  const EnumerationLimits& limits) {
  require_covers(a, atoms_of(t), "theory");
  check_cap(a, limits.max_classical_atoms, "classical");
  std::vector<Mask> out;
  const Mask end = Mask{1} << a.size();
  for (Mask m = 0; m < end; ++m) {
    if (theory_holds_classical(t, a, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

std::vector<Mask> answer_set_masks(const Theory& t, const Alphabet& a,
                                   const EnumerationLimits& limits) {
  require_covers(a, atoms_of(t), "theory");
  check_cap(a, limits.max_answer_set_atoms, "answer-set");
  std::vector<Mask> out;
  const Mask end = Mask{1} << a.size();
  for (Mask m = 0; m < end; ++m) {
    if (!theory_holds_classical(t, a, m)) continue;  // ⟨m,m⟩ collapses
    bool minimal = true;
    if (m != 0) {
      for (Mask sub = (m - 1) & m;; sub = (sub - 1) & m) {
        if (theory_holds_ht(t, a, sub, m)) {
          minimal = false;
          break;
        }
        if (sub == 0) break;
      }
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_mask_less);
  return out;
}

std::vector<Mask> outcome_masks(const Problem& p, SemanticsMode m,
                                const Alphabet& a,
                                const EnumerationLimits& limits) {
  return m == SemanticsMode::Classical ? classical_masks(p.generator, a, limits)
                                       : answer_set_masks(p.generator, a, limits);
}

PrefEngine::PrefEngine(const Selector& s, const Alphabet& a) : alphabet_(a) {
  require_covers(a, atoms_of(s), "selector");
  rules_.assign(s.rules().begin(), s.rules().end());
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const PreferenceRule& x, const PreferenceRule& y) {
                     return x.rank() < y.rank();
                   });
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (k == 0 || rules_[k].rank() != rules_[k - 1].rank()) {
      group_start_.push_back(k);
      group_rank_.push_back(rules_[k].rank());
    }
  }
  group_start_.push_back(rules_.size());
}

const std::vector<int>& PrefEngine::degrees(Mask m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  std::vector<int> d(rules_.size(), 1);
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    const auto& r = rules_[k];
    if (!holds_classical(r.body(), alphabet_, m)) continue;  // irrelevant
    for (std::size_t h = 0; h < r.heads().size(); ++h) {
      if (holds_classical(r.heads()[h], alphabet_, m)) {
        d[k] = static_cast<int>(h) + 1;
        break;
      }
      // no satisfied head: stays irrelevant at degree 1
    }
  }
  return cache_.emplace(m, std::move(d)).first->second;
}

int PrefEngine::first_differing_group(const std::vector<int>& di,
                                      const std::vector<int>& dj) const {
  for (std::size_t g = 0; g + 1 < group_start_.size(); ++g) {
    for (std::size_t k = group_start_[g]; k < group_start_[g + 1]; ++k) {
      if (di[k] != dj[k]) return static_cast<int>(g);
    }
  }
  return -1;
}

bool PrefEngine::group_not_worse(const std::vector<int>& di,
                                 const std::vector<int>& dj, int group) const {
  for (std::size_t k = group_start_[group]; k < group_start_[group + 1]; ++k) {
    if (di[k] > dj[k]) return false;
  }
  return true;
}

bool PrefEngine::approx(Mask i, Mask j) {
  return first_differing_group(degrees(i), degrees(j)) < 0;
}

// At the first rank where any degree differs, i wins iff no rule there
// grades i worse; a strictly better rule exists at that rank by choice of
// the rank, so it is the witness rule of the ranked definition.
bool PrefEngine::gt(Mask i, Mask j) {
  const auto& di = degrees(i);
  const auto& dj = degrees(j);
  const int g = first_differing_group(di, dj);
  return g >= 0 && group_not_worse(di, dj, g);
}

bool PrefEngine::geq(Mask i, Mask j) {
  const auto& di = degrees(i);
  const auto& dj = degrees(j);
  const int g = first_differing_group(di, dj);
  return g < 0 || group_not_worse(di, dj, g);
}

RankBound PrefEngine::diff(Mask i, Mask j) {
  const int g = first_differing_group(degrees(i), degrees(j));
  return g < 0 ? RankBound::infinite() : RankBound::at(group_rank_[g]);
}

std::vector<Mask> optimal_masks(const std::vector<Mask>& outcomes,
                                PrefEngine& prefs) {
  std::vector<Mask> out;
  for (Mask i : outcomes) {
    bool dominated = false;
    for (Mask j : outcomes) {
      if (j != i && prefs.gt(j, i)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace qopt::detail
