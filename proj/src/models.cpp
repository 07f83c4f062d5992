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

#include "qopt/models.hpp"

#include "engine.hpp"

namespace qopt {

Theory Theory::of(std::initializer_list<Formula> formulas) {
  std::set<Formula> set(formulas.begin(), formulas.end());
  return Theory(std::move(set));
}

Theory Theory::unioned(const Theory& other) const {
  std::set<Formula> all = formulas_;
  all.insert(other.formulas_.begin(), other.formulas_.end());
  return Theory(std::move(all));
}

std::set<Atom> atoms_of(const Theory& t) {
  std::set<Atom> out;
  for (const auto& f : t.formulas()) {
    auto a = atoms_of(f);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::string to_string(SemanticsMode m) {
  return m == SemanticsMode::Classical ? "classical" : "answer-set";
}

std::vector<Interpretation> classical_models(const Theory& t,
                                             const Alphabet& a,
                                             const EnumerationLimits& limits) {
  std::vector<Interpretation> out;
  for (auto m : detail::classical_masks(t, a, limits)) {
    out.push_back(detail::interp_of(m, a));
  }
  return out;
}

std::vector<HTInterpretation> ht_models(const Theory& t, const Alphabet& a,
                                        const EnumerationLimits& limits) {
  detail::require_covers(a, atoms_of(t), "theory");
  if (a.size() > limits.max_answer_set_atoms || a.size() > 63) {
    throw EnumerationCapError("alphabet of " + std::to_string(a.size()) +
                              " atoms exceeds the answer-set enumeration cap");
  }
  std::vector<HTInterpretation> out;
  const detail::Mask end = detail::Mask{1} << a.size();
  for (detail::Mask there = 0; there < end; ++there) {
    // every submask of the there-world, including itself
    detail::Mask here = there;
    while (true) {
      if (detail::theory_holds_ht(t, a, here, there)) {
        out.emplace_back(detail::interp_of(here, a),
                         detail::interp_of(there, a));
      }
      if (here == 0) break;
      here = (here - 1) & there;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interpretation> answer_sets(const Theory& t, const Alphabet& a,
                                        const EnumerationLimits& limits) {
  std::vector<Interpretation> out;
  for (auto m : detail::answer_set_masks(t, a, limits)) {
    out.push_back(detail::interp_of(m, a));
  }
  return out;
}

bool theories_strongly_equivalent(const Theory& t1, const Theory& t2,
                                  SemanticsMode m, const Alphabet& a,
                                  const EnumerationLimits& limits) {
  detail::require_covers(a, atoms_of(t1), "theory");
  detail::require_covers(a, atoms_of(t2), "theory");
  if (m == SemanticsMode::Classical) {
    return detail::classical_masks(t1, a, limits) ==
           detail::classical_masks(t2, a, limits);
  }
  return ht_models(t1, a, limits) == ht_models(t2, a, limits);
}

}  // namespace qopt
