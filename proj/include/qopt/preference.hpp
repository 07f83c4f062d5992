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
#include <optional>
#include <set>
#include <vector>

#include "qopt/logic.hpp"

namespace qopt {

/// A rank or ∞. ∞ is ordered above every integer; diff() results and
/// interval upper bounds share this type.
class RankBound {
 public:
  static RankBound infinite() { return RankBound(0, true); }
  static RankBound at(int rank);

  bool is_infinite() const { return infinite_; }
  int value() const;  // throws std::logic_error when infinite

  bool operator==(const RankBound&) const = default;
  std::strong_ordering operator<=>(const RankBound& other) const;

 private:
  RankBound(int value, bool infinite) : value_(value), infinite_(infinite) {}
  int value_;
  bool infinite_;
};

bool operator<(int rank, const RankBound& b);
bool operator<=(const RankBound& b, int rank);

/// The rank interval [low, high], high possibly ∞; 1 ≤ low ≤ high.
class RankInterval {
 public:
  RankInterval(int low, RankBound high);
  static RankInterval all() { return RankInterval(1, RankBound::infinite()); }
  static RankInterval single(int rank);
  static RankInterval between(int low, int high);

  int low() const { return low_; }
  const RankBound& high() const { return high_; }
  bool contains(int rank) const;

  bool operator==(const RankInterval&) const = default;

 private:
  int low_;
  RankBound high_;
};

/// A ranked preference rule  φ1 > … > φk ←^j ψ  with k ≥ 1 heads, body ψ
/// and rank j ≥ 1.
class PreferenceRule {
 public:
  PreferenceRule(std::vector<Formula> heads, Formula body, int rank);

  const std::vector<Formula>& heads() const { return heads_; }
  const Formula& body() const { return body_; }
  int rank() const { return rank_; }

  int compare(const PreferenceRule& other) const;
  bool operator==(const PreferenceRule& o) const { return compare(o) == 0; }
  std::strong_ordering operator<=>(const PreferenceRule& o) const {
    return compare(o) <=> 0;
  }

 private:
  std::vector<Formula> heads_;
  Formula body_;
  int rank_;
};

/// A duplicate-free finite set of preference rules.
class Selector {
 public:
  Selector() = default;
  explicit Selector(std::set<PreferenceRule> rules) : rules_(std::move(rules)) {}
  static Selector of(std::initializer_list<PreferenceRule> rules);

  const std::set<PreferenceRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }
  void insert(PreferenceRule r) { rules_.insert(std::move(r)); }
  Selector unioned(const Selector& other) const;
  std::optional<int> max_rank() const;

  bool operator==(const Selector&) const = default;

 private:
  std::set<PreferenceRule> rules_;
};

std::set<Atom> atoms_of(const PreferenceRule& r);
std::set<Atom> atoms_of(const Selector& s);

/// Satisfaction degree v_I(r): the least index of a head satisfied by i,
/// when i satisfies the body and at least one head; otherwise the rule is
/// irrelevant to i and grades 1.
int satisfaction_degree(const Interpretation& i, const PreferenceRule& r);

/// The sub-selector of rules whose ranks lie in the interval.
Selector rank_slice(const Selector& s, const RankInterval& interval);

/// Ranked preference: i ≥ j iff all degrees coincide, or some rule r'
/// improves strictly while no rule of the same rank worsens and all rules
/// of smaller ranks grade equally.
bool pref_geq(const Interpretation& i, const Interpretation& j,
              const Selector& s);

/// Strict preference: a witness rule for the three ranked conditions exists.
bool pref_gt(const Interpretation& i, const Interpretation& j,
             const Selector& s);

/// Indistinguishability: every rule grades i and j equally.
bool pref_approx(const Interpretation& i, const Interpretation& j,
                 const Selector& s);

/// The least rank at which some rule grades i and j differently; ∞ when no
/// rule does. Always ≥ 1.
RankBound diff(const Selector& s, const Interpretation& i,
               const Interpretation& j);

}  // namespace qopt
