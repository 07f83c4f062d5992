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

#include "qopt/preference.hpp"

#include <stdexcept>

#include "engine.hpp"

namespace qopt {

RankBound RankBound::at(int rank) {
  if (rank < 1) throw std::invalid_argument("ranks start at 1");
  return RankBound(rank, false);
}

int RankBound::value() const {
  if (infinite_) throw std::logic_error("value() on an infinite rank bound");
  return value_;
}

std::strong_ordering RankBound::operator<=>(const RankBound& other) const {
  if (infinite_ && other.infinite_) return std::strong_ordering::equal;
  if (infinite_) return std::strong_ordering::greater;
  if (other.infinite_) return std::strong_ordering::less;
  return value_ <=> other.value_;
}

bool operator<(int rank, const RankBound& b) { return RankBound::at(rank) < b; }

bool operator<=(const RankBound& b, int rank) { return b <= RankBound::at(rank); }

RankInterval::RankInterval(int low, RankBound high)
    : low_(low), high_(high) {
  if (low < 1) throw std::invalid_argument("rank interval low must be ≥ 1");
  if (high < RankBound::at(low)) {
    throw std::invalid_argument("rank interval requires low ≤ high");
  }
}

RankInterval RankInterval::single(int rank) {
  return RankInterval(rank, RankBound::at(rank));
}

RankInterval RankInterval::between(int low, int high) {
  return RankInterval(low, RankBound::at(high));
}

bool RankInterval::contains(int rank) const {
  return rank >= low_ && RankBound::at(rank) <= high_;
}

PreferenceRule::PreferenceRule(std::vector<Formula> heads, Formula body,
                               int rank)
    : heads_(std::move(heads)), body_(std::move(body)), rank_(rank) {
  if (heads_.empty()) {
    throw std::invalid_argument("preference rule needs at least one head");
  }
  if (rank_ < 1) throw std::invalid_argument("preference rule rank must be ≥ 1");
}

int PreferenceRule::compare(const PreferenceRule& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_ ? -1 : 1;
  if (heads_.size() != other.heads_.size()) {
    return heads_.size() < other.heads_.size() ? -1 : 1;
  }
  for (std::size_t k = 0; k < heads_.size(); ++k) {
    if (int c = heads_[k].compare(other.heads_[k]); c != 0) return c;
  }
  return body_.compare(other.body_);
}

Selector Selector::of(std::initializer_list<PreferenceRule> rules) {
  std::set<PreferenceRule> set(rules.begin(), rules.end());
  return Selector(std::move(set));
}

Selector Selector::unioned(const Selector& other) const {
  std::set<PreferenceRule> all = rules_;
  all.insert(other.rules_.begin(), other.rules_.end());
  return Selector(std::move(all));
}

std::optional<int> Selector::max_rank() const {
  std::optional<int> best;
  for (const auto& r : rules_) {
    if (!best || r.rank() > *best) best = r.rank();
  }
  return best;
}

std::set<Atom> atoms_of(const PreferenceRule& r) {
  std::set<Atom> out = atoms_of(r.body());
  for (const auto& h : r.heads()) {
    auto a = atoms_of(h);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::set<Atom> atoms_of(const Selector& s) {
  std::set<Atom> out;
  for (const auto& r : s.rules()) {
    auto a = atoms_of(r);
    out.insert(a.begin(), a.end());
  }
  return out;
}

int satisfaction_degree(const Interpretation& i, const PreferenceRule& r) {
  if (!eval_classical(i, r.body())) return 1;
  for (std::size_t h = 0; h < r.heads().size(); ++h) {
    if (eval_classical(i, r.heads()[h])) return static_cast<int>(h) + 1;
  }
  return 1;  // no head satisfied: the rule is irrelevant to i
}

Selector rank_slice(const Selector& s, const RankInterval& interval) {
  std::set<PreferenceRule> kept;
  for (const auto& r : s.rules()) {
    if (interval.contains(r.rank())) kept.insert(r);
  }
  return Selector(std::move(kept));
}

namespace {

// Shared setup for the pairwise relations on explicit interpretations.
struct PairEngine {
  Alphabet alphabet;
  detail::PrefEngine engine;
  detail::Mask mi;
  detail::Mask mj;

  PairEngine(const Interpretation& i, const Interpretation& j,
             const Selector& s)
      : alphabet(make_alphabet(i, j, s)),
        engine(s, alphabet),
        mi(detail::mask_of(i, alphabet)),
        mj(detail::mask_of(j, alphabet)) {}

  static Alphabet make_alphabet(const Interpretation& i,
                                const Interpretation& j, const Selector& s) {
    std::set<Atom> all = atoms_of(s);
    all.insert(i.atoms().begin(), i.atoms().end());
    all.insert(j.atoms().begin(), j.atoms().end());
    return Alphabet(all);
  }
};

}  // namespace

bool pref_geq(const Interpretation& i, const Interpretation& j,
              const Selector& s) {
  PairEngine pe(i, j, s);
  return pe.engine.geq(pe.mi, pe.mj);
}

bool pref_gt(const Interpretation& i, const Interpretation& j,
             const Selector& s) {
  PairEngine pe(i, j, s);
  return pe.engine.gt(pe.mi, pe.mj);
}

bool pref_approx(const Interpretation& i, const Interpretation& j,
                 const Selector& s) {
  PairEngine pe(i, j, s);
  return pe.engine.approx(pe.mi, pe.mj);
}

RankBound diff(const Selector& s, const Interpretation& i,
               const Interpretation& j) {
  PairEngine pe(i, j, s);
  return pe.engine.diff(pe.mi, pe.mj);
}

}  // namespace qopt
