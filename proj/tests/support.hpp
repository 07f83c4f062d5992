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

// Shared test helpers: a reference evaluator kept independent of the library
// evaluation path, exhaustive enumeration oracles, deterministic random
// generators for formulas/selectors/problems, and fixture loading.

#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qopt/gadgets.hpp"
#include "qopt/text_io.hpp"

namespace qtest {

using namespace qopt;

// ---------------------------------------------------------------------------
// Reference oracles (set-based, structurally independent of src/engine.cpp).

// Classical truth-table evaluation over explicit atom sets.
inline bool ref_classical(const std::set<std::string>& world,
                          const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return world.count(f.atom_name().name()) != 0;
    case Formula::Kind::And:
      return ref_classical(world, f.lhs()) && ref_classical(world, f.rhs());
    case Formula::Kind::Or:
      return ref_classical(world, f.lhs()) || ref_classical(world, f.rhs());
    case Formula::Kind::Implies:
      return !ref_classical(world, f.lhs()) || ref_classical(world, f.rhs());
  }
  return false;
}

// HT satisfaction written out by hand from the two-part implication clause.
inline bool ref_ht(const std::set<std::string>& here,
                   const std::set<std::string>& there, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return here.count(f.atom_name().name()) != 0;
    case Formula::Kind::And:
      return ref_ht(here, there, f.lhs()) && ref_ht(here, there, f.rhs());
    case Formula::Kind::Or:
      return ref_ht(here, there, f.lhs()) || ref_ht(here, there, f.rhs());
    case Formula::Kind::Implies:
      return ref_classical(there, f) &&
             (!ref_ht(here, there, f.lhs()) || ref_ht(here, there, f.rhs()));
  }
  return false;
}

inline std::vector<Interpretation> all_interpretations(const Alphabet& a) {
  const auto& atoms = a.atoms();
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
    std::set<Atom> set;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (m >> k & 1) set.insert(atoms[k]);
    }
    out.emplace_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal classical models of a theory over the alphabet, by subset scan.
inline std::vector<Interpretation> brute_minimal_models(const Theory& t,
                                                        const Alphabet& a) {
  std::vector<Interpretation> models;
  for (const auto& i : all_interpretations(a)) {
    bool sat = true;
    std::set<std::string> world;
    for (const auto& atom : i.atoms()) world.insert(atom.name());
    for (const auto& f : t.formulas()) {
      if (!ref_classical(world, f)) {
        sat = false;
        break;
      }
    }
    if (sat) models.push_back(i);
  }
  std::vector<Interpretation> minimal;
  for (const auto& m : models) {
    bool has_smaller = false;
    for (const auto& n : models) {
      if (!(n == m) && n.subset_of(m)) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// ---------------------------------------------------------------------------
// Deterministic random generators.

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t n) { return n == 0 ? 0 : eng() % n; }
  bool coin() { return next(2) == 0; }
};

inline std::vector<Atom> atom_pool(int n) {
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  std::vector<Atom> out;
  for (int k = 0; k < n; ++k) out.emplace_back(names.at(k));
  return out;
}

inline Formula random_formula(Rng& rng, const std::vector<Atom>& pool,
                              int depth) {
  const auto leaf = [&]() {
    const auto roll = rng.next(10);
    if (roll == 0) return Formula::bottom();
    if (roll == 1) return Formula::top();
    return Formula::atom(pool[rng.next(pool.size())]);
  };
  if (depth <= 0 || pool.empty()) return pool.empty() ? Formula::bottom() : leaf();
  switch (rng.next(12)) {
    case 0:
    case 1:
    case 2:
      return leaf();
    case 3:
    case 4:
      return Formula::neg(random_formula(rng, pool, depth - 1));
    case 5:
    case 6:
      return Formula::conj(random_formula(rng, pool, depth - 1),
                           random_formula(rng, pool, depth - 1));
    case 7:
    case 8:
      return Formula::disj(random_formula(rng, pool, depth - 1),
                           random_formula(rng, pool, depth - 1));
    case 9:
    case 10:
      return Formula::implies(random_formula(rng, pool, depth - 1),
                              random_formula(rng, pool, depth - 1));
    default:
      return Formula::iff(random_formula(rng, pool, depth - 1),
                          random_formula(rng, pool, depth - 1));
  }
}

inline Theory random_theory(Rng& rng, const std::vector<Atom>& pool,
                            int max_formulas, int depth) {
  Theory t;
  const auto count = rng.next(static_cast<std::uint64_t>(max_formulas) + 1);
  for (std::uint64_t k = 0; k < count; ++k) {
    t.insert(random_formula(rng, pool, depth));
  }
  return t;
}

inline PreferenceRule random_rule(Rng& rng, const std::vector<Atom>& pool,
                                  int max_heads, int max_rank, int depth) {
  std::vector<Formula> heads;
  const auto nheads = 1 + rng.next(static_cast<std::uint64_t>(max_heads));
  for (std::uint64_t h = 0; h < nheads; ++h) {
    heads.push_back(random_formula(rng, pool, depth));
  }
  Formula body =
      rng.coin() ? Formula::top() : random_formula(rng, pool, depth);
  const int rank = 1 + static_cast<int>(rng.next(max_rank));
  return PreferenceRule(std::move(heads), std::move(body), rank);
}

inline Selector random_selector(Rng& rng, const std::vector<Atom>& pool,
                                int max_rules, int max_heads, int max_rank,
                                int depth) {
  Selector s;
  const auto count = rng.next(static_cast<std::uint64_t>(max_rules) + 1);
  for (std::uint64_t k = 0; k < count; ++k) {
    s.insert(random_rule(rng, pool, max_heads, max_rank, depth));
  }
  return s;
}

inline Problem random_problem(Rng& rng, const std::vector<Atom>& pool,
                              int max_formulas, int max_rules, int max_rank,
                              int depth) {
  return Problem{random_theory(rng, pool, max_formulas, depth),
                 random_selector(rng, pool, max_rules, 3, max_rank, depth)};
}

// Random NNF formula: literals joined by ∧/∨.
inline Formula random_nnf(Rng& rng, const std::vector<Atom>& pool, int depth) {
  if (depth <= 0 || rng.next(4) == 0) {
    Formula lit = Formula::atom(pool[rng.next(pool.size())]);
    return rng.coin() ? lit : Formula::neg(lit);
  }
  Formula l = random_nnf(rng, pool, depth - 1);
  Formula r = random_nnf(rng, pool, depth - 1);
  return rng.coin() ? Formula::conj(std::move(l), std::move(r))
                    : Formula::disj(std::move(l), std::move(r));
}

// ---------------------------------------------------------------------------
// Fixtures and paper examples.

inline std::string fixtures_dir() {
  if (const char* env = std::getenv("QOPT_FIXTURES")) return env;
  return "tests/fixtures";
}

inline Problem load_fixture(const std::string& name) {
  const std::string path = fixtures_dir() + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

inline Interpretation interp(std::initializer_list<std::string> names) {
  return Interpretation::of(names);
}

inline std::vector<Interpretation> members(
    std::initializer_list<std::initializer_list<std::string>> sets) {
  std::vector<Interpretation> out;
  for (const auto& s : sets) out.push_back(Interpretation::of(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qtest
