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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qopt/gadgets.hpp"
#include "qopt/text_io.hpp"

namespace {

using nlohmann::ordered_json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

qopt::Problem load_problem(const std::string& path) {
  try {
    return qopt::parse_problem(slurp(path));
  } catch (const qopt::ParseError& e) {
    throw CliError(path + ":" + e.what());
  }
}

qopt::SemanticsMode semantics_from(const std::string& name) {
  if (name == "classical") return qopt::SemanticsMode::Classical;
  if (name == "answer-set") return qopt::SemanticsMode::AnswerSet;
  throw CliError("unknown semantics '" + name + "'");
}

qopt::EquivalenceMode mode_from(const std::string& name) {
  if (name == "sel") return qopt::EquivalenceMode::Sel;
  if (name == "gen") return qopt::EquivalenceMode::Gen;
  if (name == "combined") return qopt::EquivalenceMode::Combined;
  throw CliError("unknown mode '" + name + "'");
}

qopt::EnumerationLimits limits_from_env() {
  qopt::EnumerationLimits limits;
  if (const char* cap = std::getenv("QOPT_MAX_ATOMS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v < 1) throw CliError("QOPT_MAX_ATOMS must be a positive number");
    limits.max_classical_atoms = static_cast<std::size_t>(v);
    limits.max_answer_set_atoms = static_cast<std::size_t>(v);
  }
  return limits;
}

// The default alphabet is everything mentioned in the inputs; --alphabet may
// only extend it.
qopt::Alphabet alphabet_for(const std::set<qopt::Atom>& input_atoms,
                            const std::string& extension) {
  std::set<qopt::Atom> atoms = input_atoms;
  if (!extension.empty()) {
    const qopt::Interpretation extra = qopt::parse_interpretation(extension);
    atoms.insert(extra.atoms().begin(), extra.atoms().end());
  }
  return qopt::Alphabet(atoms);
}

void print_outcomes(const qopt::OutcomeSet& set) {
  for (const auto& i : set.members) {
    std::cout << qopt::render_interpretation(i) << "\n";
  }
}

std::string braced_members(const qopt::OutcomeSet& set) {
  std::string out;
  for (const auto& i : set.members) {
    if (!out.empty()) out += ' ';
    out += '{' + (i.empty() ? std::string()
                            : qopt::render_interpretation(i)) +
           '}';
  }
  return out.empty() ? "(none)" : out;
}

ordered_json witness_json(const std::vector<qopt::Interpretation>& witness) {
  ordered_json out = ordered_json::array();
  for (const auto& i : witness) {
    ordered_json one = ordered_json::array();
    for (const auto& a : i.atoms()) one.push_back(a.name());
    out.push_back(one);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{
      "qualitative optimization problems: outcomes, preferred outcomes, and "
      "strong-equivalence checking"};
  app.require_subcommand(1);

  std::string file1, file2, semantics = "classical", mode,
              interval_text = "1..inf", alphabet_ext, interp_text;
  bool with_witness = false, as_json = false;
  std::size_t budget = 50;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool two_files) {
    cmd->add_option("file1", file1, "problem file")->required();
    if (two_files) cmd->add_option("file2", file2, "problem file")->required();
    cmd->add_option("--semantics", semantics,
                    "classical or answer-set (default classical)");
    cmd->add_option("--alphabet", alphabet_ext,
                    "extra atoms (comma separated) extending the alphabet");
  };

  auto* models_cmd = app.add_subcommand("models", "print the outcome set μ");
  add_common(models_cmd, false);

  auto* optimal_cmd =
      app.add_subcommand("optimal", "print the preferred outcomes π");
  add_common(optimal_cmd, false);

  auto* degrees_cmd = app.add_subcommand(
      "degrees", "print rank, rule and satisfaction degree per rule");
  degrees_cmd->add_option("file1", file1, "problem file")->required();
  degrees_cmd->add_option("--interp", interp_text,
                          "interpretation as comma-separated atoms ({} for "
                          "empty)");

  auto* compare_cmd = app.add_subcommand(
      "compare", "decide strong sel-/gen-/combined equivalence");
  add_common(compare_cmd, true);
  compare_cmd->add_option("--mode", mode, "sel, gen or combined")->required();
  compare_cmd->add_option("--interval", interval_text,
                          "rank interval, e.g. 1..inf or 2..3");
  compare_cmd->add_flag("--witness", with_witness,
                        "print the failed condition, witness and a verified "
                        "separating context");
  compare_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force equivalence probe over the gadget context family");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--mode", mode, "sel, gen or combined")->required();
  oracle_cmd->add_option("--interval", interval_text, "rank interval");
  oracle_cmd->add_option("--budget", budget, "number of random contexts");
  oracle_cmd->add_option("--seed", seed, "random context seed");

  auto* encode_cmd = app.add_subcommand(
      "encode-minmodels",
      "emit the problem whose preferred outcomes are the minimal models of "
      "the input generator (NNF required)");
  encode_cmd->add_option("file1", file1, "problem file")->required();
  encode_cmd->add_option("--alphabet", alphabet_ext,
                         "extra atoms (comma separated) extending the "
                         "minimization universe");

  CLI11_PARSE(app, argc, argv);

  const qopt::EnumerationLimits limits = limits_from_env();

  if (models_cmd->parsed() || optimal_cmd->parsed()) {
    const qopt::Problem p = load_problem(file1);
    const auto m = semantics_from(semantics);
    const auto a = alphabet_for(qopt::atoms_of(p), alphabet_ext);
    print_outcomes(models_cmd->parsed() ? qopt::outcomes(p, m, a, limits)
                                        : qopt::optimal(p, m, a, limits));
    return 0;
  }

  if (degrees_cmd->parsed()) {
    const qopt::Problem p = load_problem(file1);
    const qopt::Interpretation i = qopt::parse_interpretation(interp_text);
    for (const auto& r : p.selector.rules()) {
      std::cout << r.rank() << "\t" << qopt::render_rule(r) << "\t"
                << qopt::satisfaction_degree(i, r) << "\n";
    }
    return 0;
  }

  if (compare_cmd->parsed()) {
    const qopt::Problem p = load_problem(file1);
    const qopt::Problem q = load_problem(file2);
    const auto m = semantics_from(semantics);
    const auto md = mode_from(mode);
    const auto iv = qopt::parse_interval(interval_text);
    std::set<qopt::Atom> atoms = qopt::atoms_of(p);
    const auto qa = qopt::atoms_of(q);
    atoms.insert(qa.begin(), qa.end());
    const auto a = alphabet_for(atoms, alphabet_ext);

    const qopt::Verdict v =
        with_witness || as_json
            ? qopt::decide_with_context(p, q, md, iv, m, a, limits)
            : [&] {
                switch (md) {
                  case qopt::EquivalenceMode::Sel:
                    return qopt::sel_equivalent(p, q, iv, m, a, limits);
                  case qopt::EquivalenceMode::Gen:
                    return qopt::gen_equivalent(p, q, m, a, limits);
                  default:
                    return qopt::combined_equivalent(p, q, iv, m, a, limits);
                }
              }();

    if (as_json) {
      ordered_json out;
      out["mode"] = mode;
      if (md == qopt::EquivalenceMode::Gen) {
        out["interval"] = nullptr;
      } else {
        out["interval"] = qopt::render_interval(iv);
      }
      out["semantics"] = semantics;
      out["equivalent"] = v.equivalent;
      out["failed_condition"] =
          v.failed_condition ? ordered_json(*v.failed_condition)
                             : ordered_json(nullptr);
      out["witness"] = v.witness.empty() ? ordered_json(nullptr)
                                         : witness_json(v.witness);
      out["separating_context"] =
          v.separating_context
              ? ordered_json(qopt::render_problem(*v.separating_context))
              : ordered_json(nullptr);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "equivalent: " << (v.equivalent ? "yes" : "no") << "\n";
      if (!v.equivalent && with_witness) {
        std::cout << "failed_condition: " << *v.failed_condition << "\n";
        std::cout << "witness:";
        for (const auto& w : v.witness) {
          std::cout << " {"
                    << (w.empty() ? std::string()
                                  : qopt::render_interpretation(w))
                    << "}";
        }
        std::cout << "\n";
        if (v.separating_context) {
          std::cout << "separating_context:\n"
                    << qopt::render_problem(*v.separating_context);
        }
      }
    }
    return v.equivalent ? 0 : 1;
  }

  if (oracle_cmd->parsed()) {
    const qopt::Problem p = load_problem(file1);
    const qopt::Problem q = load_problem(file2);
    const auto m = semantics_from(semantics);
    const auto md = mode_from(mode);
    const auto iv = qopt::parse_interval(interval_text);
    std::set<qopt::Atom> atoms = qopt::atoms_of(p);
    const auto qa = qopt::atoms_of(q);
    atoms.insert(qa.begin(), qa.end());
    const auto a = alphabet_for(atoms, alphabet_ext);

    const qopt::OracleReport report =
        qopt::oracle_check(p, q, md, iv, m, a, budget, seed, limits);
    std::cout << "checked: " << report.checked << "\n";
    std::cout << "agreed: " << (report.agreed ? "yes" : "no") << "\n";
    if (report.first_disagreement) {
      const auto& d = *report.first_disagreement;
      std::cout << "context (" << qopt::to_string(d.provenance) << "):\n"
                << qopt::render_problem(d.context);
      std::cout << "pi1: " << braced_members(d.pi_p) << "\n";
      std::cout << "pi2: " << braced_members(d.pi_q) << "\n";
    }
    return report.agreed ? 0 : 1;
  }

  if (encode_cmd->parsed()) {
    const qopt::Problem p = load_problem(file1);
    const auto universe =
        alphabet_for(qopt::atoms_of(p.generator), alphabet_ext);
    const qopt::Problem encoded = qopt::encode_min_models(p.generator, universe);
    std::cout << qopt::render_problem(encoded);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qopt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
