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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qopt/gadgets.hpp"
#include "qopt/text_io.hpp"

namespace py = pybind11;

namespace {

using namespace qopt;

SemanticsMode semantics_from(const std::string& name) {
  if (name == "classical") return SemanticsMode::Classical;
  if (name == "answer-set") return SemanticsMode::AnswerSet;
  throw std::invalid_argument("unknown semantics '" + name + "'");
}

EquivalenceMode mode_from(const std::string& name) {
  if (name == "sel") return EquivalenceMode::Sel;
  if (name == "gen") return EquivalenceMode::Gen;
  if (name == "combined") return EquivalenceMode::Combined;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

Interpretation interp_from(const std::vector<std::string>& names) {
  std::set<Atom> atoms;
  for (const auto& n : names) atoms.insert(Atom(n));
  return Interpretation(std::move(atoms));
}

std::vector<std::string> interp_to(const Interpretation& i) {
  std::vector<std::string> out;
  for (const auto& a : i.atoms()) out.push_back(a.name());
  return out;
}

std::vector<std::vector<std::string>> outcome_list(const OutcomeSet& set) {
  std::vector<std::vector<std::string>> out;
  for (const auto& i : set.members) out.push_back(interp_to(i));
  return out;
}

Alphabet alphabet_for(const Problem& p, const Problem* q,
                      const std::vector<std::string>& extra) {
  std::set<Atom> atoms = atoms_of(p);
  if (q) {
    const auto qa = atoms_of(*q);
    atoms.insert(qa.begin(), qa.end());
  }
  for (const auto& n : extra) atoms.insert(Atom(n));
  return Alphabet(atoms);
}

py::dict verdict_dict(const Verdict& v, const std::string& mode,
                      const std::string& interval,
                      const std::string& semantics, bool gen_mode) {
  py::dict out;
  out["mode"] = mode;
  out["interval"] = gen_mode ? py::object(py::none()) : py::cast(interval);
  out["semantics"] = semantics;
  out["equivalent"] = v.equivalent;
  out["failed_condition"] =
      v.failed_condition ? py::cast(*v.failed_condition)
                         : py::object(py::none());
  if (v.witness.empty()) {
    out["witness"] = py::none();
  } else {
    std::vector<std::vector<std::string>> w;
    for (const auto& i : v.witness) w.push_back(interp_to(i));
    out["witness"] = py::cast(w);
  }
  out["separating_context"] =
      v.separating_context ? py::cast(render_problem(*v.separating_context))
                           : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(qopt, m) {
  m.doc() =
      "Qualitative optimization problems: outcomes, preferred outcomes, and "
      "strong-equivalence checking for classical and answer-set semantics.";

  py::class_<Problem>(m, "Problem")
      .def("__str__", [](const Problem& p) { return render_problem(p); })
      .def("__eq__", [](const Problem& p, const Problem& q) { return p == q; })
      .def("__repr__", [](const Problem& p) {
        return "Problem(\"\"\"" + render_problem(p) + "\"\"\")";
      });

  m.def("parse_problem",
        [](const std::string& text) { return parse_problem(text); },
        py::arg("text"), "Parse a problem from its text form.");

  m.def("render_problem",
        [](const Problem& p) { return render_problem(p); }, py::arg("problem"),
        "Canonical text form of a problem.");

  m.def(
      "models",
      [](const Problem& p, const std::string& semantics,
         const std::vector<std::string>& alphabet) {
        return outcome_list(outcomes(p, semantics_from(semantics),
                                     alphabet_for(p, nullptr, alphabet)));
      },
      py::arg("problem"), py::arg("semantics") = "classical",
      py::arg("alphabet") = std::vector<std::string>{},
      "Outcome set as a list of sorted atom lists.");

  m.def(
      "optimal",
      [](const Problem& p, const std::string& semantics,
         const std::vector<std::string>& alphabet) {
        return outcome_list(optimal(p, semantics_from(semantics),
                                    alphabet_for(p, nullptr, alphabet)));
      },
      py::arg("problem"), py::arg("semantics") = "classical",
      py::arg("alphabet") = std::vector<std::string>{},
      "Preferred outcomes as a list of sorted atom lists.");

  m.def(
      "degrees",
      [](const Problem& p, const std::vector<std::string>& interp) {
        const Interpretation i = interp_from(interp);
        std::vector<std::tuple<int, std::string, int>> out;
        for (const auto& r : p.selector.rules()) {
          out.emplace_back(r.rank(), render_rule(r),
                           satisfaction_degree(i, r));
        }
        return out;
      },
      py::arg("problem"), py::arg("interp"),
      "Per-rule (rank, rule text, satisfaction degree).");

  m.def(
      "compare",
      [](const Problem& p, const Problem& q, const std::string& mode,
         const std::string& interval, const std::string& semantics,
         bool witness, const std::vector<std::string>& alphabet) {
        const auto md = mode_from(mode);
        const auto iv = parse_interval(interval);
        const auto sm = semantics_from(semantics);
        const Alphabet a = alphabet_for(p, &q, alphabet);
        Verdict v;
        if (witness) {
          v = decide_with_context(p, q, md, iv, sm, a);
        } else {
          switch (md) {
            case EquivalenceMode::Sel:
              v = sel_equivalent(p, q, iv, sm, a);
              break;
            case EquivalenceMode::Gen:
              v = gen_equivalent(p, q, sm, a);
              break;
            case EquivalenceMode::Combined:
              v = combined_equivalent(p, q, iv, sm, a);
              break;
          }
        }
        return verdict_dict(v, mode, interval, semantics,
                            md == EquivalenceMode::Gen);
      },
      py::arg("p"), py::arg("q"), py::arg("mode"),
      py::arg("interval") = "1..inf", py::arg("semantics") = "classical",
      py::arg("witness") = true,
      py::arg("alphabet") = std::vector<std::string>{},
      "Strong-equivalence verdict as a dict; with witness=True a negative "
      "verdict carries a verified separating context.");

  m.def(
      "verify_context",
      [](const Problem& p, const Problem& q, const std::string& context,
         const std::string& semantics) {
        Verdict v;
        v.equivalent = false;
        v.failed_condition = "external";
        v.separating_context = parse_problem(context);
        const Alphabet a = alphabet_for(p, &q, {});
        return verify_verdict(p, q, v, semantics_from(semantics), a);
      },
      py::arg("p"), py::arg("q"), py::arg("context"),
      py::arg("semantics") = "classical",
      "True when the context problem separates p from q.");

  m.def(
      "oracle",
      [](const Problem& p, const Problem& q, const std::string& mode,
         const std::string& interval, const std::string& semantics,
         std::size_t budget, std::uint64_t seed) {
        const OracleReport r =
            oracle_check(p, q, mode_from(mode), parse_interval(interval),
                         semantics_from(semantics), alphabet_for(p, &q, {}),
                         budget, seed);
        py::dict out;
        out["agreed"] = r.agreed;
        out["checked"] = r.checked;
        if (r.first_disagreement) {
          py::dict d;
          d["context"] = render_problem(r.first_disagreement->context);
          d["provenance"] = to_string(r.first_disagreement->provenance);
          d["pi_p"] = outcome_list(r.first_disagreement->pi_p);
          d["pi_q"] = outcome_list(r.first_disagreement->pi_q);
          out["first_disagreement"] = d;
        } else {
          out["first_disagreement"] = py::none();
        }
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("mode"),
      py::arg("interval") = "1..inf", py::arg("semantics") = "classical",
      py::arg("budget") = 50, py::arg("seed") = 1,
      "Brute-force context probe; reports the first disagreement found.");

  m.def(
      "encode_min_models",
      [](const Problem& p, const std::vector<std::string>& alphabet) {
        return encode_min_models(p.generator,
                                 alphabet_for(Problem{p.generator, {}},
                                              nullptr, alphabet));
      },
      py::arg("problem"), py::arg("alphabet") = std::vector<std::string>{},
      "Encode the generator (NNF) so preferred outcomes are its minimal "
      "models.");
}
