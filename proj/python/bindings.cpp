// Copyright 2026 The colotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "colotto/adversary_response.hpp"
#include "colotto/errors.hpp"
#include "colotto/lotto_core.hpp"
#include "colotto/report.hpp"
#include "colotto/sweep.hpp"
#include "colotto/transfer_engine.hpp"

namespace py = pybind11;
using namespace colotto;

namespace {

GameParams game(double phi1, double phi2, double x1, double x2, double xa) {
  return {phi1, phi2, x1, x2, xa};
}

py::dict payoff_dict(const PayoffProfile& p) {
  py::dict d;
  d["u1"] = p.u1;
  d["u2"] = p.u2;
  d["u_adversary"] = p.u_adversary;
  d["u12"] = p.alliance();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equilibrium and transfer analysis for coalitional Lotto games";
  m.attr("__version__") = kToolVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError",
                                             PyExc_RuntimeError);

  py::class_<GameParams>(m, "Game")
      .def(py::init(&game), py::arg("phi1"), py::arg("phi2"), py::arg("x1"),
           py::arg("x2"), py::arg("adversary_budget") = 1.0)
      .def_readwrite("phi1", &GameParams::phi1)
      .def_readwrite("phi2", &GameParams::phi2)
      .def_readwrite("x1", &GameParams::x1)
      .def_readwrite("x2", &GameParams::x2)
      .def_readwrite("adversary_budget", &GameParams::adversary_budget)
      .def("__repr__", [](const GameParams& g) {
        std::ostringstream os;
        os << "Game(phi1=" << g.phi1 << ", phi2=" << g.phi2 << ", x1=" << g.x1
           << ", x2=" << g.x2 << ", adversary_budget=" << g.adversary_budget
           << ")";
        return os.str();
      });

  m.def(
      "lotto_payoff",
      [](double x, double xa, double phi) {
        const LottoPayoff p = equilibrium_payoff({x, xa, phi});
        return py::make_tuple(p.player, p.adversary);
      },
      py::arg("player_budget"), py::arg("adversary_budget"),
      py::arg("total_value"),
      "(player, adversary) equilibrium payoffs of a single Lotto game.");

  m.def(
      "adversary_split",
      [](const GameParams& g) {
        const auto [n, o] = normalize(g);
        const AdversaryResponse r = optimal_split(n);
        py::dict d;
        d["case"] = case_number(r.case_label);
        d["x_a1"] = o.swapped ? r.x_a2 : r.x_a1;
        d["x_a2"] = o.swapped ? r.x_a1 : r.x_a2;
        return d;
      },
      py::arg("game"),
      "Optimal adversary split as fractions of its budget, in the caller's "
      "player order.");

  m.def(
      "stage_payoffs",
      [](const GameParams& g) {
        validate(g);
        GameParams n = g;
        n.x1 /= g.adversary_budget;
        n.x2 /= g.adversary_budget;
        n.adversary_budget = 1.0;
        return payoff_dict(stage_payoffs(n));
      },
      py::arg("game"), "Equilibrium payoffs at tau = 0.");
  m.def(
      "payoffs_at",
      [](const GameParams& g, double tau, double beta) {
        return payoff_dict(payoffs_at(g, {tau, beta}));
      },
      py::arg("game"), py::arg("tau"), py::arg("beta"));

  m.def("mb_beta_threshold", &mb_beta_threshold, py::arg("game"));
  m.def("mb_exists", &mb_exists, py::arg("game"), py::arg("beta"));
  m.def(
      "mb_interval",
      [](const GameParams& g, double beta) -> py::object {
        const auto in = mb_interval(g, beta);
        if (!in) return py::none();
        return py::make_tuple(in->low, in->high);
      },
      py::arg("game"), py::arg("beta"));
  m.def("in_g_dagger", &in_g_dagger, py::arg("game"), py::arg("beta"));
  m.def("alliance_beta_threshold", &alliance_beta_threshold, py::arg("game"));
  m.def(
      "alliance_optimal",
      [](const GameParams& g, double beta) {
        const AllianceOptimum o = alliance_optimal(g, beta);
        return py::make_tuple(o.tau, o.gain);
      },
      py::arg("game"), py::arg("beta"),
      "(tau_dagger, alliance gain over tau = 0).");

  m.def(
      "analyze_json",
      [](const GameParams& g, double beta) {
        return to_json(make_report(g, beta)).dump();
      },
      py::arg("game"), py::arg("beta"),
      "The `colotto analyze` report as a JSON string.");

  m.def(
      "payoff_curve",
      [](const GameParams& g, double beta, double tau_min, double tau_max,
         int steps) {
        py::list rows;
        for (const auto& r : sweep::payoff_curves(g, beta, tau_min, tau_max, steps)) {
          rows.append(py::make_tuple(r.tau, r.du1, r.du2, r.u12));
        }
        return rows;
      },
      py::arg("game"), py::arg("beta"), py::arg("tau_min"), py::arg("tau_max"),
      py::arg("steps") = 1001, "Rows (tau, du1, du2, u12).");
}
