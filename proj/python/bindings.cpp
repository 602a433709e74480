// Copyright 2026 The lsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <numbers>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsgate/audit.hpp"
#include "lsgate/sweep.hpp"

namespace py = pybind11;
using namespace lsgate;

namespace {

DensityMatrix five_qubit(const Mat& rho) {
  if (rho.rows() != 32 || rho.cols() != 32) throw std::invalid_argument("expected a 32x32 density matrix");
  return DensityMatrix{rho, 5};
}

SweepConfig config_from(const std::string& text) { return text.empty() ? SweepConfig{} : parse_config(text); }

py::dict budget_dict(const ErrorBudget& b) {
  py::dict d;
  d["eps_th_act"] = b.eps_th_act;
  d["eps_th_spec"] = b.eps_th_spec;
  d["eps_off_act"] = b.eps_off_act;
  d["eps_off_spec"] = b.eps_off_spec;
  d["eps_deph"] = b.eps_deph;
  d["eps_rayleigh"] = b.eps_scatt_rayleigh;
  d["eps_raman"] = b.eps_scatt_raman;
  d["eps_total"] = b.eps_total;
  return d;
}

py::dict witness_dict(const WitnessResult& r) {
  py::dict d;
  d["test_value"] = r.test_value;
  d["witness_value"] = r.witness_value;
  d["conclusive"] = r.conclusive;
  d["expectations"] = r.expectations;
  d["conditioning_probability"] = r.conditioning_probability;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Light-shift gate error budgets, noisy parity-check circuits and GME witnesses";

  py::class_<PauliString>(m, "PauliString")
      .def_static("parse", &PauliString::parse, py::arg("text"), py::arg("n"))
      .def_static("parse_dense", &PauliString::parse_dense)
      .def("__str__", &PauliString::str)
      .def("dense", &PauliString::dense_str)
      .def("weight", &PauliString::weight)
      .def("commutes_with", &PauliString::commutes_with)
      .def("__mul__", [](const PauliString& a, const PauliString& b) { return a * b; })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
      .def("__repr__", [](const PauliString& p) { return "PauliString('" + p.dense_str() + "')"; });

  m.def(
      "conjugate",
      [](const PauliString& p, const std::string& gate_line) {
        return conjugate_through_gate(p, NativeGate::parse(gate_line));
      },
      py::arg("pauli"), py::arg("gate"), "Conjugate a Pauli through one gate given as a text line, e.g. 'zz 1.5707963267948966 0 4'.");

  m.def(
      "geometry",
      [](double tg_us) {
        GateGeometry g = select_geometry(tg_us * 1e-6, TrapLaserConfig::defaults());
        py::dict d;
        d["t_g"] = g.t_g;
        d["beatnote"] = g.beatnote;
        d["delta_com"] = g.delta_com;
        d["delta_zz"] = g.delta_zz;
        d["r"] = g.r;
        d["p"] = g.p;
        d["omega_x_zz"] = g.omega_x_zz;
        return d;
      },
      py::arg("tg_us"), "Closed-loop gate geometry for the default trap; raises if none exists.");

  m.def(
      "budget",
      [](double tg_us, double nbar, const std::string& config_text) {
        SweepConfig c = config_from(config_text);
        c.tg_us.explicit_values = {tg_us};
        c.nbar.explicit_values = {nbar};
        BudgetPoint p = run_budget_grid(c).at(0);
        if (!p.valid) throw std::domain_error(p.error);
        return budget_dict(p.budget);
      },
      py::arg("tg_us"), py::arg("nbar"), py::arg("config_text") = "");

  m.def(
      "gate_fidelity",
      [](const std::string& channel, double p) {
        Mat u = gate_matrix(NativeGate::zz(std::numbers::pi / 2, 0, 1));
        KrausChannel ch = make_channel(parse_channel(channel), p).after(u);
        return avg_gate_fidelity(entanglement_fidelity(ch, u), 4);
      },
      py::arg("channel"), py::arg("p"), "Average gate fidelity of ZZ(pi/2) followed by the channel.");

  m.def(
      "simulate",
      [](const std::string& variant, const std::string& channel, std::vector<double> rates, double p_me) {
        Circuit c = build_parity_circuit(parse_variant(variant));
        NoisePlan plan{parse_channel(channel), std::move(rates), p_me};
        SimResult r = simulate(c, plan);
        py::dict d;
        d["rho"] = r.state.rho;
        d["fidelity"] = state_fidelity(r.state, c.target_state());
        d["kept_probability"] = r.kept_probability;
        return d;
      },
      py::arg("variant"), py::arg("channel") = "depolarizing", py::arg("rates") = std::vector<double>{},
      py::arg("p_me") = 0.0, "Run a parity-check circuit; one rate per two-qubit gate (empty = noiseless).");

  m.def("circuit_text", [](const std::string& v) { return build_parity_circuit(parse_variant(v)).to_text(); });

  m.def(
      "sl_witness",
      [](const Mat& rho, const std::string& label, double p_me) {
        return witness_dict(sl_witness(five_qubit(rho), generator_set(parse_label(label)), p_me));
      },
      py::arg("rho"), py::arg("label") = "NN", py::arg("p_me") = 0.0);

  m.def(
      "cl_witness",
      [](const Mat& rho, bool x_type_circuit, double p_me) {
        ClSummary s = cl_all_bipartitions(five_qubit(rho), x_type_circuit, p_me);
        py::dict d;
        py::list parts;
        for (const auto& p : s.parts) parts.append(witness_dict(p));
        d["parts"] = parts;
        d["conclusive"] = s.conclusive;
        d["worst"] = s.worst;
        return d;
      },
      py::arg("rho"), py::arg("x_type_circuit") = true, py::arg("p_me") = 0.0);

  m.def(
      "fault_table",
      [](const std::string& variant, const std::string& channel, const std::string& label, bool csv) {
        AuditTable t = generate_table(parse_variant(variant), parse_channel(channel), parse_label(label));
        return csv ? t.to_csv() : t.to_markdown();
      },
      py::arg("variant"), py::arg("channel"), py::arg("label") = "NN", py::arg("csv") = false);

  m.def("first_order_slope", [](const std::string& v, const std::string& ch) {
    return first_order_slope(parse_variant(v), parse_channel(ch));
  });

  m.def(
      "default_config", []() { return SweepConfig{}.to_text(); }, "Default settings as config text.");

  m.def(
      "sweep_csv",
      [](const std::string& config_text) {
        SweepResult r;
        {
          py::gil_scoped_release nogil;
          r = run_sweep(config_from(config_text));
        }
        return points_csv(r);
      },
      py::arg("config_text") = "", "Run a sweep and return the points CSV.");
}
