// Copyright 2026 The qengine Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qengine/channels.hpp"
#include "qengine/config.hpp"
#include "qengine/engine.hpp"
#include "qengine/qlinalg.hpp"
#include "qengine/qstate.hpp"
#include "qengine/report.hpp"
#include "qengine/sweep.hpp"
#include "qengine/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace qengine;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const SquareMatrix &m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    ComplexArray out({n, n});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i) {
        for (py::ssize_t j = 0; j < n; ++j) {
            view(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return out;
}

SquareMatrix from_numpy(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
        throw DimensionError("expected a square 2-D array");
    }
    const auto n = static_cast<std::size_t>(a.shape(0));
    const auto *data = a.data();
    return SquareMatrix(n, std::vector<Complex>(data, data + n * n));
}

KrausSet kraus_from_numpy(const std::vector<ComplexArray> &ops,
                          const std::string &label) {
    std::vector<SquareMatrix> mats;
    mats.reserve(ops.size());
    for (const auto &op : ops) {
        mats.push_back(from_numpy(op));
    }
    return KrausSet(std::move(mats), label);
}

std::vector<ComplexArray> kraus_to_numpy(const KrausSet &k) {
    std::vector<ComplexArray> out;
    for (const auto &op : k.ops()) {
        out.push_back(to_numpy(op));
    }
    return out;
}

py::dict stroke_to_dict(const StrokeRecord &s) {
    py::dict d;
    d["name"] = std::string(to_string(s.name));
    d["state"] = to_numpy(s.state_after.matrix());
    d["frequency"] = s.hamiltonian_after.spacing();
    d["energy"] = s.energy_after;
    d["entropy"] = s.entropy_after;
    return d;
}

CycleMode mode_from(const std::string &mode) { return parse_mode(mode); }

CycleParams make_params(const std::string &mode, double b, double gamma,
                        double r) {
    CycleParams p{b, gamma, r, mode_from(mode)};
    p.validate();
    return p;
}

} // namespace

PYBIND11_MODULE(_qengine, m) {
    m.doc() = "Density-matrix simulator for a measurement-driven qubit engine";

    auto base = py::register_exception<Error>(m, "QEngineError", PyExc_ValueError);
    py::register_exception<InvalidCycleError>(m, "InvalidCycleError", base.ptr());
    py::register_exception<NoIsentropicPartnerError>(m, "NoIsentropicPartnerError",
                                                     base.ptr());
    py::register_exception<IncompleteKrausError>(m, "IncompleteKrausError",
                                                 base.ptr());

    // Linear algebra and states.
    m.def(
        "eig_hermitian",
        [](const ComplexArray &a) { return eig_hermitian(from_numpy(a)); },
        py::arg("matrix"), "Ascending eigenvalues of a Hermitian matrix.");
    m.def(
        "gibbs_state",
        [](double b, double frequency) {
            return to_numpy(
                gibbs_state(Hamiltonian::qubit(frequency), ThermalParams(b)).matrix());
        },
        py::arg("b"), py::arg("frequency") = 1.0);
    m.def(
        "mean_energy",
        [](const ComplexArray &rho, double frequency) {
            return mean_energy(DensityMatrix(from_numpy(rho)),
                               Hamiltonian::qubit(frequency));
        },
        py::arg("rho"), py::arg("frequency") = 1.0);
    m.def(
        "von_neumann_entropy",
        [](const ComplexArray &rho) {
            return von_neumann_entropy(DensityMatrix(from_numpy(rho)));
        },
        py::arg("rho"));
    m.def(
        "trace_distance",
        [](const ComplexArray &a, const ComplexArray &b) {
            return trace_distance(DensityMatrix(from_numpy(a)),
                                  DensityMatrix(from_numpy(b)));
        },
        py::arg("a"), py::arg("b"));

    // Channels.
    m.def(
        "first_channel",
        [](double p) { return kraus_to_numpy(first_channel(p)); },
        py::arg("strength"));
    m.def(
        "second_channel",
        [](double q) { return kraus_to_numpy(second_channel(q)); },
        py::arg("strength"));
    m.def("isentropic_strength", &isentropic_strength, py::arg("strength"),
          py::arg("b"));
    m.def("isentropic_threshold", &isentropic_threshold, py::arg("b"));
    m.def(
        "completeness_deviation",
        [](const std::vector<ComplexArray> &ops) {
            return validate_completeness(kraus_from_numpy(ops, "python")).deviation;
        },
        py::arg("ops"));
    m.def(
        "apply_unselective",
        [](const std::vector<ComplexArray> &ops, const ComplexArray &rho) {
            return to_numpy(apply_unselective(kraus_from_numpy(ops, "python"),
                                              DensityMatrix(from_numpy(rho)))
                                .matrix());
        },
        py::arg("ops"), py::arg("rho"));
    m.def(
        "measure_selective",
        [](const std::vector<ComplexArray> &ops, const ComplexArray &rho) {
            py::list out;
            for (const auto &o : measure_selective(kraus_from_numpy(ops, "python"),
                                                   DensityMatrix(from_numpy(rho)))) {
                py::object state = py::none();
                if (o.post_state) {
                    state = to_numpy(o.post_state->matrix());
                }
                out.append(py::make_tuple(o.probability, state));
            }
            return out;
        },
        py::arg("ops"), py::arg("rho"),
        "List of (probability, post_state or None) in Kraus order.");

    // Engine.
    py::class_<EnergyLedger>(m, "EnergyLedger")
        .def_property_readonly("mode",
                               [](const EnergyLedger &l) {
                                   return std::string(to_string(l.params.mode));
                               })
        .def_property_readonly("source",
                               [](const EnergyLedger &l) {
                                   return std::string(to_string(l.source));
                               })
        .def_property_readonly("b", [](const EnergyLedger &l) { return l.params.b; })
        .def_property_readonly("gamma",
                               [](const EnergyLedger &l) { return l.params.gamma; })
        .def_property_readonly("r", [](const EnergyLedger &l) { return l.params.r; })
        .def_property_readonly("strength",
                               [](const EnergyLedger &l) { return l.params.strength(); })
        .def_readonly("q_in", &EnergyLedger::q_in)
        .def_readonly("q_out", &EnergyLedger::q_out)
        .def_readonly("w_api", &EnergyLedger::w_api)
        .def_readonly("w_apii", &EnergyLedger::w_apii)
        .def_readonly("delta", &EnergyLedger::delta)
        .def_readonly("w_ext", &EnergyLedger::w_ext)
        .def_readonly("eta", &EnergyLedger::eta)
        .def_readonly("q_used", &EnergyLedger::q_used)
        .def_readonly("valid", &EnergyLedger::valid)
        .def_readonly("realizable", &EnergyLedger::realizable)
        .def_readonly("eta_defined", &EnergyLedger::eta_defined)
        .def_property_readonly("strokes",
                               [](const EnergyLedger &l) {
                                   py::list out;
                                   for (const auto &s : l.strokes) {
                                       out.append(stroke_to_dict(s));
                                   }
                                   return out;
                               })
        .def("energy_balance", &EnergyLedger::energy_balance)
        .def("__str__", &format_ledger);

    m.def(
        "run_cycle",
        [](const std::string &mode, double b, double gamma, double r,
           bool analytic) {
            const auto p = make_params(mode, b, gamma, r);
            return analytic ? run_analytic(p) : run_numeric(p);
        },
        py::arg("mode"), py::arg("b"), py::arg("gamma"), py::arg("r") = 1.0,
        py::arg("analytic") = false,
        "Run one cycle. mode is 'three' or 'five'.");
    m.def("first_law_residual", &first_law_residual, py::arg("ledger"));
    m.def(
        "gamma_bounds",
        [](const std::string &mode, double r) { return gamma_bounds(mode_from(mode), r); },
        py::arg("mode"), py::arg("r") = 1.0);

    // Harness.
    m.def(
        "sweep_csv",
        [](const std::string &mode, std::vector<double> b_values,
           std::vector<double> gamma_values, std::vector<double> r_values) {
            SweepSpec spec;
            spec.mode = mode_from(mode);
            spec.b_values = std::move(b_values);
            spec.gamma_values = std::move(gamma_values);
            spec.r_values = std::move(r_values);
            return sweep_csv(spec);
        },
        py::arg("mode"), py::arg("b_values"), py::arg("gamma_values"),
        py::arg("r_values") = std::vector<double>{1.0});
    m.def(
        "verify",
        [](std::optional<std::vector<double>> b_grid,
           std::optional<std::vector<double>> gamma_grid,
           std::optional<std::vector<double>> r_grid,
           std::optional<std::string> perturb) {
            VerifyOptions options;
            if (b_grid) {
                options.b_grid = *b_grid;
            }
            if (gamma_grid) {
                options.gamma_grid = *gamma_grid;
            }
            if (r_grid) {
                options.r_grid = *r_grid;
            }
            options.perturb = std::move(perturb);
            const auto report = run_verify(options);
            py::dict out;
            out["checks_run"] = report.checks_run;
            out["failures"] = report.failures.size();
            out["elapsed"] = report.elapsed.count();
            out["ok"] = report.ok();
            out["summary"] = format_verify_report(report);
            return out;
        },
        py::arg("b_grid") = py::none(), py::arg("gamma_grid") = py::none(),
        py::arg("r_grid") = py::none(), py::arg("perturb") = py::none());
}
