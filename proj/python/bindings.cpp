// Copyright 2026 The ioncomb Authors
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ioncomb/comb_state.h"
#include "ioncomb/dynamics.h"
#include "ioncomb/error_analysis.h"
#include "ioncomb/errors.h"
#include "ioncomb/ideal_code.h"
#include "ioncomb/numerics.h"
#include "ioncomb/params.h"
#include "ioncomb/physical_limits.h"
#include "ioncomb/wavefunction.h"

namespace py = pybind11;
using namespace ioncomb;

namespace {

py::array_t<std::complex<double>> amplitudes_array(const Wavefunction &wf) {
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(wf.size()));
    auto view = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < wf.size(); ++i) {
        view(static_cast<py::ssize_t>(i)) = wf.amplitudes[i];
    }
    return out;
}

py::array_t<double> coordinates_array(const Wavefunction &wf) {
    py::array_t<double> out(static_cast<py::ssize_t>(wf.size()));
    auto view = out.mutable_unchecked<1>();
    for (std::size_t i = 0; i < wf.size(); ++i) {
        view(static_cast<py::ssize_t>(i)) = wf.coordinate(i);
    }
    return out;
}

Sign parse_sign(const std::string &s) {
    if (s == "+" || s == "plus") {
        return Sign::plus;
    }
    if (s == "-" || s == "minus") {
        return Sign::minus;
    }
    throw DomainError("sign must be '+' or '-'");
}

Codeword to_codeword(const py::object &label) {
    if (py::isinstance<Codeword>(label)) {
        return label.cast<Codeword>();
    }
    return parse_codeword(py::str(label).cast<std::string>());
}

TruncationPolicy plan_or(const EncodingParams &params, const std::optional<TruncationPolicy> &trunc) {
    return trunc ? *trunc : truncation_plan(params);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Comb-state codewords of a trapped ion (C++ core).";

    auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);
    py::register_exception<DegenerateStateError>(m, "DegenerateStateError", PyExc_RuntimeError);

    py::class_<EncodingParams>(m, "EncodingParams")
        .def(py::init([](double alpha, double beta, double r, double phi, double k, double tau) {
                 return EncodingParams{alpha, beta, r, phi, k, tau};
             }),
             py::arg("alpha") = 0.0, py::arg("beta") = 0.0, py::arg("r") = 0.0, py::arg("phi") = 0.0,
             py::arg("k") = 0.5, py::arg("tau") = std::numbers::pi)
        .def_readwrite("alpha", &EncodingParams::alpha)
        .def_readwrite("beta", &EncodingParams::beta)
        .def_readwrite("r", &EncodingParams::r)
        .def_readwrite("phi", &EncodingParams::phi)
        .def_readwrite("k", &EncodingParams::k)
        .def_readwrite("tau", &EncodingParams::tau)
        .def_property_readonly("gamma", &EncodingParams::gamma)
        .def("is_comb_regime", &EncodingParams::is_comb_regime)
        .def("with_beta", &EncodingParams::with_beta)
        .def("__repr__", [](const EncodingParams &p) { return "EncodingParams(" + p.str() + ")"; });

    py::class_<TruncationPolicy>(m, "TruncationPolicy")
        .def_readonly("tolerance", &TruncationPolicy::tolerance)
        .def_readonly("n_max", &TruncationPolicy::n_max)
        .def_readonly("m_min", &TruncationPolicy::m_min)
        .def_readonly("m_max", &TruncationPolicy::m_max)
        .def_readonly("p_cut", &TruncationPolicy::p_cut)
        .def_readonly("x_lo", &TruncationPolicy::x_lo)
        .def_readonly("x_hi", &TruncationPolicy::x_hi)
        .def_readonly("grid_step", &TruncationPolicy::grid_step)
        .def_readonly("p_step", &TruncationPolicy::p_step)
        .def_property_readonly("x_count", &TruncationPolicy::x_count)
        .def_property_readonly("p_count", &TruncationPolicy::p_count);

    m.def("truncation_plan", py::overload_cast<const EncodingParams &, double>(&truncation_plan), py::arg("params"),
          py::arg("tolerance") = kDefaultTolerance);

    py::enum_<Axis>(m, "Axis").value("position", Axis::position).value("momentum", Axis::momentum);

    py::class_<Wavefunction>(m, "Wavefunction")
        .def_readonly("axis", &Wavefunction::axis)
        .def_readonly("start", &Wavefunction::start)
        .def_readonly("step", &Wavefunction::step)
        .def_readonly("normalized", &Wavefunction::normalized)
        .def_property_readonly("amplitudes", &amplitudes_array)
        .def_property_readonly("coordinates", &coordinates_array)
        .def("__len__", &Wavefunction::size)
        .def("norm_squared", [](const Wavefunction &wf) { return norm_squared(wf); });

    m.def("overlap", &overlap);
    m.def("fourier_transform", &fourier_transform, py::arg("position"), py::arg("p_start"), py::arg("p_step"),
          py::arg("count"));

    py::enum_<Codeword>(m, "Codeword")
        .value("zero", Codeword::zero)
        .value("one", Codeword::one)
        .value("plus", Codeword::plus)
        .value("minus", Codeword::minus);

    py::class_<SyndromeResult>(m, "SyndromeResult")
        .def_readonly("residue", &SyndromeResult::residue)
        .def_readonly("nearest_multiple", &SyndromeResult::nearest_multiple)
        .def_readonly("correctable", &SyndromeResult::correctable);
    m.def("syndrome", &syndrome, py::arg("value"), py::arg("spacing"), py::arg("offset") = 0.0);
    m.def("correct_shift", &correct_shift, py::arg("value"), py::arg("spacing"), py::arg("offset") = 0.0);

    m.def("zero_outcome_density", &zero_outcome_density, py::arg("alpha"), py::arg("r"),
          py::arg("tolerance") = kDefaultTolerance);
    m.def(
        "nu_weights",
        [](double alpha, double tolerance) { return nu_weights(alpha, tolerance).values; }, py::arg("alpha"),
        py::arg("tolerance") = kDefaultTolerance);
    m.def(
        "codeword",
        [](const py::object &label, const EncodingParams &params, const std::string &axis,
           const std::optional<TruncationPolicy> &trunc) {
            const Axis a = axis == "p" || axis == "momentum" ? Axis::momentum : Axis::position;
            return codeword(to_codeword(label), params, plan_or(params, trunc), a);
        },
        py::arg("label"), py::arg("params"), py::arg("axis") = "x", py::arg("trunc") = py::none());
    m.def(
        "psi_pm",
        [](const std::string &sign, const EncodingParams &params, const std::optional<TruncationPolicy> &trunc) {
            return psi_pm(parse_sign(sign), params, plan_or(params, trunc));
        },
        py::arg("sign"), py::arg("params"), py::arg("trunc") = py::none());
    m.def(
        "codeword_overlap",
        [](const EncodingParams &params, const std::optional<TruncationPolicy> &trunc) {
            return codeword_overlap(params, plan_or(params, trunc)).real();
        },
        py::arg("params"), py::arg("trunc") = py::none());

    m.def(
        "conditional_wavefunction",
        [](const EncodingParams &params, double X, bool normalize, const std::optional<TruncationPolicy> &trunc) {
            return conditional_wavefunction(params, X, plan_or(params, trunc), normalize);
        },
        py::arg("params"), py::arg("X"), py::arg("normalize") = true, py::arg("trunc") = py::none());
    m.def(
        "homodyne_density",
        [](const EncodingParams &params, double X, const std::optional<TruncationPolicy> &trunc) {
            return homodyne_density(params, X, plan_or(params, trunc));
        },
        py::arg("params"), py::arg("X"), py::arg("trunc") = py::none());
    m.def(
        "window_acceptance",
        [](const EncodingParams &params, double X_lo, double X_hi, int error_samples) {
            const WindowAcceptance w = window_acceptance(params, X_lo, X_hi, truncation_plan(params), error_samples);
            return py::make_tuple(w.probability, w.mean_error_bound);
        },
        py::arg("params"), py::arg("X_lo"), py::arg("X_hi"), py::arg("error_samples") = 9,
        "Returns (probability, mean_error_bound).");

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("p_x_exact", &ErrorReport::p_x_exact)
        .def_readonly("p_x_bound", &ErrorReport::p_x_bound)
        .def_readonly("p_p_plus", &ErrorReport::p_p_plus)
        .def_readonly("p_p_minus", &ErrorReport::p_p_minus)
        .def_readonly("p_max", &ErrorReport::p_max)
        .def_readonly("success_probability", &ErrorReport::success_probability);

    m.def(
        "px_exact", [](const EncodingParams &params) { return px_exact(params, truncation_plan(params)); },
        py::arg("params"));
    m.def(
        "px_bound", [](const EncodingParams &params, bool allow) { return px_bound(params, allow); },
        py::arg("params"), py::arg("allow_outside_validity") = false);
    m.def(
        "pp",
        [](const std::string &sign, const EncodingParams &params) {
            return pp(parse_sign(sign), params, truncation_plan(params));
        },
        py::arg("sign"), py::arg("params"));
    m.def(
        "pp_direct",
        [](const std::string &sign, const EncodingParams &params) {
            return pp_direct(parse_sign(sign), params, truncation_plan(params));
        },
        py::arg("sign"), py::arg("params"));
    m.def(
        "p_max", [](const EncodingParams &params) { return p_max(params, truncation_plan(params)); },
        py::arg("params"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("alpha", &SweepRow::alpha)
        .def_readonly("r", &SweepRow::r)
        .def_readonly("p_p", &SweepRow::p_p)
        .def_readonly("fit_residual", &SweepRow::fit_residual)
        .def_readonly("error", &SweepRow::error);
    py::class_<ExponentialFit>(m, "ExponentialFit")
        .def_readonly("r", &ExponentialFit::r)
        .def_readonly("amplitude", &ExponentialFit::amplitude)
        .def_readonly("decay_rate", &ExponentialFit::decay_rate)
        .def_readonly("r_squared", &ExponentialFit::r_squared)
        .def_readonly("direct_amplitude", &ExponentialFit::direct_amplitude)
        .def_readonly("direct_decay_rate", &ExponentialFit::direct_decay_rate)
        .def_readonly("direct_r_squared", &ExponentialFit::direct_r_squared)
        .def_readonly("points", &ExponentialFit::points);
    m.def(
        "sweep",
        [](double alpha_lo, double alpha_hi, int n_points, const std::vector<double> &r_list, double tolerance,
           int threads) {
            SweepResult res;
            {
                py::gil_scoped_release release;
                res = sweep(alpha_lo, alpha_hi, n_points, r_list, tolerance, threads);
            }
            return py::make_tuple(res.rows, res.fits);
        },
        py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("n_points"), py::arg("r_list"),
        py::arg("tolerance") = kDefaultTolerance, py::arg("threads") = 1, "Returns (rows, fits).");
    m.def("fit_exponential", &fit_exponential, py::arg("alpha"), py::arg("p"));

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double mass, double omega_a, double g0, double lambda_c) {
                 return PhysicalParams{mass, omega_a, g0, lambda_c};
             }),
             py::arg("mass"), py::arg("omega_a"), py::arg("g0"), py::arg("lambda_c"))
        .def_readwrite("mass", &PhysicalParams::mass)
        .def_readwrite("omega_a", &PhysicalParams::omega_a)
        .def_readwrite("g0", &PhysicalParams::g0)
        .def_readwrite("lambda_c", &PhysicalParams::lambda_c)
        .def_property_readonly("k_c", &PhysicalParams::k_c)
        .def_static("calcium_example", &PhysicalParams::calcium_example);

    py::class_<LimitsReport>(m, "LimitsReport")
        .def_readonly("xi", &LimitsReport::xi)
        .def_readonly("beta_max", &LimitsReport::beta_max)
        .def_readonly("alpha_max_LD", &LimitsReport::alpha_max_LD)
        .def_readonly("alpha_max_detuning", &LimitsReport::alpha_max_detuning)
        .def_readonly("alpha_limit", &LimitsReport::alpha_limit)
        .def_readonly("delta", &LimitsReport::delta)
        .def_readonly("g", &LimitsReport::g);
    py::class_<RegimeViolation>(m, "RegimeViolation")
        .def_readonly("quantity", &RegimeViolation::quantity)
        .def_readonly("bound", &RegimeViolation::bound)
        .def_readonly("value", &RegimeViolation::value)
        .def_readonly("limit", &RegimeViolation::limit)
        .def_readonly("reference", &RegimeViolation::reference);

    m.def("lamb_dicke_xi", &lamb_dicke_xi);
    m.def("limits", &limits);
    m.def("alpha_max_of_beta", &alpha_max_of_beta);
    m.def("validate_regime", &validate_regime, py::arg("params"), py::arg("phys"), py::arg("beta_tolerance") = 0.05);
}
