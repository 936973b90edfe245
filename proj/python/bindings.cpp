// Copyright 2026 The qrecip Authors
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qrecip/capacities.hpp"
#include "qrecip/channel_spec.hpp"
#include "qrecip/channels.hpp"
#include "qrecip/oracles.hpp"
#include "qrecip/tables.hpp"

namespace py = pybind11;
using namespace qrecip;

namespace {

CapacityKind parse_kind(const std::string &kind) {
    if (kind == "ua") {
        return CapacityKind::UA;
    }
    if (kind == "ea") {
        return CapacityKind::EA;
    }
    if (kind == "qea") {
        return CapacityKind::Q_EA;
    }
    throw Error(Errc::parse_error, "unknown capacity kind '" + kind + "' (expected ua, ea or qea)");
}

OptimizerOptions make_options(int restarts, double tol, int max_iterations, bool include_center_start) {
    OptimizerOptions opts;
    opts.restarts = restarts;
    opts.tol = tol;
    opts.max_iterations = max_iterations;
    opts.include_center_start = include_center_start;
    return opts;
}

py::dict to_dict(const OptimizationResult &r) {
    py::dict out;
    out["value"] = r.optimum_value;
    out["state"] = r.optimizer_state.matrix();
    out["iterations"] = r.iterations;
    out["converged"] = r.converged;
    out["restarts_used"] = r.restarts_used;
    return out;
}

WccSpec make_wcc(int d, std::vector<double> p) {
    return WccSpec(d, ProbabilityVector(std::move(p)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Depolarizing and Weyl-covariant channels, their capacities and numerical oracles";

    py::exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object type = py::module_::import("qrecip._core").attr("Error");
            py::object inst = type(e.what());
            inst.attr("code") = errc_name(e.code());
            PyErr_SetObject(type.ptr(), inst.ptr());
        }
    });

    py::class_<ChannelRep>(m, "Channel")
        .def(py::init<ComplexMatrix, int, int>(), py::arg("choi"), py::arg("d_in"), py::arg("d_out"))
        .def_property_readonly("choi", &ChannelRep::choi)
        .def_property_readonly("d_in", &ChannelRep::d_in)
        .def_property_readonly("d_out", &ChannelRep::d_out)
        .def_property_readonly("is_cp", &ChannelRep::is_cp)
        .def_property_readonly("is_tp", &ChannelRep::is_tp)
        .def_property_readonly("is_channel", &ChannelRep::is_channel)
        .def_property_readonly("min_choi_eigenvalue", &ChannelRep::min_choi_eigenvalue)
        .def("__repr__", [](const ChannelRep &c) {
            return "<Channel d_in=" + std::to_string(c.d_in()) + " d_out=" + std::to_string(c.d_out()) +
                   (c.is_cp() ? " cp" : " non-cp") + ">";
        });

    // Linear algebra helpers.
    m.def("von_neumann_entropy", py::overload_cast<const ComplexMatrix &>(&von_neumann_entropy), py::arg("rho"));
    m.def("shannon_entropy", [](std::vector<double> p) { return shannon_entropy(ProbabilityVector(std::move(p))); },
          py::arg("p"));
    m.def("trace_norm", &trace_norm, py::arg("a"));
    m.def("partial_trace",
          [](const ComplexMatrix &x, int dim_a, int dim_b, const std::string &keep) {
              if (keep != "A" && keep != "B") {
                  throw Error(Errc::parse_error, "keep must be 'A' or 'B'");
              }
              return partial_trace(x, dim_a, dim_b, keep == "A" ? Subsystem::A : Subsystem::B);
          },
          py::arg("x"), py::arg("dim_a"), py::arg("dim_b"), py::arg("keep"));
    m.def("weyl_operator", [](int d, int x, int y) { return weyl_operator(d, WeylLabel{x, y}); }, py::arg("d"),
          py::arg("x"), py::arg("y"));

    // Channels.
    m.def("identity_channel", &identity_channel, py::arg("d"));
    m.def("completely_depolarizing", &completely_depolarizing, py::arg("d"));
    m.def("depolarizing",
          [](int d, double lambda, bool allow_non_cp) {
              return depolarizing_channel(d, lambda, allow_non_cp ? CpPolicy::allow_non_cp : CpPolicy::enforce);
          },
          py::arg("d"), py::arg("lam"), py::arg("allow_non_cp") = false);
    m.def("wcc", [](int d, std::vector<double> p) { return wcc_channel(make_wcc(d, std::move(p))); }, py::arg("d"),
          py::arg("p"));
    m.def("mixer", &mixer_channel, py::arg("phi"), py::arg("lam"));
    m.def("inversion", &inversion_map, py::arg("d"));
    m.def("from_kraus", &channel_from_kraus, py::arg("kraus"));
    m.def("kraus", &kraus_from_choi, py::arg("phi"));
    m.def("apply", py::overload_cast<const ChannelRep &, const ComplexMatrix &>(&apply_channel), py::arg("phi"),
          py::arg("rho"));
    m.def("apply_extended", &apply_extended, py::arg("phi"), py::arg("rho_ab"), py::arg("dim_a"));
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def("cj_spectrum", &cj_spectrum, py::arg("phi"));
    m.def("complementary_wcc", [](int d, std::vector<double> p) { return complementary_wcc(make_wcc(d, std::move(p))); },
          py::arg("d"), py::arg("p"));
    m.def("dc_as_wcc_distribution",
          [](int d, double lambda) {
              auto p = dc_as_wcc_distribution(d, lambda).weights();
              return std::vector<double>(p.begin(), p.end());
          },
          py::arg("d"), py::arg("lam"));

    // Capacities, in bits.
    m.def("lambda_min_dc", &lambda_min_dc, py::arg("d"));
    m.def("smin_dc", &smin_dc, py::arg("d"), py::arg("lam"));
    m.def("c_ua_dc", &c_ua_dc, py::arg("d"), py::arg("lam"));
    m.def("c_ea_dc", &c_ea_dc, py::arg("d"), py::arg("lam"));
    m.def("c_ea_wcc", [](int d, std::vector<double> p) { return c_ea_wcc(make_wcc(d, std::move(p))); }, py::arg("d"),
          py::arg("p"));
    m.def("q_ea", &q_ea, py::arg("c_ea"));
    m.def("cp_range_wcc",
          [](std::vector<double> q, int d) {
              CPRange r = cp_range_wcc(ProbabilityVector(std::move(q)), d);
              return py::make_tuple(r.lambda_min, r.lambda_max);
          },
          py::arg("q"), py::arg("d"));
    m.def("asymmetry_ratio_dc",
          [](int d, double abs_lambda, const std::string &kind) {
              return asymmetry_ratio_dc(d, abs_lambda, parse_kind(kind));
          },
          py::arg("d"), py::arg("abs_lam"), py::arg("kind"));
    m.def("asymmetry_ratio_wcc_ea",
          [](std::vector<double> q, int d, double abs_lambda) {
              return asymmetry_ratio_wcc_ea(ProbabilityVector(std::move(q)), d, abs_lambda);
          },
          py::arg("q"), py::arg("d"), py::arg("abs_lam"));
    m.def("mover_fidelity", &mover_fidelity, py::arg("d"), py::arg("lam"));
    m.def("avg_output_fidelity", &avg_output_fidelity, py::arg("phi"));
    m.def("evaluate_capacity",
          [](const std::string &spec_json, const std::string &kind) {
              return to_json(evaluate_capacity(parse_channel_spec(spec_json), parse_kind(kind)));
          },
          py::arg("spec_json"), py::arg("kind"), "Returns the capacity report as a JSON string.");

    // Numerical oracles.
    m.def("mutual_information", [](const ComplexMatrix &rho, const ChannelRep &phi) {
        return mutual_information(DensityMatrix(rho), phi);
    }, py::arg("rho"), py::arg("phi"));
    m.def("maximize_mutual_information",
          [](const ChannelRep &phi, std::uint64_t seed, int restarts, double tol, int max_iterations,
             bool include_center_start) {
              Rng rng(seed);
              return to_dict(maximize_mutual_information(
                  phi, make_options(restarts, tol, max_iterations, include_center_start), rng));
          },
          py::arg("phi"), py::arg("seed") = 0, py::arg("restarts") = 4, py::arg("tol") = 1e-8,
          py::arg("max_iterations") = 40000, py::arg("include_center_start") = true);
    m.def("min_output_entropy",
          [](const ChannelRep &phi, std::uint64_t seed, int restarts, double tol, int max_iterations) {
              Rng rng(seed);
              return to_dict(min_output_entropy(phi, make_options(restarts, tol, max_iterations, true), rng));
          },
          py::arg("phi"), py::arg("seed") = 0, py::arg("restarts") = 4, py::arg("tol") = 1e-8,
          py::arg("max_iterations") = 40000);
    m.def("mc_average_fidelity",
          [](const ChannelRep &phi, int samples, std::uint64_t seed) {
              Rng rng(seed);
              FidelityEstimate e = mc_average_fidelity(phi, samples, rng);
              py::dict out;
              out["mean"] = e.mean;
              out["standard_error"] = e.standard_error;
              out["min"] = e.min_sample;
              out["max"] = e.max_sample;
              return out;
          },
          py::arg("phi"), py::arg("samples"), py::arg("seed") = 0);
    m.def("dc_projection_lambda", &dc_projection_lambda, py::arg("phi"));
    m.def("twirl",
          [](const ChannelRep &phi, int samples, std::uint64_t seed) {
              Rng rng(seed);
              TwirlEstimate t = twirl_channel_mc(phi, samples, rng);
              return py::make_tuple(t.channel, t.lambda_hat);
          },
          py::arg("phi"), py::arg("samples"), py::arg("seed") = 0);

    // Tables, in the same CSV layout as the command-line tool.
    m.def("capacity_scan",
          [](int d, int grid) {
              std::vector<std::tuple<double, double, double>> out;
              for (const auto &r : capacity_scan(d, grid)) {
                  out.emplace_back(r.lambda, r.c_ua, r.c_ea);
              }
              return out;
          },
          py::arg("d"), py::arg("grid"));
    m.def("scan_csv", [](int d, int grid) { return scan_csv(capacity_scan(d, grid)); }, py::arg("d"), py::arg("grid"));
    m.def("asymmetry_csv",
          [](std::vector<int> dims, int grid, std::optional<std::string> kind) {
              std::optional<CapacityKind> only;
              if (kind) {
                  only = parse_kind(*kind);
              }
              return asymmetry_csv(asymmetry_table(dims, grid), only);
          },
          py::arg("dims"), py::arg("grid"), py::arg("kind") = py::none());
    m.def("wcc_grid_csv", [](int resolution) { return wcc_grid_csv(wcc_asymmetry_grid(resolution)); },
          py::arg("resolution"));
    m.def("format_number", &format_number, py::arg("v"));
}
