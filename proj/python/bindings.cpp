// Copyright 2026 The Trine Discrimination Authors
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

#include <array>
#include <optional>
#include <string>

#include "trine/errors.hpp"
#include "trine/max_confidence.hpp"
#include "trine/min_error.hpp"
#include "trine/oracle.hpp"
#include "trine/report_io.hpp"
#include "trine/simulate.hpp"
#include "trine/trine.hpp"

namespace py = pybind11;
using namespace trine;

namespace {

using Triple = std::array<double, 3>;

Priors make_priors(const Triple& q) { return canonicalize_priors(q[0], q[1], q[2]); }

// Results cross the boundary as the same JSON documents the CLI prints.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Measurement strategy_measurement(const Priors& pr, const std::string& strategy) {
  if (strategy == "optimal") return optimal_measurement(pr).measurement;
  if (strategy == "trine") return trine_measurement();
  if (strategy == "antitrine") return antitrine_measurement();
  if (strategy == "max-confidence") return confidence_report(pr).measurement;
  throw InvalidInputError("unknown strategy '" + strategy + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal discrimination of the qubit trine states";
  m.attr("__version__") = TRINE_VERSION;

  auto base = py::register_exception<TrineError>(m, "TrineError", PyExc_ValueError);
  py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PureStateError>(m, "PureStateError", base.ptr());
  py::register_exception<RegionError>(m, "RegionError", base.ptr());
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());

  m.def("optimal", [](const Triple& q) { return to_python(optimal_measurement(make_priors(q))); },
        py::arg("priors"), "Minimum-error measurement and success probability.");
  m.def("optimal_p_delta",
        [](double p, double delta) { return to_python(optimal_measurement(priors_from_p_delta(p, delta))); },
        py::arg("p"), py::arg("delta"));
  m.def("boundary_determinant", [](const Triple& q) { return boundary_determinant(make_priors(q)); },
        py::arg("priors"), "Negative where the three-outcome POVM is optimal.");
  m.def("critical_delta", &critical_delta, py::arg("p"));
  m.def("max_delta", &max_delta, py::arg("p"));

  m.def("confidence", [](const Triple& q) { return to_python(confidence_report(make_priors(q))); },
        py::arg("priors"), "Maximum-confidence measurement.");
  m.def("min_error_confidence", [](const Triple& q) { return min_error_confidence(make_priors(q)); },
        py::arg("priors"));

  m.def(
      "oracle_min_error",
      [](const Triple& q, int resolution, int refinements) {
        return to_python(brute_force_min_error(make_priors(q), resolution, refinements));
      },
      py::arg("priors"), py::arg("resolution") = kOracleDefaultResolution,
      py::arg("refinements") = kOracleDefaultRefinements);

  m.def(
      "simulate",
      [](const Triple& q, std::uint64_t shots, std::uint64_t seed, const std::string& strategy,
         const std::optional<std::string>& outcome) {
        const Priors pr = make_priors(q);
        const Measurement meas = strategy_measurement(pr, strategy);
        EmpiricalResult r;
        {
          py::gil_scoped_release release;
          r = outcome ? estimate_confidence(pr, meas, Label::parse(*outcome), shots, seed)
                      : estimate_success(pr, meas, shots, seed);
        }
        return to_python(r);
      },
      py::arg("priors"), py::arg("shots") = 100000, py::arg("seed") = 1, py::arg("strategy") = "optimal",
      py::arg("outcome") = py::none());
}
