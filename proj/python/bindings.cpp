// Copyright 2026 The qmentropy Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qme/covering.hpp"
#include "qme/dynamics.hpp"
#include "qme/entropy.hpp"
#include "qme/parallel.hpp"
#include "qme/point_cloud.hpp"
#include "qme/quasimetric.hpp"
#include "qme/serialize.hpp"
#include "qme/theorems.hpp"

namespace py = pybind11;

namespace {

py::object ToPython(const qme::Json& j) {
  switch (j.type()) {
    case qme::Json::value_t::null:
      return py::none();
    case qme::Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case qme::Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case qme::Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case qme::Json::value_t::number_float:
      return py::float_(j.get<double>());
    case qme::Json::value_t::string:
      return py::str(j.get<std::string>());
    case qme::Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(ToPython(v));
      return out;
    }
    case qme::Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = ToPython(v);
      return out;
    }
    default:
      throw qme::Error("unsupported JSON value");
  }
}

qme::Variant ParseVariant(const std::string& s) {
  if (s == "SymAND") return qme::Variant::SymAnd;
  if (s == "AsymOR") return qme::Variant::AsymOr;
  throw qme::Error("unknown variant '" + s + "' (SymAND or AsymOR)");
}

qme::EntropyVariant ParseEntropyVariant(const std::string& s) {
  for (auto v : {qme::EntropyVariant::HPrime, qme::EntropyVariant::HDoublePrime,
                 qme::EntropyVariant::HMeanMetric, qme::EntropyVariant::HMaxMetric}) {
    if (qme::to_string(v) == s) return v;
  }
  throw qme::Error("unknown entropy variant '" + s + "'");
}

qme::SolverOptions Solver(const std::string& mode, std::size_t exact_threshold) {
  qme::SolverOptions o;
  if (mode == "auto") {
    o.mode = qme::SolveMode::Auto;
  } else if (mode == "exact") {
    o.mode = qme::SolveMode::Exact;
  } else if (mode == "greedy") {
    o.mode = qme::SolveMode::Greedy;
  } else {
    throw qme::Error("unknown solver mode '" + mode + "' (auto, exact or greedy)");
  }
  o.exact_threshold = exact_threshold;
  return o;
}

qme::EstimateOptions Estimate(const std::string& solver, std::size_t exact_threshold,
                              std::size_t n_burn, double saturation_fraction) {
  qme::EstimateOptions o;
  o.grid.solver = Solver(solver, exact_threshold);
  o.n_burn = n_burn;
  o.saturation_fraction = saturation_fraction;
  return o;
}

}  // namespace

PYBIND11_MODULE(_qme, m) {
  m.doc() = "Topological entropy estimates on finite samples of quasi-metric spaces.";
  py::register_exception<qme::Error>(m, "QmeError", PyExc_ValueError);

  py::class_<qme::QuasiMetric>(m, "QuasiMetric")
      .def_static("example1_line", &qme::QuasiMetric::example1_line)
      .def_static("euclidean", &qme::QuasiMetric::euclidean)
      .def_static("circle_arc", &qme::QuasiMetric::circle_arc)
      .def_static("weighted_asym", &qme::QuasiMetric::weighted_asym, py::arg("alpha"), py::arg("beta"))
      .def_static("block_prefix", &qme::QuasiMetric::block_prefix)
      .def_static("block_prefix_asym", &qme::QuasiMetric::block_prefix_asym)
      .def_static(
          "matrix",
          [](const std::vector<std::vector<double>>& rows) {
            std::vector<double> flat;
            for (const auto& r : rows) {
              if (r.size() != rows.size()) throw qme::Error("matrix must be square");
              flat.insert(flat.end(), r.begin(), r.end());
            }
            return qme::QuasiMetric::matrix_backed(std::move(flat), rows.size());
          },
          py::arg("rows"))
      .def("__call__",
           [](const qme::QuasiMetric& e, const std::vector<double>& x, const std::vector<double>& y) {
             return e(x, y);
           })
      .def("symmetrize_mean", [](const qme::QuasiMetric& e) { return qme::symmetrize_mean(e); })
      .def("symmetrize_max", [](const qme::QuasiMetric& e) { return qme::symmetrize_max(e); })
      .def("__repr__", [](const qme::QuasiMetric& e) { return "<QuasiMetric " + e.description() + ">"; });

  py::class_<qme::PointCloud>(m, "PointCloud")
      .def_static("grid_1d", &qme::PointCloud::grid_1d, py::arg("lo"), py::arg("hi"), py::arg("count"))
      .def_static("circle_grid", &qme::PointCloud::circle_grid, py::arg("count"))
      .def_static("symbol_blocks", &qme::PointCloud::symbol_blocks, py::arg("alphabet"), py::arg("length"))
      .def_static("points", &qme::PointCloud::custom, py::arg("points"))
      .def_static("indices", &qme::PointCloud::indices, py::arg("count"))
      .def("__len__", &qme::PointCloud::size)
      .def_property_readonly("dim", &qme::PointCloud::dim)
      .def("point",
           [](const qme::PointCloud& c, std::size_t id) {
             if (id >= c.size()) throw py::index_error("point id out of range");
             auto p = c.point(id);
             return std::vector<double>(p.begin(), p.end());
           })
      .def("__repr__", [](const qme::PointCloud& c) { return "<PointCloud " + c.describe() + ">"; });

  py::class_<qme::MapSpec>(m, "MapSpec")
      .def_static("identity", &qme::MapSpec::identity)
      .def_static("doubling", &qme::MapSpec::doubling)
      .def_static("tent", &qme::MapSpec::tent, py::arg("slope") = 2.0)
      .def_static("logistic", &qme::MapSpec::logistic, py::arg("r") = 4.0)
      .def_static("shift_left", &qme::MapSpec::shift_left)
      .def_static("affine", &qme::MapSpec::affine, py::arg("a"), py::arg("b"))
      .def("with_uniform_continuity", &qme::MapSpec::with_uniform_continuity, py::arg("declared"))
      .def("iterate", [](const qme::MapSpec& t, std::size_t k) { return qme::iterate_map(t, k); })
      .def("__call__",
           [](const qme::MapSpec& t, std::vector<double> x) {
             t.apply(x);
             return x;
           })
      .def_property_readonly("uniformly_continuous", &qme::MapSpec::declared_uniformly_continuous)
      .def("__repr__", [](const qme::MapSpec& t) { return "<MapSpec " + t.description() + ">"; });

  m.def("set_threads", &qme::set_max_threads, py::arg("threads"));
  m.def("threads", &qme::max_threads);

  m.def(
      "check_axioms",
      [](const qme::QuasiMetric& e, const qme::PointCloud& cloud, std::uint64_t budget, std::uint64_t seed) {
        return ToPython(qme::to_json(qme::check_axioms(e, cloud, budget, seed)));
      },
      py::arg("metric"), py::arg("cloud"), py::arg("triple_budget") = 2'000'000, py::arg("seed") = 0);

  m.def(
      "bowen_distance",
      [](const qme::QuasiMetric& e, const qme::MapSpec& t, const qme::PointCloud& cloud, std::size_t x,
         std::size_t y, std::size_t n) {
        if (x >= cloud.size() || y >= cloud.size()) throw py::index_error("point id out of range");
        const auto orbits = qme::build_orbits(t, cloud, n);
        return qme::bowen_distance(e, orbits, x, y, n);
      },
      py::arg("metric"), py::arg("map"), py::arg("cloud"), py::arg("x"), py::arg("y"), py::arg("n"));

  m.def(
      "counts",
      [](const qme::QuasiMetric& e, const qme::MapSpec& t, const qme::PointCloud& cloud, std::size_t n,
         double epsilon, const std::string& variant, const std::string& solver, std::size_t exact_threshold) {
        const auto orbits = qme::build_orbits(t, cloud, n);
        const auto graph = qme::build_relation(e, orbits, n, epsilon, ParseVariant(variant));
        const auto options = Solver(solver, exact_threshold);
        const auto span = qme::min_spanning(graph, options);
        const auto sep = qme::max_separated(graph, options);
        py::dict out;
        out["spanning"] = span.cardinality;
        out["spanning_witness"] = span.witness;
        out["spanning_optimal"] = span.optimal;
        out["separated"] = sep.cardinality;
        out["separated_witness"] = sep.witness;
        out["separated_optimal"] = sep.optimal;
        return out;
      },
      py::arg("metric"), py::arg("map"), py::arg("cloud"), py::arg("n"), py::arg("epsilon"),
      py::arg("variant") = "SymAND", py::arg("solver") = "auto", py::arg("exact_threshold") = 64);

  m.def(
      "estimate_entropy",
      [](const qme::QuasiMetric& e, const qme::MapSpec& t, const qme::PointCloud& cloud,
         const std::vector<std::size_t>& ns, const std::vector<double>& eps, const std::string& variant,
         const std::string& solver, std::size_t exact_threshold, std::size_t n_burn, double saturation_fraction) {
        const qme::DynamicalSystem sys{t, cloud, e};
        return ToPython(qme::to_json(qme::estimate_entropy(sys, ParseEntropyVariant(variant), ns, eps,
                                                           Estimate(solver, exact_threshold, n_burn,
                                                                    saturation_fraction))));
      },
      py::arg("metric"), py::arg("map"), py::arg("cloud"), py::arg("n_list"), py::arg("epsilon_list"),
      py::arg("variant") = "HPrime", py::arg("solver") = "auto", py::arg("exact_threshold") = 64,
      py::arg("n_burn") = 2, py::arg("saturation_fraction") = 0.25);

  m.def(
      "compare_theorems",
      [](const qme::QuasiMetric& e, const qme::MapSpec& t, const qme::PointCloud& cloud,
         const std::vector<std::size_t>& ns, const std::vector<double>& eps, const std::string& solver,
         std::size_t exact_threshold, double estimator_tol) {
        qme::TheoremOptions o;
        o.estimate = Estimate(solver, exact_threshold, 2, 0.25);
        o.estimator_tol = estimator_tol;
        return ToPython(qme::to_json(qme::compare_theorems(qme::DynamicalSystem{t, cloud, e}, ns, eps, o)));
      },
      py::arg("metric"), py::arg("map"), py::arg("cloud"), py::arg("n_list"), py::arg("epsilon_list"),
      py::arg("solver") = "auto", py::arg("exact_threshold") = 64, py::arg("estimator_tol") = 0.05);

  m.def(
      "power_rule_check",
      [](const qme::QuasiMetric& e, const qme::MapSpec& t, std::size_t power, const qme::PointCloud& cloud,
         const std::vector<std::size_t>& ns, const std::vector<double>& eps, const std::string& solver,
         std::size_t exact_threshold) {
        qme::PowerOptions o;
        o.estimate = Estimate(solver, exact_threshold, 2, 0.25);
        return ToPython(qme::to_json(qme::power_rule_check(t, power, cloud, e, ns, eps, o)));
      },
      py::arg("metric"), py::arg("map"), py::arg("m"), py::arg("cloud"), py::arg("n_list"),
      py::arg("epsilon_list"), py::arg("solver") = "auto", py::arg("exact_threshold") = 64);
}
