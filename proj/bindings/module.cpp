/*
 * Copyright 2026 The ireval authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ireval/errors.hpp"
#include "ireval/evaluate.hpp"
#include "ireval/measure.hpp"
#include "ireval/output.hpp"
#include "ireval/registry.hpp"
#include "ireval/trec_io.hpp"

namespace py = pybind11;

namespace {

using ireval::Measure;
using ireval::ParamValue;

ParamValue to_param_value(const py::handle& value) {
  if (py::isinstance<py::bool_>(value)) {
    throw ireval::MeasureError("parameter values must be int, float or str");
  }
  if (py::isinstance<py::int_>(value)) {
    return ParamValue(value.cast<long long>());
  }
  if (py::isinstance<py::float_>(value)) {
    return ParamValue(value.cast<double>());
  }
  if (py::isinstance<py::str>(value)) {
    return ParamValue(value.cast<std::string>());
  }
  throw ireval::MeasureError("parameter values must be int, float or str");
}

py::object from_param_value(const ParamValue& value) {
  if (value.is_integer()) return py::cast(value.as_integer());
  if (value.is_real()) return py::cast(value.as_real());
  return py::cast(value.as_text());
}

Measure make_measure(const std::string& name, const py::dict& params,
                     const py::object& cutoff) {
  std::vector<std::pair<std::string, ParamValue>> bound;
  for (const auto& item : params) {
    bound.emplace_back(item.first.cast<std::string>(),
                       to_param_value(item.second));
  }
  std::optional<ParamValue> cut;
  if (!cutoff.is_none()) cut = to_param_value(cutoff);
  return Measure::make(name, std::move(bound), std::move(cut));
}

ireval::QrelsTable qrels_from_entries(
    const std::vector<std::tuple<std::string, std::string, int>>& entries) {
  std::vector<ireval::QrelsEntry> rows;
  rows.reserve(entries.size());
  for (const auto& [qid, did, grade] : entries) {
    rows.push_back(ireval::QrelsEntry{qid, "0", did, grade});
  }
  return ireval::QrelsTable::from_entries(rows);
}

ireval::RunTable run_from_entries(
    const std::vector<std::tuple<std::string, std::string, double>>& entries) {
  std::vector<ireval::RunEntry> rows;
  rows.reserve(entries.size());
  for (const auto& [qid, did, score] : entries) {
    rows.push_back(ireval::RunEntry{qid, "Q0", did, 0, score, "run"});
  }
  return ireval::RunTable::from_entries(rows);
}

py::object aggregate_value(const ireval::AggregateResult& result) {
  if (ireval::Registry::instance().lookup(result.measure.name())
          .integer_valued) {
    return py::cast(std::llround(result.value));
  }
  return py::cast(result.value);
}

py::dict aggregates_to_dict(
    const std::map<Measure, ireval::AggregateResult>& aggregates) {
  py::dict out;
  for (const auto& [measure, result] : aggregates) {
    out[py::cast(measure)] = aggregate_value(result);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native engine for IR evaluation measures over TREC qrels/runs";

  py::register_exception<ireval::ParseError>(m, "ParseError",
                                             PyExc_ValueError);
  py::register_exception<ireval::MeasureError>(m, "MeasureError",
                                               PyExc_ValueError);
  py::register_exception<ireval::EvalError>(m, "EvalError", PyExc_ValueError);

  py::class_<Measure>(m, "Measure")
      .def_property_readonly("name", &Measure::name)
      .def_property_readonly("params",
                             [](const Measure& measure) {
                               py::dict out;
                               for (const auto& [key, value] :
                                    measure.params()) {
                                 out[py::cast(key)] = from_param_value(value);
                               }
                               return out;
                             })
      .def_property_readonly("cutoff",
                             [](const Measure& measure) -> py::object {
                               if (!measure.has_cutoff()) return py::none();
                               const ireval::MeasureSchema& schema =
                                   ireval::Registry::instance().lookup(
                                       measure.name());
                               if (schema.real_cutoff) {
                                 return py::cast(measure.cutoff_real());
                               }
                               return py::cast(measure.cutoff());
                             })
      .def("__str__", &Measure::str)
      .def("__repr__", &Measure::str)
      .def("__eq__",
           [](const Measure& a, const py::object& b) -> py::object {
             if (py::isinstance<Measure>(b)) {
               return py::cast(a == b.cast<Measure>());
             }
             // Strings compare against the canonical rendering, so result
             // dicts can be indexed by expression text.
             if (py::isinstance<py::str>(b)) {
               return py::cast(a.str() == b.cast<std::string>());
             }
             return py::reinterpret_borrow<py::object>(Py_NotImplemented);
           })
      .def("__hash__",
           [](const Measure& measure) {
             return py::hash(py::cast(measure.str()));
           })
      .def("__matmul__", [](const Measure& measure, const py::object& k) {
        py::dict params;
        for (const auto& [key, value] : measure.params()) {
          params[py::cast(key)] = from_param_value(value);
        }
        return make_measure(measure.name(), params, k);
      });

  m.def("make_measure", &make_measure, py::arg("name"),
        py::arg("params") = py::dict(), py::arg("cutoff") = py::none());
  m.def("parse_measure",
        [](const std::string& expr) { return Measure::parse(expr); });
  m.def("parse_measures", [](const std::string& exprs) {
    return ireval::parse_measure_list(exprs);
  });
  m.def("measure_names", []() {
    std::vector<std::string> names;
    for (const auto& schema : ireval::Registry::instance().schemas()) {
      names.push_back(schema.name);
    }
    return names;
  });

  py::class_<ireval::QrelsTable>(m, "QrelsTable")
      .def_property_readonly("query_ids", &ireval::QrelsTable::query_ids)
      .def("__len__", &ireval::QrelsTable::entry_count)
      .def_property_readonly("max_grade", &ireval::QrelsTable::max_grade);

  py::class_<ireval::RunTable>(m, "RunTable")
      .def_property_readonly("query_ids", &ireval::RunTable::query_ids)
      .def("__len__", &ireval::RunTable::entry_count)
      .def("to_trec",
           [](const ireval::RunTable& table, const std::string& tag) {
             return table.write_string(tag);
           },
           py::arg("tag") = "run");

  m.def("read_trec_qrels", &ireval::QrelsTable::load, py::arg("path"));
  m.def("parse_trec_qrels", &ireval::QrelsTable::parse_string,
        py::arg("text"));
  m.def("qrels_from_entries", &qrels_from_entries, py::arg("entries"));
  m.def("read_trec_run", &ireval::RunTable::load, py::arg("path"));
  m.def("parse_trec_run", &ireval::RunTable::parse_string, py::arg("text"));
  m.def("run_from_entries", &run_from_entries, py::arg("entries"));

  py::class_<ireval::QueryResult>(m, "QueryResult")
      .def_readonly("measure", &ireval::QueryResult::measure)
      .def_readonly("query_id", &ireval::QueryResult::query_id)
      .def_readonly("value", &ireval::QueryResult::value)
      .def("__repr__", [](const ireval::QueryResult& row) {
        return "QueryResult(" + row.measure.str() + ", " + row.query_id +
               ", " + std::to_string(row.value) + ")";
      });

  py::class_<ireval::Evaluator>(m, "Evaluator")
      .def(py::init([](const std::vector<Measure>& measures,
                       const ireval::QrelsTable& qrels, bool intersect,
                       const std::string& backend, unsigned threads) {
             ireval::EvalOptions options;
             options.intersect = intersect;
             options.backend_override = backend;
             options.threads = threads;
             return ireval::Evaluator(measures, qrels, options);
           }),
           py::arg("measures"), py::arg("qrels"), py::arg("intersect") = false,
           py::arg("backend") = std::string(), py::arg("threads") = 1)
      .def("calc_aggregate",
           [](const ireval::Evaluator& evaluator,
              const ireval::RunTable& run) {
             return aggregates_to_dict(evaluator.aggregate(run));
           })
      .def("iter_calc",
           [](const ireval::Evaluator& evaluator,
              const ireval::RunTable& run) { return evaluator.per_query(run); })
      .def_property_readonly("n_backend_passes",
                             [](const ireval::Evaluator& evaluator) {
                               return evaluator.plan().passes();
                             });

  m.def(
      "calc_aggregate",
      [](const std::vector<Measure>& measures, const ireval::QrelsTable& qrels,
         const ireval::RunTable& run, bool intersect,
         const std::string& backend) {
        ireval::EvalOptions options;
        options.intersect = intersect;
        options.backend_override = backend;
        return aggregates_to_dict(
            ireval::calc_aggregate(measures, qrels, run, options));
      },
      py::arg("measures"), py::arg("qrels"), py::arg("run"),
      py::arg("intersect") = false, py::arg("backend") = std::string());

  m.def(
      "iter_calc",
      [](const std::vector<Measure>& measures, const ireval::QrelsTable& qrels,
         const ireval::RunTable& run, bool intersect,
         const std::string& backend) {
        ireval::EvalOptions options;
        options.intersect = intersect;
        options.backend_override = backend;
        return ireval::iter_calc(measures, qrels, run, options);
      },
      py::arg("measures"), py::arg("qrels"), py::arg("run"),
      py::arg("intersect") = false, py::arg("backend") = std::string());
}
