// Copyright 2026 The unsharp Authors
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

// Python bindings. Elements and time points cross the boundary by name, and
// set values come back as lists in the carrier's declaration order.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "unsharp/cli.hpp"
#include "unsharp/connectives.hpp"
#include "unsharp/expr.hpp"
#include "unsharp/formats.hpp"
#include "unsharp/frame_induction.hpp"
#include "unsharp/laws.hpp"
#include "unsharp/render.hpp"
#include "unsharp/tense.hpp"

namespace py = pybind11;
using namespace unsharp;

namespace {

using Names = std::vector<std::string>;

Names names_of(const EffectAlgebra &ea, ElementSet s) {
  Names out;
  for (auto e : s) out.push_back(ea.name(e));
  return out;
}

std::vector<Names> names_of(const EffectAlgebra &ea, const SetProposition &x) {
  std::vector<Names> out;
  for (auto s : x) out.push_back(names_of(ea, s));
  return out;
}

std::optional<std::string> name_or_none(const EffectAlgebra &ea, std::optional<Element> e) {
  if (!e) return std::nullopt;
  return ea.name(*e);
}

Proposition proposition(const EffectAlgebra &ea, const TimeFrame &frame, const Names &values) {
  if (values.size() != frame.size()) {
    throw py::value_error("expected " + std::to_string(frame.size()) + " values, got " + std::to_string(values.size()));
  }
  Proposition p;
  for (const auto &v : values) p.push_back(ea.element(v));
  return p;
}

TenseOp tense_op(const std::string &s) {
  if (s.size() == 1) {
    if (auto op = tense_op_from_char(s[0])) return *op;
  }
  throw py::value_error("unknown tense operator '" + s + "'");
}

py::list report_to_list(const Report &rep) {
  py::list out;
  for (const auto &c : rep.checks()) {
    py::dict d;
    d["id"] = c.id;
    d["description"] = c.description;
    d["status"] = to_string(c.status);
    d["cases"] = c.cases;
    d["failures"] = c.failures;
    d["sampled"] = c.sampled;
    d["witness"] = c.witness;
    out.append(d);
  }
  return out;
}

TableOp table_op(const std::string &name) {
  if (auto op = table_op_from_name(name)) return *op;
  throw py::value_error("unknown operation '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite effect algebras, unsharp connectives and tense operators";

  // Translators are tried newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AxiomError>(m, "AxiomError", PyExc_ValueError);
  py::register_exception<UnknownElement>(m, "UnknownElement", PyExc_KeyError);
  py::register_exception<UndefinedOperation>(m, "UndefinedOperation", PyExc_ArithmeticError);
  py::register_exception<FrameError>(m, "FrameError", PyExc_ValueError);

  py::class_<EffectAlgebra>(m, "EffectAlgebra")
      .def_static("parse", [](const std::string &text) { return parse_algebra(text); }, py::arg("text"))
      .def_static("load", [](const std::string &path) { return parse_algebra(read_file(path)); }, py::arg("path"))
      .def_property_readonly("names", &EffectAlgebra::names)
      .def_property_readonly("zero", [](const EffectAlgebra &ea) { return ea.name(ea.zero()); })
      .def_property_readonly("one", [](const EffectAlgebra &ea) { return ea.name(ea.one()); })
      .def("__len__", &EffectAlgebra::size)
      .def("is_lattice", &EffectAlgebra::is_lattice)
      .def("plus", [](const EffectAlgebra &ea, const std::string &a, const std::string &b) {
        return name_or_none(ea, ea.plus(ea.element(a), ea.element(b)));
      })
      .def("odot", [](const EffectAlgebra &ea, const std::string &a, const std::string &b) {
        return name_or_none(ea, ea.odot(ea.element(a), ea.element(b)));
      })
      .def("supplement", [](const EffectAlgebra &ea, const std::string &a) { return ea.name(ea.supplement(ea.element(a))); })
      .def("leq", [](const EffectAlgebra &ea, const std::string &a, const std::string &b) {
        return ea.leq(ea.element(a), ea.element(b));
      })
      .def("imp_arrow", [](const EffectAlgebra &ea, const std::string &b, const std::string &c) {
        return names_of(ea, imp_arrow(ea, ea.element(b), ea.element(c)));
      })
      .def("imp_squig", [](const EffectAlgebra &ea, const std::string &b, const std::string &c) {
        return name_or_none(ea, imp_squig(ea, ea.element(b), ea.element(c)));
      })
      .def("imp_double", [](const EffectAlgebra &ea, const std::string &b, const std::string &c) {
        return names_of(ea, imp_double(ea, ea.element(b), ea.element(c)));
      })
      .def("otimes", [](const EffectAlgebra &ea, const std::string &a, const std::string &b) {
        return names_of(ea, otimes(ea, ea.element(a), ea.element(b)));
      })
      .def("table", [](const EffectAlgebra &ea, const std::string &op) { return render(operation_table(ea, table_op(op))); },
           py::arg("op"))
      .def("to_text", [](const EffectAlgebra &ea) { return write_algebra(ea); })
      .def("__repr__", [](const EffectAlgebra &ea) {
        return "<EffectAlgebra with " + std::to_string(ea.size()) + " elements>";
      });

  py::class_<TimeFrame>(m, "TimeFrame")
      .def(py::init([](Names times, const std::vector<std::pair<std::string, std::string>> &rel) {
             std::vector<std::pair<TimePoint, TimePoint>> pairs;
             auto index = [&](const std::string &n) -> TimePoint {
               for (TimePoint i = 0; i < times.size(); ++i) {
                 if (times[i] == n) return i;
               }
               throw FrameError("unknown time point '" + n + "'");
             };
             for (const auto &[s, t] : rel) pairs.emplace_back(index(s), index(t));
             return TimeFrame(std::move(times), pairs);
           }),
           py::arg("times"), py::arg("rel"))
      .def_static("parse", [](const std::string &text) { return parse_frame(text); }, py::arg("text"))
      .def_static("load", [](const std::string &path) { return parse_frame(read_file(path)); }, py::arg("path"))
      .def_property_readonly("names", &TimeFrame::names)
      .def("__len__", &TimeFrame::size)
      .def("serial", &TimeFrame::serial)
      .def("reflexive", &TimeFrame::reflexive)
      .def("pairs", [](const TimeFrame &f) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [s, t] : f.pairs()) out.emplace_back(f.name(s), f.name(t));
        return out;
      })
      .def("to_text", [](const TimeFrame &f) { return write_frame(f); });

  m.def(
      "tense",
      [](const EffectAlgebra &ea, const TimeFrame &frame, const std::string &op, const std::vector<Names> &family) {
        PropositionFamily fam;
        for (const auto &p : family) fam.push_back(proposition(ea, frame, p));
        if (fam.empty()) throw py::value_error("the family must not be empty");
        return names_of(ea, tense_apply(ea, frame, tense_op(op), fam));
      },
      py::arg("algebra"), py::arg("frame"), py::arg("op"), py::arg("family"),
      "Apply P, F, H or G to a family of propositions given as lists of element names.");

  m.def(
      "evaluate",
      [](const EffectAlgebra &ea, const TimeFrame &frame, const std::map<std::string, Names> &props,
         const std::string &expr) {
        NamedPropositions named;
        for (const auto &[name, values] : props) {
          named.names.push_back(name);
          named.props.push_back(proposition(ea, frame, values));
        }
        return names_of(ea, Expression::parse(expr).evaluate(ea, frame, named));
      },
      py::arg("algebra"), py::arg("frame"), py::arg("props"), py::arg("expr"),
      "Evaluate an expression such as 'G(phi(p => q))' pointwise over the frame.");

  m.def(
      "induced_relation",
      [](const EffectAlgebra &ea, const TimeFrame &frame) {
        const auto rel = induce_relation(ea, OperatorTable::induced(ea, frame));
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [s, t] : rel.pairs) out.emplace_back(frame.name(s), frame.name(t));
        return out;
      },
      py::arg("algebra"), py::arg("frame"), "R* for the operators induced by a serial frame.");

  m.def(
      "laws",
      [](const EffectAlgebra &ea, const TimeFrame *frame, unsigned jobs) {
        SweepOptions opts;
        opts.jobs = jobs;
        Report rep;
        {
          py::gil_scoped_release release;
          rep = run_laws(ea, frame, nullptr, opts);
        }
        return report_to_list(rep);
      },
      py::arg("algebra"), py::arg("frame") = nullptr, py::arg("jobs") = 1,
      "Run the law checks and return one dict per check.");

  m.def(
      "run_cli",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr).");
}
