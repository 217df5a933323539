// Copyright 2026 The agcss Authors
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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "agcss/cli.h"
#include "agcss/css.h"
#include "agcss/errors.h"
#include "agcss/records.h"
#include "agcss/tower.h"

namespace py = pybind11;
using namespace agcss;

namespace {

py::object to_python(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::array_t<std::uint8_t> to_array(const BitMatrix &m) {
    py::array_t<std::uint8_t> out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m.get(r, c);
    }
    return out;
}

BitMatrix from_array(const py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast> &a) {
    if (a.ndim() != 2) throw UsageError("expected a 2-D 0/1 array");
    auto view = a.unchecked<2>();
    BitMatrix m(view.shape(0), view.shape(1));
    for (py::ssize_t r = 0; r < view.shape(0); ++r) {
        for (py::ssize_t c = 0; c < view.shape(1); ++c) {
            if (view(r, c) > 1) throw UsageError("matrix entries must be 0 or 1");
            m.set(r, c, view(r, c) != 0);
        }
    }
    return m;
}

std::optional<IntRange> to_range(const std::optional<std::pair<long long, long long>> &r) {
    if (!r) return std::nullopt;
    return IntRange{r->first, r->second};
}

}  // namespace

PYBIND11_MODULE(_agcss, m) {
    m.doc() = "CSS quantum codes from algebraic-geometry codes over GF(2^t).";

    auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
    py::register_exception<DefectError>(m, "DefectError", PyExc_AssertionError);
    (void)usage;

    py::class_<CssCode>(m, "CssCode")
        .def_readonly("n", &CssCode::n_q)
        .def_readonly("k", &CssCode::k_q)
        .def_readonly("d_designed", &CssCode::d_designed)
        .def_readonly("d_exact", &CssCode::d_exact)
        .def_property_readonly("h_x", [](const CssCode &c) { return to_array(c.h_x); })
        .def_property_readonly("h_z", [](const CssCode &c) { return to_array(c.h_z); })
        .def("record", [](const CssCode &c) { return to_python(code_record(c)); })
        .def("stabilizers", [](const CssCode &c, const std::string &fmt) {
            return emit_stabilizers(c, parse_stabilizer_format(fmt));
        }, py::arg("format") = "plain")
        .def("__repr__", [](const CssCode &c) { return "<CssCode " + c.bracket() + ">"; });

    m.def(
        "construct",
        [](const std::string &curve, unsigned t, long long mm, long long mprime, bool exact, std::uint64_t budget) {
            CssCode code = theorem31_pipeline(CurveModel::from_descriptor(curve, t), mm, mprime);
            if (exact) code.d_exact = css_exact_distance(code, budget);
            return code;
        },
        py::arg("curve"), py::arg("t"), py::arg("m"), py::arg("mprime"), py::arg("exact") = false,
        py::arg("budget") = kDefaultEnumerationBudget,
        "Build the CSS code of a curve family; exact=True also enumerates the true distance.");

    m.def(
        "css_construct",
        [](py::array_t<std::uint8_t> c1, py::array_t<std::uint8_t> c2, long long d1, long long d2) {
            return css_construct(BinaryCode::from_spanning(from_array(c1)), BinaryCode::from_spanning(from_array(c2)), d1,
                                 d2);
        },
        py::arg("c1"), py::arg("c2"), py::arg("d1") = 1, py::arg("d2") = 1,
        "CSS code from the row spaces of two binary matrices with dual(C1) inside C2.");

    m.def(
        "exact_distance", [](const CssCode &code, std::uint64_t budget) { return css_exact_distance(code, budget); },
        py::arg("code"), py::arg("budget") = kDefaultEnumerationBudget);

    m.def(
        "params",
        [](long long N, long long g, long long t, long long mm, long long mprime) {
            return to_python(params_record(theorem31_params(N, g, t, mm, mprime)));
        },
        py::arg("N"), py::arg("g"), py::arg("t"), py::arg("m"), py::arg("mprime"));

    m.def(
        "table",
        [](long long N, long long g, long long t, std::optional<std::pair<long long, long long>> mr,
           std::optional<std::pair<long long, long long>> pr) {
            py::list out;
            for (const auto &p : theorem31_table(N, g, t, to_range(mr), to_range(pr))) out.append(to_python(params_record(p)));
            return out;
        },
        py::arg("N"), py::arg("g"), py::arg("t"), py::arg("m") = py::none(), py::arg("mprime") = py::none(),
        "Best designed distance per k over all valid (m, m').");

    m.def(
        "corollary_params",
        [](const std::string &family, long long t, long long mm, long long mprime) {
            return to_python(params_record(corollary_params(parse_corollary_family(family), t, mm, mprime)));
        },
        py::arg("family"), py::arg("t"), py::arg("m"), py::arg("mprime"));

    m.def(
        "curve_info",
        [](const std::string &curve, unsigned t) {
            const auto c = CurveModel::from_descriptor(curve, t);
            py::dict d;
            d["N"] = c.num_points();
            d["g"] = c.genus();
            d["field_degree"] = c.expansion_degree();
            return d;
        },
        py::arg("curve"), py::arg("t"));

    m.def(
        "tower_points",
        [](unsigned q, unsigned level, std::uint64_t budget) {
            const auto lvl = tower_points(q, level, budget);
            py::array_t<std::uint8_t> chains({lvl.count(), static_cast<std::size_t>(level)});
            auto view = chains.mutable_unchecked<2>();
            for (std::size_t i = 0; i < lvl.count(); ++i) {
                const auto c = lvl.chain(i);
                for (unsigned k = 0; k < level; ++k) view(i, k) = c[k];
            }
            return chains;
        },
        py::arg("q"), py::arg("level"), py::arg("budget") = kDefaultTowerBudget,
        "Chains (x_1, ..., x_level) as raw GF(q^2) values, one per row.");

    m.def("tower_genus", &tower_genus, py::arg("q"), py::arg("h"));

    m.def(
        "family_params", [](long long t, long long mm, long long h) { return to_python(family_record(family_params(t, mm, h))); },
        py::arg("t"), py::arg("m"), py::arg("h"));

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "agcss");
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}
