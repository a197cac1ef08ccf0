/*
   Copyright 2026 The soca-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "soca/checkers.hpp"
#include "soca/cli.hpp"
#include "soca/errors.hpp"
#include "soca/report.hpp"
#include "soca/search.hpp"

namespace py = pybind11;
using namespace soca;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.

Method method_of(const std::string& name) {
    const auto m = parse_method(name);
    if (!m) throw PreconditionError("unknown method '" + name + "'");
    return *m;
}

LinearRule linear_of(const std::vector<Element>& coeffs, const std::string& field) {
    return LinearRule(Field::parse(field), coeffs);
}

std::string check_linear(const std::vector<Element>& coeffs, const std::string& field, const std::string& method) {
    const LinearRule lr = linear_of(coeffs, field);
    return verdict_json(lr.to_string(), lr.diameter(), lr.field(), soca_check(lr, method_of(method))).dump();
}

std::string check_wolfram(const std::string& code, int diameter, const std::string& method) {
    const LocalRule r = rule_from_wolfram(code, diameter);
    return verdict_json("wolfram:" + r.wolfram_code(), diameter, r.field(), soca_check(r, method_of(method))).dump();
}

std::string audit_wolfram(const std::string& code, int diameter) {
    const LocalRule r = rule_from_wolfram(code, diameter);
    return audit_json("wolfram:" + r.wolfram_code(), diameter, r.field(), audit(r)).dump();
}

std::string audit_linear(const std::vector<Element>& coeffs, const std::string& field) {
    const LinearRule lr = linear_of(coeffs, field);
    return audit_json(lr.to_string(), lr.diameter(), lr.field(), audit(rule_from_linear(lr))).dump();
}

std::string scan(int diameter, const std::string& field, unsigned workers, bool i_know) {
    return scan_json({scan_soca(diameter, Field::parse(field), ScanOptions{workers, i_know})}).dump();
}

std::string count_linear(int d_min, int d_max, const std::string& field, unsigned workers, bool i_know) {
    return count_json(count_linear_soca(d_min, d_max, Field::parse(field), ScanOptions{workers, i_know})).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-orthogonal cellular automata over finite fields";
    py::register_exception<ScaleGuardError>(m, "ScaleGuardError", PyExc_ValueError);

    m.def("check_linear", &check_linear, py::arg("coeffs"), py::arg("field") = "GF(2)", py::arg("method") = "gcd-general");
    m.def("check_wolfram", &check_wolfram, py::arg("code"), py::arg("diameter"), py::arg("method") = "bruteforce");
    m.def("audit_linear", &audit_linear, py::arg("coeffs"), py::arg("field") = "GF(2)");
    m.def("audit_wolfram", &audit_wolfram, py::arg("code"), py::arg("diameter"));
    m.def(
        "cayley_table_wolfram",
        [](const std::string& code, int diameter) { return cayley_table(rule_from_wolfram(code, diameter)).rows(); },
        py::arg("code"), py::arg("diameter"));
    m.def(
        "cayley_table_linear",
        [](const std::vector<Element>& coeffs, const std::string& field) {
            return cayley_table(rule_from_linear(linear_of(coeffs, field))).rows();
        },
        py::arg("coeffs"), py::arg("field") = "GF(2)");
    m.def(
        "is_self_orthogonal",
        [](const std::vector<std::vector<std::uint32_t>>& rows) { return is_self_orthogonal(LatinSquare(rows)).orthogonal; },
        py::arg("rows"));
    m.def(
        "pbca_invertible",
        [](const std::vector<Element>& coeffs, std::size_t n, const std::string& field) {
            return soca::pbca_invertible(linear_of(coeffs, field), n);
        },
        py::arg("coeffs"), py::arg("n"), py::arg("field") = "GF(2)");
    m.def(
        "oca_pair",
        [](const std::vector<Element>& a, const std::vector<Element>& b, const std::string& field, bool bruteforce) {
            return oca_pair_check(linear_of(a, field), linear_of(b, field), bruteforce ? PairMode::Bruteforce : PairMode::Fast);
        },
        py::arg("a"), py::arg("b"), py::arg("field") = "GF(2)", py::arg("bruteforce") = false);
    m.def(
        "poly_gcd",
        [](const std::string& a, const std::string& b, const std::string& field) {
            const Field f = Field::parse(field);
            return gcd(Polynomial::parse(f, a), Polynomial::parse(f, b)).to_string();
        },
        py::arg("a"), py::arg("b"), py::arg("field") = "GF(2)");
    m.def(
        "is_irreducible",
        [](const std::string& p, const std::string& field) { return soca::is_irreducible(Polynomial::parse(Field::parse(field), p)); },
        py::arg("p"), py::arg("field") = "GF(2)");
    m.def("scan", &scan, py::arg("diameter"), py::arg("field") = "GF(2)", py::arg("workers") = 1, py::arg("i_know") = false);
    m.def("count_linear", &count_linear, py::arg("d_min"), py::arg("d_max"), py::arg("field") = "GF(2)",
          py::arg("workers") = 1, py::arg("i_know") = false);
    m.def("run_cli", &run_cli, py::arg("args"));
}
