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

#include "soca/report.hpp"

#include <algorithm>

namespace soca {

namespace {

json certificate_json(const SocaVerdict& v) {
    if (v.gcd) return json{{"gcd", v.gcd->to_string()}};
    if (v.cells) {
        const auto& [a, b] = *v.cells;
        return json{{"cells", json::array({json::array({a.row, a.col}), json::array({b.row, b.col})})}};
    }
    return nullptr;
}

std::string cell_text(const Cell& c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

}  // namespace

std::string certificate_text(const SocaVerdict& v) {
    if (v.gcd) return "gcd=" + v.gcd->to_string();
    if (v.cells) return "cells=" + cell_text(v.cells->first) + ";" + cell_text(v.cells->second);
    return "none";
}

json verdict_json(const std::string& rule, int diameter, const Field& field, const SocaVerdict& v) {
    json j;
    j["rule"] = rule;
    j["diameter"] = diameter;
    j["field"] = field.descriptor();
    j["verdict"] = v.verdict;
    j["method"] = std::string(method_name(v.method));
    j["certificate"] = certificate_json(v);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json audit_json(const std::string& rule, int diameter, const Field& field, const AuditReport& report) {
    json j;
    j["rule"] = rule;
    j["diameter"] = diameter;
    j["field"] = field.descriptor();
    j["verdict"] = report.verdict;
    j["methods"] = json::array();
    for (const SocaVerdict& v : report.log) j["methods"].push_back(verdict_json(rule, diameter, field, v));
    j["skipped"] = report.skipped;
    return j;
}

json latin_square_json(const LatinSquare& square) { return json(square.rows()); }

std::string polynomial_list(const std::vector<Polynomial>& polys) {
    std::string out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out += ';';
        out += polys[i].to_string();
    }
    return out;
}

std::string scan_csv(const std::vector<ScanReport>& reports) {
    std::string out = "d,#BCA,#SOCA,#LIN,Polynomials\n";
    for (const ScanReport& r : reports)
        out += std::to_string(r.diameter) + "," + std::to_string(r.n_bipermutive) + "," + std::to_string(r.n_soca) + "," +
               std::to_string(r.n_affine_soca) + "," + polynomial_list(r.polynomials) + "\n";
    return out;
}

json scan_json(const std::vector<ScanReport>& reports) {
    json rows = json::array();
    for (const ScanReport& r : reports) {
        json j;
        j["d"] = r.diameter;
        j["field"] = r.field.descriptor();
        j["n_bipermutive"] = r.n_bipermutive;
        j["n_soca"] = r.n_soca;
        j["n_affine_soca"] = r.n_affine_soca;
        j["n_linear_soca"] = r.n_linear_soca;
        j["n_nonlinear_soca"] = r.n_nonlinear_soca;
        j["polynomials"] = json::array();
        for (const Polynomial& p : r.polynomials) j["polynomials"].push_back(p.to_string());
        j["nonlinear_indices"] = r.nonlinear_indices;
        rows.push_back(std::move(j));
    }
    return rows;
}

std::string scan_table(const std::vector<ScanReport>& reports) {
    std::vector<std::vector<std::string>> rows{{"d", "field", "#BCA", "#SOCA", "#AFFINE", "#STRICT", "#NONLINEAR", "Polynomials"}};
    for (const ScanReport& r : reports)
        rows.push_back({std::to_string(r.diameter), r.field.descriptor(), std::to_string(r.n_bipermutive),
                        std::to_string(r.n_soca), std::to_string(r.n_affine_soca), std::to_string(r.n_linear_soca),
                        std::to_string(r.n_nonlinear_soca), polynomial_list(r.polynomials)});
    return render_columns(rows);
}

std::string count_csv(const LinearCountReport& report) {
    std::string out = "d,#LIN\n";
    for (const auto& [d, n] : report.counts) out += std::to_string(d) + "," + std::to_string(n) + "\n";
    return out;
}

json count_json(const LinearCountReport& report) {
    json j;
    j["field"] = report.field.descriptor();
    j["method"] = report.method;
    j["counts"] = json::array();
    for (const auto& [d, n] : report.counts) j["counts"].push_back(json{{"d", d}, {"count", n}});
    return j;
}

std::string count_table(const LinearCountReport& report) {
    std::vector<std::vector<std::string>> rows{{"d", "#LIN"}};
    for (const auto& [d, n] : report.counts) rows.push_back({std::to_string(d), std::to_string(n)});
    return render_columns(rows);
}

std::string table1_csv(const std::vector<ScanReport>& reports) {
    return "# #BCA at d=6 is the enumerated 2^16 = 65536; 65,336 is a misprint\n" + scan_csv(reports);
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace soca
