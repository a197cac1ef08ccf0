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

#ifndef SOCA_REPORT_HPP
#define SOCA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "soca/checkers.hpp"
#include "soca/latin_square.hpp"
#include "soca/search.hpp"

namespace soca {

using json = nlohmann::ordered_json;

/// "gcd=1+X", "cells=(1,1);(2,3)" or "none".
std::string certificate_text(const SocaVerdict& v);

/// {rule, diameter, field, verdict, method, certificate[, note]}
json verdict_json(const std::string& rule, int diameter, const Field& field, const SocaVerdict& v);

json audit_json(const std::string& rule, int diameter, const Field& field, const AuditReport& report);

/// Rows of 1-based symbols.
json latin_square_json(const LatinSquare& square);

/// ';'-joined canonical polynomial list.
std::string polynomial_list(const std::vector<Polynomial>& polys);

/// Header "d,#BCA,#SOCA,#LIN,Polynomials"; #LIN counts affine SOCA, the list holds
/// the strictly linear ones. Elapsed times are never written.
std::string scan_csv(const std::vector<ScanReport>& reports);
json scan_json(const std::vector<ScanReport>& reports);
std::string scan_table(const std::vector<ScanReport>& reports);

/// Header "d,#LIN".
std::string count_csv(const LinearCountReport& report);
json count_json(const LinearCountReport& report);
std::string count_table(const LinearCountReport& report);

/// The reference rendering of the diameter 3..6 binary scan, with a leading comment line.
std::string table1_csv(const std::vector<ScanReport>& reports);

/// Left-aligned columns separated by two spaces.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace soca

#endif
