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

#ifndef SOCA_CLI_HPP
#define SOCA_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "soca/report.hpp"

namespace soca::cli {

enum ExitCode : int {
    kPositive = 0,
    kNegative = 1,
    kUsage = 2,
    kInconsistent = 3,  // audit methods disagree
};

struct RunConfig {
    std::string command;
    std::string field = "GF(2)";
    std::optional<int> d_min;
    std::optional<int> d_max;  // equal to d_min for a single diameter
    std::optional<std::string> wolfram;
    std::optional<std::string> linear;
    std::optional<std::string> polynomial;
    std::string method = "auto";
    std::optional<std::string> format;  // table | csv | json; command default when unset
    std::optional<std::string> out;
    unsigned workers = 1;
    bool show_square = false;
    bool audit = false;
    bool i_know = false;

    bool operator==(const RunConfig&) const = default;
};

json to_json(const RunConfig& config);
RunConfig run_config_from_json(const json& j);

/// Parses "5" or "3..6".
std::pair<int, int> parse_diameter_range(const std::string& text);

/// Parses argv-style arguments (without the program name). Throws ParseError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Rejects invalid flag combinations before any computation. Throws PreconditionError.
void validate(const RunConfig& config);

/// Executes a validated config. Results go to out (or a file), diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + validate + run, mapping failures onto the exit code contract.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soca::cli

#endif
