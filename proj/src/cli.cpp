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

#include "soca/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "soca/errors.hpp"

namespace soca::cli {

namespace {

constexpr std::array<std::string_view, 7> kCommands = {"check", "scan", "count-linear", "table1", "table2", "poly", "audit"};
constexpr std::array<std::string_view, 3> kFormats = {"table", "csv", "json"};

bool one_of(std::string_view v, std::span<const std::string_view> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string format_of(const RunConfig& c) {
    if (c.format) return *c.format;
    return c.command == "table1" || c.command == "table2" ? "csv" : "table";
}

std::string extension_of(const std::string& format) { return format == "table" ? "txt" : format; }

/// Writes to --out, else to $SOCA_KIT_OUT_DIR/<default_name> for report commands, else to out.
void emit(const RunConfig& c, const std::string& default_name, const std::string& text, std::ostream& out,
          std::ostream& err) {
    std::optional<std::filesystem::path> path;
    if (c.out) {
        path = *c.out;
    } else if (const char* dir = std::getenv("SOCA_KIT_OUT_DIR"); dir && *dir && !default_name.empty()) {
        path = std::filesystem::path(dir) / (default_name + "." + extension_of(format_of(c)));
    }
    if (!path) {
        out << text;
        return;
    }
    if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw PreconditionError("cannot open " + path->string() + " for writing");
    file << text;
    if (!file) throw PreconditionError("failed writing " + path->string());
    err << "wrote " << path->string() << "\n";
}

std::string range_name(const RunConfig& c) {
    if (*c.d_min == *c.d_max) return "d" + std::to_string(*c.d_min);
    return "d" + std::to_string(*c.d_min) + "-" + std::to_string(*c.d_max);
}

ScanOptions scan_options(const RunConfig& c) { return {c.workers, c.i_know}; }

// ---------------------------------------------------------------------------------------
// check / audit

struct RuleInput {
    std::string label;
    Field field;
    int diameter = 0;
    std::optional<LinearRule> linear;
    std::optional<LocalRule> local;

    const LocalRule& table() {
        if (!local) local = rule_from_linear(*linear);
        return *local;
    }
};

RuleInput load_rule(const RunConfig& c) {
    RuleInput in;
    in.field = Field::parse(c.field);
    if (c.wolfram) {
        in.diameter = *c.d_min;
        in.local = rule_from_wolfram(*c.wolfram, in.diameter);
        in.label = "wolfram:" + (in.diameter <= 6 ? in.local->wolfram_code() : "0x" + in.local->wolfram_hex());
    } else {
        in.linear = LinearRule::parse(in.field, *c.linear);
        in.diameter = in.linear->diameter();
        if (c.d_min && *c.d_min != in.diameter)
            throw PreconditionError("--diameter " + std::to_string(*c.d_min) + " does not match the " +
                                    std::to_string(in.diameter) + " coefficients of --linear");
        in.label = in.linear->to_string();
    }
    return in;
}

Method resolve_method(const RunConfig& c, RuleInput& in) {
    if (c.method != "auto") return *parse_method(c.method);
    const bool affine = in.linear || as_affine(*in.local);
    if (!affine) return Method::Bruteforce;
    return in.field.characteristic() == 2 ? Method::GcdBinary : Method::GcdGeneral;
}

std::vector<std::string> square_lines(const LatinSquare& sq) {
    std::vector<std::string> lines;
    for (const auto& row : sq.rows()) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? " " : "") + std::to_string(row[i]);
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return lines;
}

std::string verdict_csv_row(const std::string& rule, int d, const Field& f, const SocaVerdict& v) {
    return csv_field(rule) + "," + std::to_string(d) + "," + csv_field(f.descriptor()) + "," + bool_text(v.verdict) + "," +
           std::string(method_name(v.method)) + "," + csv_field(certificate_text(v)) + "," + csv_field(v.note) + "\n";
}

constexpr std::string_view kVerdictHeader = "rule,diameter,field,verdict,method,certificate,note\n";

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    RuleInput in = load_rule(c);
    const std::string format = format_of(c);
    const bool audit_mode = c.audit || c.command == "audit";

    bool verdict = false;
    json j;
    std::string text;
    if (audit_mode) {
        const AuditReport report = audit(in.table());
        verdict = report.verdict;
        j = audit_json(in.label, in.diameter, in.field, report);
        if (format == "csv") {
            text = std::string(kVerdictHeader);
            for (const SocaVerdict& v : report.log) text += verdict_csv_row(in.label, in.diameter, in.field, v);
        } else {
            text = render_columns({{"rule", in.label},
                                   {"field", in.field.descriptor()},
                                   {"diameter", std::to_string(in.diameter)},
                                   {"verdict", bool_text(verdict)}});
            std::vector<std::vector<std::string>> rows{{"method", "verdict", "certificate", "note"}};
            for (const SocaVerdict& v : report.log)
                rows.push_back({std::string(method_name(v.method)), bool_text(v.verdict), certificate_text(v), v.note});
            text += "\n" + render_columns(rows);
            for (const std::string& s : report.skipped) text += "skipped: " + s + "\n";
        }
    } else {
        const Method method = resolve_method(c, in);
        const SocaVerdict v = in.linear ? soca_check(*in.linear, method) : soca_check(*in.local, method);
        verdict = v.verdict;
        j = verdict_json(in.label, in.diameter, in.field, v);
        if (format == "csv") {
            text = std::string(kVerdictHeader) + verdict_csv_row(in.label, in.diameter, in.field, v);
        } else {
            std::vector<std::vector<std::string>> rows{{"rule", in.label},
                                                       {"field", in.field.descriptor()},
                                                       {"diameter", std::to_string(in.diameter)},
                                                       {"verdict", bool_text(v.verdict)},
                                                       {"method", std::string(method_name(v.method))},
                                                       {"certificate", certificate_text(v)}};
            if (!v.note.empty()) rows.push_back({"note", v.note});
            text = render_columns(rows);
        }
    }

    if (c.show_square) {
        const LatinSquare square = cayley_table(in.table());
        const std::string grid = superposition_grid(square, transpose(square));
        j["square"] = latin_square_json(square);
        j["superposition"] = split_lines(grid);
        if (format == "csv") {
            text += "\n" + square.to_csv();
        } else {
            text += "\ncayley table:\n";
            for (const std::string& line : square_lines(square)) text += line + "\n";
            text += "\nsuperposition with the transpose:\n" + grid;
        }
    }

    if (format == "json") text = j.dump(2) + "\n";
    emit(c, "", text, out, err);
    return verdict ? kPositive : kNegative;
}

// ---------------------------------------------------------------------------------------
// scan / count-linear / tables

std::string render_scan(const std::string& format, const std::vector<ScanReport>& reports) {
    if (format == "csv") return scan_csv(reports);
    if (format == "json") return scan_json(reports).dump(2) + "\n";
    return scan_table(reports);
}

std::string render_count(const std::string& format, const LinearCountReport& report) {
    if (format == "csv") return count_csv(report);
    if (format == "json") return count_json(report).dump(2) + "\n";
    return count_table(report);
}

std::vector<ScanReport> run_scans(const RunConfig& c, int d_min, int d_max) {
    const Field field = Field::parse(c.field);
    std::vector<ScanReport> reports;
    for (int d = d_min; d <= d_max; ++d) reports.push_back(scan_soca(d, field, scan_options(c)));
    return reports;
}

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
    emit(c, "scan-" + range_name(c), render_scan(format_of(c), run_scans(c, *c.d_min, *c.d_max)), out, err);
    return kPositive;
}

int cmd_table1(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto reports = run_scans(c, 3, 6);
    const std::string format = format_of(c);
    emit(c, "table1", format == "csv" ? table1_csv(reports) : render_scan(format, reports), out, err);
    return kPositive;
}

int cmd_count(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto report = count_linear_soca(*c.d_min, *c.d_max, Field::parse(c.field), scan_options(c));
    emit(c, "count-linear-" + range_name(c), render_count(format_of(c), report), out, err);
    return kPositive;
}

int cmd_table2(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto report = count_linear_soca(3, 16, Field(), scan_options(c));
    emit(c, "table2", render_count(format_of(c), report), out, err);
    return kPositive;
}

// ---------------------------------------------------------------------------------------
// poly

int cmd_poly(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Field field = Field::parse(c.field);
    const Polynomial p = Polynomial::parse(field, *c.polynomial);
    if (p.degree() < 1 || p.coeff(0) == 0)
        throw PreconditionError(p.to_string() + " is not the polynomial of a bipermutive rule (needs degree >= 1 and a nonzero constant term)");
    const int d = p.degree() + 1;
    const auto n = static_cast<std::size_t>(d - 1);

    std::vector<std::pair<std::string, std::string>> fields;
    json j;
    auto put = [&](const std::string& key, const std::string& value, json jv) {
        fields.emplace_back(key, value);
        j[key] = std::move(jv);
    };

    put("polynomial", p.to_string(), p.to_string());
    put("field", field.descriptor(), field.descriptor());
    put("degree", std::to_string(p.degree()), p.degree());
    put("diameter", std::to_string(d), d);
    const bool irreducible = is_irreducible(p);
    put("irreducible", bool_text(irreducible), irreducible);
    try {
        const auto factors = factor(p);
        std::string text;
        json arr = json::array();
        for (const Polynomial& f : factors) {
            text += "(" + f.to_string() + ")";
            arr.push_back(f.to_string());
        }
        put("factors", text, arr);
    } catch (const ScaleGuardError&) {
        put("factors", "skipped (too large)", nullptr);
    }
    const Element at_one = eval(p, 1);
    put("p(1)", std::to_string(at_one), at_one);

    if (field.characteristic() == 2) {
        const Polynomial g = gcd(p, Polynomial::x_pow_minus_one(field, n));
        put("gcd_binary", "gcd(p, " + Polynomial::x_pow_minus_one(field, n).to_string() + ") = " + g.to_string(), g.to_string());
    }
    const Polynomial big = Polynomial::x_pow_minus_one(field, 2 * n);
    const Polynomial g2 = gcd(p, big);
    put("gcd_general", "gcd(p, " + big.to_string() + ") = " + g2.to_string(), g2.to_string());
    const bool soca = g2.is_one();
    put("soca", bool_text(soca), soca);

    const std::string format = format_of(c);
    std::string text;
    if (format == "json") {
        text = j.dump(2) + "\n";
    } else if (format == "csv") {
        std::string header;
        std::string row;
        for (const auto& [k, v] : fields) {
            header += (header.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + csv_field(v);
        }
        text = header + "\n" + row + "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : fields) rows.push_back({k, v});
        text = render_columns(rows);
    }
    emit(c, "", text, out, err);
    return soca ? kPositive : kNegative;
}

std::unique_ptr<CLI::App> build_app(RunConfig& c, std::string& diameter, std::string& wolfram, std::string& linear,
                                    std::string& polynomial, std::string& format, std::string& out_path) {
    auto app = std::make_unique<CLI::App>("Self-orthogonal cellular automata toolkit", "soca-kit");
    app->set_version_flag("--version", "soca-kit 0.1.0");
    app->require_subcommand(1);
    app->add_option("--field", c.field, "Alphabet: GF(q), GF(p^k) or GF(2^k)/modulus-bits")->capture_default_str();
    app->add_option("-d,--diameter", diameter, "Diameter, or a range such as 3..6");
    app->add_option("--wolfram", wolfram, "Binary rule as a decimal Wolfram code or 0x-prefixed hex table");
    app->add_option("--linear", linear, "Linear rule a_1,...,a_d (optionally prefixed by linear:)");
    app->add_option("--method", c.method, "auto, bruteforce, stacked-matrix, gcd-general, gcd-binary, parity, irreducible-sufficient")
        ->capture_default_str();
    app->add_option("--format", format, "table, csv or json");
    app->add_option("--out", out_path, "Output file");
    app->add_option("--workers", c.workers, "Worker threads for scans")->capture_default_str();
    app->add_flag("--show-square", c.show_square, "Print the Cayley table and its superposition with the transpose");
    app->add_flag("--audit", c.audit, "Run every applicable method and require agreement");
    app->add_flag("--i-know", c.i_know, "Lift the desk-scale guards");

    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app->add_subcommand(name, help);
        s->fallthrough();
        s->callback([&c, name] { c.command = name; });
        return s;
    };
    sub("check", "Decide self-orthogonality of one rule");
    sub("audit", "Run every applicable method on one rule");
    sub("scan", "Brute-force scan of all bipermutive rules of the given diameters");
    sub("count-linear", "Count linear self-orthogonal rules by the gcd criterion");
    sub("table1", "Scan of binary diameters 3..6");
    sub("table2", "Linear counts for binary diameters 3..16");
    sub("poly", "Analyse an associated polynomial")->add_option("polynomial", polynomial, "e.g. 1+x+x^5")->required();
    return app;
}

struct Parsed {
    RunConfig config;
    std::string diameter, wolfram, linear, polynomial, format, out_path;
    std::unique_ptr<CLI::App> app;

    Parsed() { app = build_app(config, diameter, wolfram, linear, polynomial, format, out_path); }

    void parse(const std::vector<std::string>& args) {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app->parse(reversed);
        finish();
    }

    void finish() {
        if (!diameter.empty()) {
            const auto [lo, hi] = parse_diameter_range(diameter);
            config.d_min = lo;
            config.d_max = hi;
        }
        if (!wolfram.empty()) config.wolfram = wolfram;
        if (!linear.empty()) config.linear = linear;
        if (!polynomial.empty()) config.polynomial = polynomial;
        if (!format.empty()) config.format = format;
        if (!out_path.empty()) config.out = out_path;
    }
};

}  // namespace

json to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["field"] = c.field;
    j["d_min"] = c.d_min ? json(*c.d_min) : json(nullptr);
    j["d_max"] = c.d_max ? json(*c.d_max) : json(nullptr);
    j["wolfram"] = c.wolfram ? json(*c.wolfram) : json(nullptr);
    j["linear"] = c.linear ? json(*c.linear) : json(nullptr);
    j["polynomial"] = c.polynomial ? json(*c.polynomial) : json(nullptr);
    j["method"] = c.method;
    j["format"] = c.format ? json(*c.format) : json(nullptr);
    j["out"] = c.out ? json(*c.out) : json(nullptr);
    j["workers"] = c.workers;
    j["show_square"] = c.show_square;
    j["audit"] = c.audit;
    j["i_know"] = c.i_know;
    return j;
}

RunConfig run_config_from_json(const json& j) {
    try {
        RunConfig c;
        auto opt_string = [&](const char* key) -> std::optional<std::string> {
            if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
            return j.at(key).get<std::string>();
        };
        auto opt_int = [&](const char* key) -> std::optional<int> {
            if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
            return j.at(key).get<int>();
        };
        c.command = j.at("command").get<std::string>();
        c.field = j.value("field", c.field);
        c.d_min = opt_int("d_min");
        c.d_max = opt_int("d_max");
        c.wolfram = opt_string("wolfram");
        c.linear = opt_string("linear");
        c.polynomial = opt_string("polynomial");
        c.method = j.value("method", c.method);
        c.format = opt_string("format");
        c.out = opt_string("out");
        c.workers = j.value("workers", c.workers);
        c.show_square = j.value("show_square", false);
        c.audit = j.value("audit", false);
        c.i_know = j.value("i_know", false);
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed run config: ") + e.what());
    }
}

std::pair<int, int> parse_diameter_range(const std::string& text) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw ParseError("malformed diameter '" + text + "' (expected N or N..M)");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int d = to_int(text);
        return {d, d};
    }
    const int lo = to_int(std::string_view(text).substr(0, dots));
    const int hi = to_int(std::string_view(text).substr(dots + 2));
    if (hi < lo) throw ParseError("empty diameter range '" + text + "'");
    return {lo, hi};
}

RunConfig parse_args(const std::vector<std::string>& args) {
    Parsed p;
    try {
        p.parse(args);
    } catch (const CLI::ParseError& e) {
        throw ParseError(e.what());
    }
    return p.config;
}

void validate(const RunConfig& c) {
    if (!one_of(c.command, kCommands)) throw PreconditionError("unknown command '" + c.command + "'");
    if (c.format && !one_of(*c.format, kFormats)) throw PreconditionError("--format must be table, csv or json");
    if (c.method != "auto" && !parse_method(c.method)) throw PreconditionError("unknown method '" + c.method + "'");
    if (c.workers == 0) throw PreconditionError("--workers must be at least 1");
    if (c.d_min.has_value() != c.d_max.has_value() || (c.d_min && *c.d_max < *c.d_min))
        throw PreconditionError("malformed diameter range");
    const Field field = Field::parse(c.field);

    const bool rule_command = c.command == "check" || c.command == "audit";
    const bool range_command = c.command == "scan" || c.command == "count-linear";
    const bool table_command = c.command == "table1" || c.command == "table2";

    if (!rule_command && (c.wolfram || c.linear)) throw PreconditionError("--wolfram/--linear only apply to check and audit");
    if (!rule_command && (c.show_square || c.audit)) throw PreconditionError("--show-square/--audit only apply to check and audit");
    if (!rule_command && c.method != "auto") throw PreconditionError("--method only applies to check");
    if (c.command != "poly" && c.polynomial) throw PreconditionError("a polynomial argument only applies to poly");

    if (rule_command) {
        if (c.wolfram.has_value() == c.linear.has_value()) throw PreconditionError("give exactly one of --wolfram or --linear");
        if (c.d_min && *c.d_min != *c.d_max) throw PreconditionError("check takes a single diameter");
        if (c.wolfram && !c.d_min) throw PreconditionError("--wolfram needs --diameter");
        if (c.wolfram && !field.is_binary()) throw PreconditionError("Wolfram codes describe binary rules; use --field GF(2)");
        if ((c.audit || c.command == "audit") && c.method != "auto")
            throw PreconditionError("--audit runs every method; drop --method");
    }
    if (range_command && !c.d_min) throw PreconditionError(c.command + " needs --diameter");
    if (table_command) {
        if (c.d_min) throw PreconditionError(c.command + " has fixed diameters; use scan or count-linear for others");
        if (!field.is_binary()) throw PreconditionError(c.command + " is defined over GF(2)");
    }
    if (c.command == "poly" && !c.polynomial) throw PreconditionError("poly needs a polynomial argument");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    validate(c);
    if (c.command == "check" || c.command == "audit") return cmd_check(c, out, err);
    if (c.command == "scan") return cmd_scan(c, out, err);
    if (c.command == "count-linear") return cmd_count(c, out, err);
    if (c.command == "table1") return cmd_table1(c, out, err);
    if (c.command == "table2") return cmd_table2(c, out, err);
    return cmd_poly(c, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Parsed p;
    try {
        p.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << p.app->help();
        return kPositive;
    } catch (const CLI::CallForVersion&) {
        out << p.app->version() << "\n";
        return kPositive;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        return run(p.config, out, err);
    } catch (const ScaleGuardError& e) {
        err << "error: " << e.what() << " (pass --i-know to override)\n";
        return kUsage;
    } catch (const ConsistencyError& e) {
        err << "inconsistent: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace soca::cli
