#pragma once

#include "algspec/weylode.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace algspec::cli {

enum class Command { spectrum, opform, instfreq, contrast, selftest };

struct CliConfig {
    Command command = Command::spectrum;
    std::optional<std::string> expr;
    std::optional<std::string> csv_path;
    // spectrum --ode: a manual equation instead of an expression.
    std::optional<std::string> ode_path;
    int window = 11;
    int degree = 3;
    bool json = false;
    bool explain = false;
    // contrast --dump: two-column numeric output.
    bool dump = false;
    // instfreq on an expression: the sampling grid, and the Ville table.
    double from = 0.0;
    double to = 3.0;
    double step = 0.01;
    bool ville = false;
};

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericalError = 2 };

// Parses argv-style arguments (without the program name). Returns nullopt
// after printing help (exit 0) or a usage error (exit 1); `status` receives
// the exit code in that case.
std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& status);

// Runs a parsed command. Failures print one line
// "algspec: error: <category>: <message>" to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Manual equation: {"op": [c_0, c_1, ...], "rhs": c} where each c is
// {"num": [...], "den": [...]} with ascending coefficients (den defaults to
// [1]) or a bare scalar. Scalars are JSON numbers, strings such as "3/4" or
// "-0.25", or [re, im] pairs of those.
OdeSystem ode_from_json(const nlohmann::json& j);

struct SelftestCase {
    std::string name;
    bool ok;
    std::string detail;
};

// The worked examples of the algebraic-spectrum theory, each checked
// against its expected value.
std::vector<SelftestCase> run_selftest();

} // namespace algspec::cli
