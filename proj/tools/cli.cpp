#include "cli.hpp"

#include "algspec/analysis.hpp"
#include "algspec/error.hpp"
#include "algspec/fourier.hpp"
#include "algspec/instfreq.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace algspec::cli {

namespace {

constexpr int kFrequencyDigits = 12;

Rational parse_scalar_text(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (sgn(den) == 0) throw DomainError("zero denominator in '" + text + "'");
    return parse_decimal(text.substr(0, slash)) / den;
}

Rational parse_real(const nlohmann::json& j)
{
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_number()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) throw DomainError("coefficient is not finite");
        return rational_from_double(v);
    }
    if (j.is_string()) return parse_scalar_text(j.get<std::string>());
    throw DomainError("expected a number, got " + j.dump());
}

ExactComplex parse_scalar(const nlohmann::json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) throw DomainError("complex scalar must be [re, im], got " + j.dump());
        return {parse_real(j[0]), parse_real(j[1])};
    }
    return ExactComplex(parse_real(j));
}

CPoly parse_poly(const nlohmann::json& j)
{
    if (!j.is_array()) throw DomainError("polynomial must be an array of coefficients, got " + j.dump());
    std::vector<ExactComplex> c;
    for (const auto& x : j) c.push_back(parse_scalar(x));
    return CPoly(std::move(c));
}

RatFunc parse_ratfunc(const nlohmann::json& j)
{
    if (!j.is_object()) return RatFunc(parse_scalar(j));
    if (!j.contains("num")) throw DomainError("rational function needs a \"num\" array");
    const CPoly num = parse_poly(j.at("num"));
    const CPoly den = j.contains("den") ? parse_poly(j.at("den")) : CPoly(1);
    if (den.is_zero()) throw DomainError("zero denominator");
    return RatFunc(num, den);
}

std::string error_line(const std::string& category, const std::string& msg)
{
    return "algspec: error: " + category + ": " + msg + "\n";
}

std::string with_offset(const Error& e)
{
    std::string msg = e.what();
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) msg += " (at byte " + std::to_string(p->offset()) + ")";
    if (const auto* d = dynamic_cast<const DomainError*>(&e); d && d->offset())
        msg += " (at byte " + std::to_string(*d->offset()) + ")";
    return msg;
}

nlohmann::json trace_json(const PhiTrace& tr)
{
    nlohmann::json j;
    auto times = nlohmann::json::array();
    auto phi = nlohmann::json::array();
    for (double t : tr.times) times.push_back(t);
    for (double p : tr.phi) {
        if (std::isfinite(p)) phi.push_back(p);
        else phi.push_back(nullptr);
    }
    j["times"] = times;
    j["phi"] = phi;
    j["method"] = to_string(tr.method);
    return j;
}

std::string trace_text(const PhiTrace& tr)
{
    std::ostringstream out;
    out.precision(12);
    out << "# method " << to_string(tr.method) << "\n# t phi\n";
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        out << tr.times[k] << " ";
        if (std::isfinite(tr.phi[k])) out << tr.phi[k];
        else out << "nan";
        out << "\n";
    }
    return out.str();
}

std::string frequency_text(const Spectrum& s)
{
    std::ostringstream out;
    out.precision(kFrequencyDigits);
    out << "frequencies: {";
    for (std::size_t k = 0; k < s.frequencies.size(); ++k)
        out << (k ? ", " : "") << round_significant(s.frequencies[k], kFrequencyDigits);
    out << "}\ninfinite_singularity: " << (s.infinite_singularity ? "true" : "false") << "\n";
    return out.str();
}

std::vector<double> time_grid(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to) || to < from)
        throw DomainError("time grid needs finite from <= to and step > 0");
    const double span = (to - from) / step;
    if (span > 1e7) throw DomainError("time grid has too many points");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(from + static_cast<double>(k) * step);
    return out;
}

std::string require_expr(const CliConfig& c, const char* cmd)
{
    if (!c.expr) throw DomainError(std::string(cmd) + " needs an expression");
    return *c.expr;
}

void cmd_spectrum(const CliConfig& c, std::ostream& out)
{
    if (c.ode_path) {
        if (c.expr) throw DomainError("give either an expression or --ode, not both");
        std::ifstream in(*c.ode_path);
        if (!in) throw DomainError("cannot open '" + *c.ode_path + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        const OdeSystem sys = ode_from_json(j);
        const Spectrum s = spectrum_of_ode(sys);
        if (c.json) {
            nlohmann::json r = to_json(s, 15, kFrequencyDigits);
            if (c.explain) r["explain"] = explain(sys);
            out << r.dump(2) << "\n";
        } else {
            if (c.explain) out << explain(sys);
            else out << frequency_text(s);
        }
        return;
    }
    const Analysis a = analyze(parse(require_expr(c, "spectrum")));
    if (c.json) {
        nlohmann::json r = to_json(a.spectrum, 15, kFrequencyDigits);
        if (c.explain) r["explain"] = explain(a);
        out << r.dump(2) << "\n";
    } else if (c.explain) {
        out << explain(a);
    } else {
        out << frequency_text(a.spectrum);
    }
}

void cmd_opform(const CliConfig& c, std::ostream& out)
{
    const Analysis a = analyze(parse(require_expr(c, "opform")));
    nlohmann::json j;
    j["class"] = to_string(a.cls);
    if (a.image) {
        j["form"] = "rational";
        j["image"] = a.image->to_string();
    } else {
        j["form"] = "equation";
        j["operator"] = a.ode->op.to_string();
        j["rhs"] = a.ode->rhs.to_string();
    }
    if (c.json) {
        out << j.dump(2) << "\n";
    } else if (a.image) {
        out << a.image->to_string() << "\n";
    } else {
        out << a.ode->to_string() << "\n";
    }
}

void cmd_instfreq(const CliConfig& c, std::ostream& out)
{
    if (c.csv_path) {
        if (c.expr) throw DomainError("give either an expression or --csv, not both");
        const PhiTrace tr = phi_fitted(read_csv_file(*c.csv_path), c.window, c.degree);
        out << (c.json ? trace_json(tr).dump(2) + "\n" : trace_text(tr));
        return;
    }
    const SignalExpr e = parse(require_expr(c, "instfreq"));
    const auto grid = time_grid(c.from, c.to, c.step);
    if (c.ville) {
        const VilleReport r = phi_vs_ville(e, grid);
        if (!c.json) {
            out << to_text(r);
            return;
        }
        nlohmann::json j;
        j["amplitude"] = r.amplitude;
        j["omega"] = r.omega;
        auto rows = nlohmann::json::array();
        for (const auto& row : r.rows) rows.push_back({{"t", row.t}, {"ville", row.ville}, {"phi", row.phi}});
        j["rows"] = rows;
        out << j.dump(2) << "\n";
        return;
    }
    const PhiTrace tr = phi_symbolic(e, grid);
    out << (c.json ? trace_json(tr).dump(2) + "\n" : trace_text(tr));
}

void cmd_contrast(const CliConfig& c, std::ostream& out)
{
    const ContrastReport r = contrast_report(parse(require_expr(c, "contrast")));
    if (c.dump) out << to_dump(r);
    else if (c.json) out << to_json(r).dump(2) << "\n";
    else out << to_text(r);
}

int cmd_selftest(const CliConfig& c, std::ostream& out)
{
    const auto cases = run_selftest();
    std::size_t failed = 0;
    for (const auto& k : cases) failed += k.ok ? 0 : 1;
    if (c.json) {
        auto arr = nlohmann::json::array();
        for (const auto& k : cases) arr.push_back({{"name", k.name}, {"ok", k.ok}, {"detail", k.detail}});
        nlohmann::json j{{"cases", arr}, {"passed", cases.size() - failed}, {"failed", failed}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& k : cases) {
            out << (k.ok ? "ok    " : "FAIL  ") << k.name;
            if (!k.ok) out << ": " << k.detail;
            out << "\n";
        }
        out << cases.size() - failed << "/" << cases.size() << " passed\n";
    }
    return failed == 0 ? kOk : kNumericalError;
}

} // namespace

OdeSystem ode_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("op")) throw DomainError("equation must be an object with an \"op\" array");
    const auto& op = j.at("op");
    if (!op.is_array()) throw DomainError("\"op\" must be an array of coefficients");
    std::vector<RatFunc> coeffs;
    for (const auto& c : op) coeffs.push_back(parse_ratfunc(c));
    const RatFunc rhs = j.contains("rhs") ? parse_ratfunc(j.at("rhs")) : RatFunc();
    return OdeSystem(WeylOp(std::move(coeffs)), rhs);
}

std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& status)
{
    CliConfig c;
    CLI::App app{"Algebraic spectrum of signals", "algspec"};
    app.require_subcommand(1);

    std::string expr;
    auto* spectrum = app.add_subcommand("spectrum", "Frequencies of an expression or a manual equation");
    spectrum->add_option("expr", expr, "Signal expression");
    spectrum->add_flag("--json", c.json, "JSON output");
    spectrum->add_flag("--explain", c.explain, "Show the representation and singular points");
    std::string ode;
    spectrum->add_option("--ode", ode, "Equation file (JSON)");

    auto* opform = app.add_subcommand("opform", "Operational image or defining equation");
    opform->add_option("expr", expr, "Signal expression")->required();
    opform->add_flag("--json", c.json, "JSON output");

    auto* instfreq = app.add_subcommand("instfreq", "Instantaneous frequency Phi(t)");
    instfreq->add_option("expr", expr, "Signal expression (symbolic path)");
    std::string csv;
    instfreq->add_option("--csv", csv, "Samples with header t,x (fitted path)");
    instfreq->add_option("--window", c.window, "Fit window (odd, >= 5)")->capture_default_str();
    instfreq->add_option("--degree", c.degree, "Fit degree (2 to 4)")->capture_default_str();
    instfreq->add_option("--from", c.from, "Grid start")->capture_default_str();
    instfreq->add_option("--to", c.to, "Grid end")->capture_default_str();
    instfreq->add_option("--step", c.step, "Grid step")->capture_default_str();
    instfreq->add_flag("--ville", c.ville, "Compare with the analytic-signal frequency of A*sin(w*t)");
    instfreq->add_flag("--json", c.json, "JSON output");

    auto* contrast = app.add_subcommand("contrast", "Algebraic spectrum against the Fourier picture");
    contrast->add_option("expr", expr, "dirac(), sinc(w) or a sine")->required();
    contrast->add_flag("--json", c.json, "JSON output");
    contrast->add_flag("--dump", c.dump, "Two-column numeric dump");

    auto* selftest = app.add_subcommand("selftest", "Check the worked examples");
    selftest->add_flag("--json", c.json, "JSON output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        status = kOk;
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        status = kOk;
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        err << error_line("usage", e.what());
        status = kInputError;
        return std::nullopt;
    }

    if (spectrum->parsed()) c.command = Command::spectrum;
    else if (opform->parsed()) c.command = Command::opform;
    else if (instfreq->parsed()) c.command = Command::instfreq;
    else if (contrast->parsed()) c.command = Command::contrast;
    else c.command = Command::selftest;
    if (!expr.empty()) c.expr = expr;
    if (!ode.empty()) c.ode_path = ode;
    if (!csv.empty()) c.csv_path = csv;
    return c;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    // Render into a buffer so a failing command prints nothing but its
    // error line.
    std::ostringstream buf;
    int status = kOk;
    try {
        switch (config.command) {
        case Command::spectrum: cmd_spectrum(config, buf); break;
        case Command::opform: cmd_opform(config, buf); break;
        case Command::instfreq: cmd_instfreq(config, buf); break;
        case Command::contrast: cmd_contrast(config, buf); break;
        case Command::selftest: status = cmd_selftest(config, buf); break;
        }
    } catch (const NumericalError& e) {
        err << error_line(e.category(), e.what());
        return kNumericalError;
    } catch (const Error& e) {
        err << error_line(e.category(), with_offset(e));
        return kInputError;
    } catch (const std::exception& e) {
        err << error_line("internal", e.what());
        return kNumericalError;
    }
    out << buf.str();
    return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    int status = kOk;
    const auto config = parse_args(args, out, err, status);
    if (!config) return status;
    return run(*config, out, err);
}

} // namespace algspec::cli
