#include "algspec/instfreq.hpp"

#include "algspec/error.hpp"

#include <Eigen/Dense>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace algspec {

void SampledSignal::validate() const
{
    if (times.size() != values.size())
        throw DomainError("times and values differ in length (" + std::to_string(times.size()) + " vs " +
                          std::to_string(values.size()) + ")");
    if (times.size() < 3) throw DomainError("at least 3 samples are needed");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || !std::isfinite(values[k]))
            throw DomainError("sample " + std::to_string(k) + " is not finite");
        if (k > 0 && !(times[k] > times[k - 1]))
            throw DomainError("times are not strictly increasing at sample " + std::to_string(k));
    }
}

const char* to_string(PhiMethod m)
{
    return m == PhiMethod::symbolic ? "symbolic" : "fitted";
}

namespace {

double real_value(std::complex<double> v, const char* what, double t)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << what << " is not finite at t = " << t;
        throw DomainError(msg.str());
    }
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
        throw DomainError("instantaneous frequency needs a real-valued signal");
    return v.real();
}

struct Derivs {
    double d1, d2;
};

Derivs derivatives(const SignalExpr& e, double t)
{
    if (!is_evaluable(e)) throw DomainError("'" + pretty_print(e) + "' is not differentiable pointwise");
    const SignalExpr d1 = diff_time(e);
    const SignalExpr d2 = diff_time(d1);
    real_value(eval(e, t), "x", t);
    return {real_value(eval(d1, t), "x'", t), real_value(eval(d2, t), "x''", t)};
}

} // namespace

double phi_symbolic(const SignalExpr& e, double t)
{
    const Derivs d = derivatives(e, t);
    return d.d2 / std::sqrt(1.0 + d.d1 * d.d1);
}

PhiTrace phi_symbolic(const SignalExpr& e, const std::vector<double>& times)
{
    if (!is_evaluable(e)) throw DomainError("'" + pretty_print(e) + "' is not differentiable pointwise");
    const SignalExpr d1 = diff_time(e);
    const SignalExpr d2 = diff_time(d1);
    PhiTrace out;
    out.method = PhiMethod::symbolic;
    out.times = times;
    out.phi.reserve(times.size());
    for (double t : times) {
        real_value(eval(e, t), "x", t);
        const double a = real_value(eval(d1, t), "x'", t);
        const double b = real_value(eval(d2, t), "x''", t);
        out.phi.push_back(b / std::sqrt(1.0 + a * a));
    }
    return out;
}

double curvature(const SignalExpr& e, double t)
{
    const Derivs d = derivatives(e, t);
    return d.d2 / std::pow(1.0 + d.d1 * d.d1, 1.5);
}

PhiTrace phi_fitted(const SampledSignal& sig, int window, int degree)
{
    sig.validate();
    if (window < 5 || window % 2 == 0) throw DomainError("window must be odd and >= 5");
    if (degree < 2 || degree > 4) throw DomainError("degree must be in [2, 4]");
    if (degree >= window) throw DomainError("degree must be below the window length");
    if (static_cast<std::size_t>(window) > sig.times.size())
        throw DomainError("window is longer than the signal");

    const int half = window / 2;
    const int n = static_cast<int>(sig.times.size());
    PhiTrace out;
    out.method = PhiMethod::fitted;
    Eigen::MatrixXd a(window, degree + 1);
    Eigen::VectorXd y(window);
    for (int c = half; c < n - half; ++c) {
        const double tc = sig.times[static_cast<std::size_t>(c)];
        const double h = std::max(tc - sig.times[static_cast<std::size_t>(c - half)],
                                  sig.times[static_cast<std::size_t>(c + half)] - tc);
        for (int r = 0; r < window; ++r) {
            const auto j = static_cast<std::size_t>(c - half + r);
            const double u = (sig.times[j] - tc) / h;
            double p = 1.0;
            for (int k = 0; k <= degree; ++k) {
                a(r, k) = p;
                p *= u;
            }
            y(r) = sig.values[j];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
        qr.setThreshold(1e-10);
        double phi = std::numeric_limits<double>::quiet_NaN();
        if (qr.rank() == degree + 1) {
            const Eigen::VectorXd coef = qr.solve(y);
            const double d1 = coef(1) / h;
            const double d2 = 2.0 * coef(2) / (h * h);
            phi = d2 / std::sqrt(1.0 + d1 * d1);
        }
        out.times.push_back(tc);
        out.phi.push_back(phi);
    }
    return out;
}

VilleReport phi_vs_ville(double amplitude, double omega, const std::vector<double>& times)
{
    if (omega == 0.0) throw DomainError("the tone needs omega != 0");
    VilleReport r{amplitude, omega, {}};
    for (double t : times) {
        const double wc = omega * std::cos(omega * t);
        const double phi = -omega * omega * amplitude * std::sin(omega * t) /
                           std::sqrt(1.0 + amplitude * amplitude * wc * wc);
        r.rows.push_back({t, amplitude == 0.0 ? 0.0 : std::abs(omega), phi});
    }
    return r;
}

VilleReport phi_vs_ville(const SignalExpr& e, const std::vector<double>& times)
{
    if (const auto* c = e.as<expr::Const>(); c && c->value.is_zero()) {
        VilleReport r{0.0, 0.0, {}};
        for (double t : times) r.rows.push_back({t, 0.0, 0.0});
        return r;
    }
    auto sa = as_scaled_atom(e);
    const auto* s = sa ? sa->atom.as<expr::Sin>() : nullptr;
    if (!s || sgn(s->phase) != 0 || !sa->scale.is_real())
        throw UnsupportedError("'" + pretty_print(e) + "' is not of the form A*sin(omega*t)");
    return phi_vs_ville(sa->scale.re().get_d(), s->omega.get_d(), times);
}

std::string to_text(const VilleReport& r)
{
    std::ostringstream out;
    out << std::setprecision(12);
    out << "A = " << r.amplitude << ", omega = " << r.omega << "\n";
    out << std::left << std::setw(20) << "t" << std::setw(20) << "ville" << "phi\n";
    for (const auto& row : r.rows)
        out << std::left << std::setw(20) << row.t << std::setw(20) << row.ville << row.phi << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view f, std::size_t line_no, std::size_t offset)
{
    f = trim(f);
    if (!f.empty() && f.front() == '+') f.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v))
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(f) + "' is not a number",
                         offset);
    return v;
}

} // namespace

SampledSignal read_csv(std::istream& in)
{
    SampledSignal sig;
    std::string line;
    std::size_t offset = 0;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t here = offset;
        offset += line.size() + 1;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (!header) {
            std::string compact;
            for (char ch : body)
                if (ch != ' ' && ch != '\t') compact += ch;
            if (compact != "t,x") throw ParseError("expected header 't,x'", here);
            header = true;
            continue;
        }
        const auto comma = body.find(',');
        if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected two comma-separated fields", here);
        sig.times.push_back(parse_field(body.substr(0, comma), line_no, here));
        sig.values.push_back(parse_field(body.substr(comma + 1), line_no, here));
    }
    if (!header) throw ParseError("missing header 't,x'", 0);
    return sig;
}

SampledSignal read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return read_csv(in);
}

} // namespace algspec
