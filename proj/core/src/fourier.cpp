#include "algspec/fourier.hpp"

#include "algspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace algspec {

namespace {

bool power_of_two(std::size_t n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

} // namespace

cvec dft_direct(const cvec& x)
{
    const std::size_t n = x.size();
    cvec out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // Reduce k*j mod n first so the angle stays accurate for large n.
            const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
            acc += x[j] * std::polar(1.0, ang);
        }
        out[k] = acc;
    }
    return out;
}

cvec dft_radix2(const cvec& x)
{
    const std::size_t n = x.size();
    if (!power_of_two(n)) throw DomainError("radix-2 transform needs a power-of-two length");
    cvec a = x;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const auto w = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len));
                const auto u = a[i + k];
                const auto v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
    return a;
}

cvec dft_auto(const cvec& x)
{
    return power_of_two(x.size()) ? dft_radix2(x) : dft_direct(x);
}

DftResult dft(const SampledSignal& sig)
{
    sig.validate();
    const std::size_t n = sig.times.size();
    const double dt = (sig.times.back() - sig.times.front()) / static_cast<double>(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double step = sig.times[k] - sig.times[k - 1];
        if (std::abs(step - dt) > 1e-9 * dt)
            throw DomainError("sampling is not uniform at sample " + std::to_string(k));
    }
    cvec x(sig.values.begin(), sig.values.end());
    const cvec spec = dft_auto(x);

    DftResult r;
    const long long nn = static_cast<long long>(n);
    const long long lo = -(nn / 2);
    for (long long k = lo; k < lo + nn; ++k) {
        const std::size_t idx = static_cast<std::size_t>(((k % nn) + nn) % nn);
        r.bin_frequencies.push_back(2.0 * std::numbers::pi * static_cast<double>(k) / (static_cast<double>(n) * dt));
        r.coefficients.push_back(spec[idx]);
        r.magnitudes.push_back(std::abs(spec[idx]));
    }
    return r;
}

std::vector<double> dominant_bins(const DftResult& r, std::size_t count)
{
    std::vector<std::size_t> idx(r.magnitudes.size());
    std::iota(idx.begin(), idx.end(), 0);
    count = std::min(count, idx.size());
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return r.magnitudes[a] > r.magnitudes[b]; });
    std::vector<double> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(r.bin_frequencies[idx[k]]);
    std::sort(out.begin(), out.end());
    return out;
}

double sinc_fourier_closed_form(double omega, double xi)
{
    if (!(omega > 0.0)) throw DomainError("sinc transform needs omega > 0");
    const double a = std::abs(xi);
    if (a < omega) return omega;
    if (a == omega) return omega / 2.0;
    return 0.0;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kToneSamples = 1024;
constexpr double kToneStep = 0.05;
constexpr std::size_t kImpulseSamples = 64;

std::string set_string(const std::vector<double>& f)
{
    std::ostringstream out;
    out.precision(12);
    out << "{";
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? ", " : "") << round_significant(f[k], 12);
    out << "}";
    return out.str();
}

} // namespace

ContrastReport contrast_report(const SignalExpr& e)
{
    ContrastReport r;
    r.expr = pretty_print(e);
    auto sa = as_scaled_atom(e);
    if (!sa) throw UnsupportedError("contrast needs a Dirac impulse, a sinc or a sine, got '" + r.expr + "'");
    const SignalExpr& atom = sa->atom;

    if (atom.is<expr::Dirac>()) {
        r.kind = "dirac";
        r.algebraic = analyze(e).spectrum;
        SampledSignal imp;
        for (std::size_t k = 0; k < kImpulseSamples; ++k) {
            imp.times.push_back(static_cast<double>(k));
            imp.values.push_back(k == 0 ? 1.0 : 0.0);
        }
        r.dt = 1.0;
        r.dft = dft(imp);
        r.fourier_summary = "flat: every frequency present";
        return r;
    }
    if (const auto* s = atom.as<expr::Sinc>()) {
        r.kind = "sinc";
        r.algebraic = analyze(e).spectrum;
        const double w = s->omega.get_d();
        r.sinc_omega = w;
        std::ostringstream sum;
        sum.precision(12);
        sum << "rectangle of height " << w << " on (" << -w << ", " << w << "), width " << 2 * w;
        r.fourier_summary = sum.str();
        for (int om : {1, 2, 4, 8}) {
            const double wd = om;
            r.sweep.push_back({wd, analyze(build::sinc(Rational(om))).spectrum, -wd, wd, wd});
        }
        return r;
    }
    if (const auto* s = atom.as<expr::Sin>()) {
        if (!sa->scale.is_real())
            throw UnsupportedError("contrast needs a real tone, got '" + r.expr + "'");
        r.kind = "sin";
        r.algebraic = analyze(e).spectrum;
        SampledSignal tone;
        const double w = s->omega.get_d();
        const double ph = s->phase.get_d();
        const double amp = sa->scale.re().get_d();
        for (std::size_t k = 0; k < kToneSamples; ++k) {
            const double t = static_cast<double>(k) * kToneStep;
            tone.times.push_back(t);
            tone.values.push_back(amp * std::sin(w * t + ph));
        }
        r.dt = kToneStep;
        r.dft = dft(tone);
        r.dominant = dominant_bins(r.dft, 2);
        r.fourier_summary = "line pair at " + set_string(r.dominant);
        return r;
    }
    throw UnsupportedError("contrast needs a Dirac impulse, a sinc or a sine, got '" + r.expr + "'");
}

std::string to_text(const ContrastReport& r)
{
    std::ostringstream out;
    out.precision(12);
    out << "expression: " << r.expr << "\n";
    out << "algebraic spectrum: " << set_string(r.algebraic.frequencies) << "\n";
    out << "fourier: " << r.fourier_summary << "\n";
    if (r.kind == "dirac") {
        const auto [lo, hi] = std::minmax_element(r.dft.magnitudes.begin(), r.dft.magnitudes.end());
        out << "impulse transform: " << r.dft.magnitudes.size() << " bins, magnitude in [" << *lo << ", " << *hi
            << "]\n";
    } else if (r.kind == "sinc") {
        out << "omega sweep:\n";
        out << "  omega  algebraic          fourier support\n";
        for (const auto& row : r.sweep) {
            std::ostringstream alg;
            alg << set_string(row.algebraic.frequencies);
            out << "  " << row.omega << std::string(row.omega < 10 ? 6 : 5, ' ') << alg.str()
                << std::string(alg.str().size() < 19 ? 19 - alg.str().size() : 1, ' ') << "(" << row.rect_low
                << ", " << row.rect_high << ") width " << row.rect_high - row.rect_low << "\n";
        }
    } else if (r.kind == "sin") {
        out << "tone transform: " << r.dft.magnitudes.size() << " samples, step " << r.dt << ", bin width "
            << (r.dft.bin_frequencies.size() > 1 ? r.dft.bin_frequencies[1] - r.dft.bin_frequencies[0] : 0.0)
            << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const ContrastReport& r)
{
    nlohmann::json j;
    j["expr"] = r.expr;
    j["kind"] = r.kind;
    j["algebraic"] = to_json(r.algebraic, 15, 12);
    j["fourier"] = r.fourier_summary;
    if (r.kind == "dirac") {
        const auto [lo, hi] = std::minmax_element(r.dft.magnitudes.begin(), r.dft.magnitudes.end());
        j["dft"] = {{"bins", r.dft.magnitudes.size()},
                    {"min_magnitude", json_number(*lo, 15)},
                    {"max_magnitude", json_number(*hi, 15)}};
    } else if (r.kind == "sinc") {
        auto rows = nlohmann::json::array();
        for (const auto& row : r.sweep) {
            rows.push_back({{"omega", json_number(row.omega, 15)},
                            {"algebraic", to_json(row.algebraic, 15, 12)["frequencies"]},
                            {"support", {json_number(row.rect_low, 15), json_number(row.rect_high, 15)}},
                            {"height", json_number(row.rect_height, 15)}});
        }
        j["sweep"] = rows;
    } else if (r.kind == "sin") {
        auto dom = nlohmann::json::array();
        for (double f : r.dominant) dom.push_back(json_number(f, 12));
        j["dft"] = {{"bins", r.dft.magnitudes.size()}, {"step", json_number(r.dt, 15)}, {"dominant", dom}};
    }
    return j;
}

std::string to_dump(const ContrastReport& r)
{
    std::ostringstream out;
    out.precision(12);
    if (r.kind == "sinc") {
        // 401 points on [-2 omega, 2 omega].
        const double omega = r.sinc_omega;
        for (int k = 0; k <= 400; ++k) {
            const double xi = -2.0 * omega + 4.0 * omega * k / 400.0;
            out << xi << " " << sinc_fourier_closed_form(omega, xi) << "\n";
        }
        return out.str();
    }
    for (std::size_t k = 0; k < r.dft.bin_frequencies.size(); ++k)
        out << r.dft.bin_frequencies[k] << " " << r.dft.magnitudes[k] << "\n";
    return out.str();
}

} // namespace algspec
