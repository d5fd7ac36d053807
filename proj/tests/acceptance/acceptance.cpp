// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "cli.hpp"

#include "algspec/analysis.hpp"
#include "algspec/error.hpp"
#include "algspec/fourier.hpp"
#include "algspec/instfreq.hpp"
#include "algspec/opcalc.hpp"
#include "algspec/roots.hpp"
#include "algspec/weylode.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace algspec;

namespace {

std::mt19937_64 rng(20240531);

long rnd(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational rnd_rational(long max_num, long max_den, bool nonzero = false)
{
    for (;;) {
        Rational q(rnd(-max_num, max_num), rnd(1, max_den));
        q.canonicalize();
        if (!nonzero || sgn(q) != 0) return q;
    }
}

ExactComplex rnd_gauss(long max_num, long max_den, bool nonzero = false)
{
    for (;;) {
        ExactComplex z(rnd_rational(max_num, max_den), rnd_rational(max_num, max_den));
        if (!nonzero || !z.is_zero()) return z;
    }
}

CPoly rnd_poly(int degree, long max_num, long max_den)
{
    std::vector<ExactComplex> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rnd_gauss(max_num, max_den));
    if (c.back().is_zero()) c.back() = ExactComplex(1);
    return CPoly(std::move(c));
}

ExpPoly rnd_exppoly()
{
    const int nrates = static_cast<int>(rnd(1, 4));
    std::vector<ExpTerm> terms;
    std::vector<ExactComplex> used;
    while (static_cast<int>(terms.size()) < nrates) {
        const ExactComplex rate = rnd_gauss(6, 2);
        bool dup = false;
        for (const auto& u : used) dup = dup || u == rate;
        if (dup) continue;
        used.push_back(rate);
        terms.push_back({rate, rnd_poly(static_cast<int>(rnd(0, 4)), 5, 3)});
    }
    return ExpPoly(std::move(terms));
}

std::string q_text(const Rational& q)
{
    return "(" + q.get_str() + ")";
}

bool freqs_equal(const std::vector<double>& got, const std::vector<double>& want)
{
    if (got.size() != want.size()) return false;
    for (std::size_t k = 0; k < got.size(); ++k)
        if (std::abs(got[k] - want[k]) > kFrequencyTolerance * std::max(1.0, std::abs(want[k]))) return false;
    return true;
}

std::string show(const std::vector<double>& f)
{
    std::ostringstream out;
    out.precision(15);
    out << "{";
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? ", " : "") << f[k];
    return out.str() + "}";
}

// Criterion bodies throw Failure with a reason, or return a short summary.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what)
{
    if (!cond) throw Failure(what);
}

// ---------------------------------------------------------------------------

std::string criterion1()
{
    const auto start = std::chrono::steady_clock::now();
    int checks = 0;
    for (int n = 0; n < 20; ++n) {
        const Rational w(rnd(1, 80), 8);
        const Rational phi(rnd(-50, 50), 16);
        const CPoly p = [] {
            std::vector<ExactComplex> c;
            const int deg = static_cast<int>(rnd(0, 3));
            for (int k = 0; k <= deg; ++k) c.push_back(ExactComplex(Rational(rnd(-9, 9))));
            c.back() = ExactComplex(Rational(rnd(1, 9)));
            return CPoly(std::move(c));
        }();
        std::string ptext = "(";
        for (int k = 0; k <= p.degree(); ++k)
            ptext += (k ? " + " : "") + q_text(p.coeff(static_cast<unsigned>(k)).re()) + "*t^" + std::to_string(k);
        ptext += ")";
        const std::string tone = "sin(" + q_text(w) + "*t + " + q_text(phi) + ")";
        const std::vector<double> want{-w.get_d(), w.get_d()};
        for (const std::string& text : {tone, ptext + "*" + tone}) {
            const Spectrum s = analyze(parse(text)).spectrum;
            require(freqs_equal(s.frequencies, want), text + " -> " + show(s.frequencies));
            ++checks;
        }
        const Spectrum sp = analyze(parse(ptext)).spectrum;
        require(sp.frequencies.empty(), ptext + " -> " + show(sp.frequencies));
        ++checks;
    }
    for (const char* d : {"dirac()", "3*dirac()", "-1/2*dirac()"}) {
        require(analyze(parse(d)).spectrum.frequencies.empty(), std::string(d) + " has frequencies");
        ++checks;
    }
    for (int n = 0; n < 20; ++n) {
        std::vector<std::pair<int, ExactComplex>> terms;
        const int nt = static_cast<int>(rnd(1, 4));
        for (int k = 0; k < nt; ++k) terms.emplace_back(static_cast<int>(rnd(-5, 5)), rnd_gauss(9, 4, true));
        const RatFunc r = laurent(terms);
        require(spectrum_of_rational(r).frequencies.empty(), "Laurent " + r.to_string() + " has frequencies");
        ++checks;
    }
    for (int n = 0; n < 20; ++n) {
        CPoly den(1);
        const int np = static_cast<int>(rnd(1, 4));
        for (int k = 0; k < np; ++k)
            den *= CPoly::linear(ExactComplex(rnd_rational(20, 7))).pow(static_cast<unsigned>(rnd(1, 3)));
        std::vector<ExactComplex> num;
        for (int k = 0; k < den.degree(); ++k) num.push_back(ExactComplex(rnd_rational(9, 5)));
        num.push_back(ExactComplex(rnd_rational(9, 5, true)));
        const RatFunc r(CPoly(std::move(num)), den);
        require(spectrum_of_rational(r).frequencies.empty(), "real-pole " + r.to_string() + " has frequencies");
        ++checks;
    }
    for (int n = 0; n < 10; ++n) {
        const Rational w(rnd(1, 60), rnd(1, 4));
        const double wd = w.get_d();
        const std::string sinc = "sinc(" + w.get_str() + ")";
        const Analysis a = analyze(parse(sinc));
        require(freqs_equal(a.spectrum.frequencies, {-wd, wd}), sinc + " -> " + show(a.spectrum.frequencies));
        require(a.finite_points.size() == 2, sinc + ": expected two singular points");
        for (const auto& p : a.finite_points) {
            require(same_point(p.location, {0.0, p.location.imag() > 0 ? wd : -wd}), sinc + ": point location");
            require(p.refinement == Refinement::logarithmic && p.kind == FuchsKind::regular,
                    sinc + ": point is not a regular logarithmic singularity");
        }
        const std::string rcos = "rcos(" + w.get_str() + ")";
        const Spectrum rs = analyze(parse(rcos)).spectrum;
        require(freqs_equal(rs.frequencies, {-wd, wd}), rcos + " -> " + show(rs.frequencies));
        checks += 2;
    }
    for (int n = 0; n < 10; ++n) {
        Rational lag(rnd(1, 40), rnd(1, 8));
        if (n % 2) lag = -lag;
        const std::string d = "delay(" + lag.get_str() + ")";
        const Spectrum s = analyze(parse(d)).spectrum;
        require(s.frequencies.empty() && !s.infinite_singularity, d + " has a nonempty spectrum");
        ++checks;
    }
    for (int n = 0; n < 10; ++n) {
        const Rational a = rnd_rational(9, 4, true);
        const std::string c = "chirp(" + a.get_str() + ", " + rnd_rational(9, 4).get_str() + ", " +
                              rnd_rational(9, 4).get_str() + ")";
        const Spectrum s = analyze(parse(c)).spectrum;
        require(s.frequencies.empty(), c + " has frequencies " + show(s.frequencies));
        require(s.infinite_singularity, c + ": infinite_singularity not set");
        ++checks;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
    std::ostringstream out;
    out << checks << " spectra, " << std::setprecision(3) << secs << " s";
    return out.str();
}

std::string criterion2()
{
    double worst = 0.0;
    for (int n = 0; n < 500; ++n) {
        const ExpPoly x = rnd_exppoly();
        const ExpPoly back = to_exppoly(to_rational(x));
        const double d = coefficient_distance(back, x);
        worst = std::max(worst, d);
        require(d <= 1e-9, "ExpPoly round trip off by " + std::to_string(d) + " for " + x.to_string());
    }
    double worst_r = 0.0;
    int numeric = 0;
    for (int n = 0; n < 500; ++n) {
        CPoly den;
        if (n % 2 == 0) {
            // Gaussian-rational poles with multiplicities: the exact path.
            den = CPoly(1);
            const int np = static_cast<int>(rnd(1, 4));
            for (int k = 0; k < np; ++k) den *= CPoly::linear(rnd_gauss(6, 3)).pow(static_cast<unsigned>(rnd(1, 3)));
        } else {
            // Integer coefficients: generally irrational roots, found numerically.
            std::vector<ExactComplex> c;
            const int deg = static_cast<int>(rnd(1, 5));
            for (int k = 0; k < deg; ++k) c.push_back(ExactComplex(Rational(rnd(-9, 9))));
            c.push_back(ExactComplex(1));
            den = CPoly(std::move(c));
        }
        const CPoly num = rnd_poly(static_cast<int>(rnd(0, den.degree() - 1)), 9, 4);
        const RatFunc r(num, den);
        if (r.is_zero()) continue;
        const PartialFractions pf = partial_fractions(r);
        numeric += pf.exact ? 0 : 1;
        const RatFunc back = to_rational(to_exppoly(r));
        const double scale = std::max({1.0, r.num().norm_inf(), r.den().norm_inf()});
        const double d = coefficient_distance(back, r) / scale;
        worst_r = std::max(worst_r, d);
        require(d <= 1e-9, "RatFunc round trip off by " + std::to_string(d) + " for " + r.to_string());
    }
    std::ostringstream out;
    out << "500+500 cases (" << numeric << " via numeric roots), worst " << std::scientific << std::setprecision(1)
        << std::max(worst, worst_r);
    return out.str();
}

std::string criterion3()
{
    for (int n = 0; n < 200; ++n) {
        const ExpPoly x = rnd_exppoly();
        require(to_rational(mult_by_minus_t(x)) == alg_deriv(to_rational(x)), "mismatch for " + x.to_string());
    }
    return "200 exact cases";
}

WeylOp rnd_op()
{
    std::vector<RatFunc> c;
    const int order = static_cast<int>(rnd(0, 2));
    for (int k = 0; k <= order; ++k) {
        CPoly den = rnd_poly(static_cast<int>(rnd(0, 1)), 4, 2);
        if (den.is_zero()) den = CPoly(1);
        c.emplace_back(rnd_poly(static_cast<int>(rnd(0, 2)), 4, 2), den);
    }
    if (c.back().is_zero()) c.back() = RatFunc(1);
    return WeylOp(std::move(c));
}

std::string criterion4()
{
    const WeylOp d = WeylOp::derivation();
    const WeylOp s = WeylOp::multiplication(RatFunc::s());
    require(d * s - s * d == WeylOp::identity(), "[d/ds, s] = " + (d * s - s * d).to_string());
    for (int n = 0; n < 100; ++n) {
        const WeylOp a = rnd_op(), b = rnd_op(), c = rnd_op();
        require((a * b) * c == a * (b * c), "associativity fails for " + a.to_string() + ", " + b.to_string() +
                                                ", " + c.to_string());
    }
    return "commutator exact, 100 associative triples";
}

double max_interior_error(double rate)
{
    const SignalExpr e = parse("sin(2*t)");
    SampledSignal sig;
    const int n = static_cast<int>(std::lround(3.0 * rate));
    for (int k = 0; k <= n; ++k) {
        const double t = k / rate;
        sig.times.push_back(t);
        sig.values.push_back(std::sin(2.0 * t));
    }
    const PhiTrace fit = phi_fitted(sig, 11, 3);
    double worst = 0.0;
    for (std::size_t k = 0; k < fit.times.size(); ++k)
        worst = std::max(worst, std::abs(fit.phi[k] - phi_symbolic(e, fit.times[k])));
    return worst;
}

std::string criterion5()
{
    for (int n = 0; n < 50; ++n) {
        const Rational a(rnd(-40, 40), 8);
        const Rational w(rnd(1, 48), 8);
        const double t = static_cast<double>(rnd(0, 4000)) / 1000.0;
        const SignalExpr e = parse(q_text(a) + "*sin(" + q_text(w) + "*t)");
        const double ad = a.get_d(), wd = w.get_d();
        // Closed form of the worked example. Applying the definition to
        // x'' = -w^2 A sin(w t) gives it with a leading minus sign.
        const double closed = wd * wd * ad * std::sin(wd * t) /
                              std::sqrt(1.0 + wd * wd * ad * ad * std::cos(wd * t) * std::cos(wd * t));
        const double phi = phi_symbolic(e, t);
        require(std::abs(phi + closed) <= 1e-12 * std::abs(closed) + 1e-300,
                "Phi mismatch at A=" + a.get_str() + ", w=" + w.get_str() + ", t=" + std::to_string(t));
    }
    const double e200 = max_interior_error(200.0);
    const double e400 = max_interior_error(400.0);
    require(e200 <= 1e-3, "fitted error at 200 Hz is " + std::to_string(e200));
    const double order = std::log2(e200 / e400);
    require(order >= 1.0, "empirical order " + std::to_string(order));
    std::ostringstream out;
    out << "50 closed-form cases; fitted error " << std::scientific << std::setprecision(2) << e200
        << " at 200 Hz, order " << std::fixed << std::setprecision(2) << order;
    return out.str();
}

std::string criterion6()
{
    const SignalExpr e = parse("sin(2*t)");
    const ExpPoly p = taylor_truncate(e, Rational(0), 5);
    require(spectrum_of_exppoly(p).frequencies.empty(), "truncation has frequencies");
    require(spectrum_of_rational(to_rational(p)).frequencies.empty(), "truncation image has frequencies");
    require(!analyze(e).spectrum.frequencies.empty(), "the signal itself has empty spectrum");
    double sup = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        const double t = 0.1 * k / 1000.0;
        sup = std::max(sup, std::abs(p.eval(t) - std::sin(2.0 * t)));
    }
    require(sup <= 1e-8, "sup error " + std::to_string(sup));
    std::ostringstream out;
    out << "sup error " << std::scientific << std::setprecision(2) << sup << " on [0, 0.1], spectrum empty";
    return out.str();
}

bool same_spectrum(const Spectrum& a, const Spectrum& b)
{
    if (a.frequencies != b.frequencies || a.infinite_singularity != b.infinite_singularity) return false;
    if (a.sources.size() != b.sources.size()) return false;
    for (std::size_t k = 0; k < a.sources.size(); ++k) {
        const auto& x = a.sources[k];
        const auto& y = b.sources[k];
        if (x.location != y.location || x.kind != y.kind || x.order != y.order || x.fuchs != y.fuchs ||
            x.confirmed != y.confirmed)
            return false;
    }
    return to_json(a).dump() == to_json(b).dump();
}

std::string criterion7()
{
    for (std::size_t n : {64u, 100u}) {
        SampledSignal imp;
        for (std::size_t k = 0; k < n; ++k) {
            imp.times.push_back(static_cast<double>(k));
            imp.values.push_back(k == 0 ? 1.0 : 0.0);
        }
        for (double m : dft(imp).magnitudes) require(std::abs(m - 1.0) <= 1e-12, "impulse transform not flat");
    }
    std::normal_distribution<double> gauss;
    for (std::size_t n : {256u, 300u}) {
        cvec x(n);
        double et = 0.0;
        for (auto& v : x) {
            v = {gauss(rng), gauss(rng)};
            et += std::norm(v);
        }
        const cvec fast = dft_auto(x);
        double ef = 0.0;
        for (const auto& v : fast) ef += std::norm(v);
        ef /= static_cast<double>(n);
        require(std::abs(ef - et) <= 1e-9 * et, "Parseval fails for N=" + std::to_string(n));
        if (n == 256) {
            const cvec slow = dft_direct(x);
            double scale = 0.0, diff = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                scale = std::max(scale, std::abs(slow[k]));
                diff = std::max(diff, std::abs(slow[k] - fast[k]));
            }
            require(diff <= 1e-9 * scale, "radix-2 and direct transforms disagree");
        }
    }
    const std::pair<double, double> cardinal[] = {{0, 3}, {2.9, 3}, {-2.9, 3}, {3.1, 0}, {-3.1, 0}};
    for (auto [xi, want] : cardinal)
        require(sinc_fourier_closed_form(3.0, xi) == want, "cardinal value at " + std::to_string(xi));
    int compared = 0;
    for (const char* e : {"dirac()", "2*dirac()", "sinc(3)", "-2*sinc(1/2)", "sin(3*t)", "sin(3*t + 1)",
                          "0.5*sin(2*t)"}) {
        const SignalExpr x = parse(e);
        const ContrastReport r = contrast_report(x);
        require(same_spectrum(r.algebraic, analyze(x).spectrum), std::string("contrast column differs for ") + e);
        for (const auto& row : r.sweep) {
            require(same_spectrum(row.algebraic, analyze(build::sinc(rational_from_double(row.omega))).spectrum),
                    "sweep row differs");
            ++compared;
        }
        ++compared;
    }
    const ContrastReport tone = contrast_report(parse("sin(3*t)"));
    const double width = tone.dft.bin_frequencies[1] - tone.dft.bin_frequencies[0];
    require(tone.dominant.size() == 2 && std::abs(tone.dominant[0] + 3.0) <= width &&
                std::abs(tone.dominant[1] - 3.0) <= width,
            "dominant bins " + show(tone.dominant));
    return "impulse flat, Parseval, cardinal values exact, " + std::to_string(compared) +
           " contrast columns identical";
}

struct Captured {
    std::string out;
    int status;
};

Captured run_cli(const std::string& args)
{
    const std::string cmd = std::string(ALGSPEC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Failure("cannot run " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int raw = pclose(pipe);
    return {out, WIFEXITED(raw) ? WEXITSTATUS(raw) : -1};
}

std::string criterion8()
{
    const auto dir = std::filesystem::temp_directory_path() / ("algspec_acceptance_" + std::to_string(getpid()));
    std::filesystem::create_directories(dir);
    const auto csv = dir / "tone.csv";
    {
        std::ofstream f(csv);
        f << "t,x\n";
        f.precision(17);
        for (int k = 0; k <= 600; ++k) f << k / 200.0 << "," << std::sin(2.0 * k / 200.0) << "\n";
    }
    const std::vector<std::string> invocations = {
        "spectrum 'sin(3*t)' --json",
        "spectrum 'dirac()'",
        "spectrum 'sinc(3)' --explain",
        "spectrum 'chirp(1,2,3)' --json --explain",
        "opform '3*t^2*exp(-t) + sin(2*t)'",
        "opform 'rcos(2)' --json",
        "contrast 'sinc(2)' --json",
        "contrast 'sin(3*t)'",
        "instfreq 'sin(2*t)' --from 0 --to 1 --step 0.1 --json",
        "instfreq --csv " + csv.string() + " --window 11 --degree 3 --json",
        "selftest",
        "spectrum 'sinc(0)'",
    };
    for (const auto& inv : invocations) {
        const Captured a = run_cli(inv);
        const Captured b = run_cli(inv);
        require(a.out == b.out && a.status == b.status, "output differs between runs of: algspec " + inv);
    }
    std::filesystem::remove_all(dir);

    const Captured st = run_cli("selftest");
    require(st.status == 0, "selftest exit status " + std::to_string(st.status) + "\n" + st.out);

    // Every worked example of the theory has a selftest case.
    const std::vector<std::string> required = {
        "sinc(0) is rejected",
        "sin(w t) is an exponential polynomial",
        "the Dirac impulse has its own class",
        "3/(s^2+9) has simple poles at +-3i",
        "1/((s-1)^2+16) has frequencies +-4",
        "Laurent polynomial s^-3 + 2s has empty spectrum",
        "the image 1 has empty spectrum",
        "sin(3t) maps to 3/(s^2+9)",
        "3/(s^2+9) maps back to sin(3t)",
        "the Dirac impulse maps to 1 with empty spectrum",
        "the discrete impulse has a flat transform",
        "Taylor truncation of sin(2t) has empty spectrum",
        "sinc(3) satisfies dx/ds = -3/(s^2+9)",
        "delay(0.5) satisfies (d/ds + 1/2) x = 0",
        "chirp(1,2,0) satisfies (2i d/ds + s - 2i) x = 1",
        "sinc(3): logarithmic regular points at +-3i",
        "rcos(2): regular candidates at +-2i",
        "delay: no finite singular point",
        "chirp(1,0,0): irregular at infinity",
        "sinc(5) has frequencies +-5",
        "rcos(2) has frequencies +-2",
        "chirp(1,2,3): empty spectrum, singular at infinity",
        "Phi of sin(2t) at pi/4 is -4",
        "Phi of A sin(w t) matches the closed form in magnitude",
        "Phi of a constant signal is 0",
        "Ville column of sin(2t) is the constant 2",
        "sinc transform: 3 at 0 and 0 at 5 for omega 3",
        "contrast: Dirac is empty algebraically and flat in Fourier",
        "contrast: sinc sweep keeps +-w while the support widens",
        "cli: spectrum of sin(3t) in JSON",
        "cli: spectrum of dirac() is empty",
    };
    std::set<std::string> present;
    for (const auto& c : cli::run_selftest()) {
        require(c.ok, "selftest case failed: " + c.name + ": " + c.detail);
        present.insert(c.name);
    }
    for (const auto& name : required) require(present.count(name) == 1, "selftest lacks case: " + name);
    return std::to_string(invocations.size()) + " invocations byte-identical, selftest " +
           std::to_string(present.size()) + "/" + std::to_string(present.size()) + " green";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"worked-example spectra", criterion1},
        {"exponential polynomial / rational bijection round trip", criterion2},
        {"multiplication by -t is the algebraic derivative", criterion3},
        {"Weyl relation and associativity", criterion4},
        {"instantaneous frequency formula and fitted estimate", criterion5},
        {"Taylor truncation has empty spectrum", criterion6},
        {"Fourier contrast", criterion7},
        {"CLI determinism and selftest", criterion8},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string line;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            line = criteria[k].second();
            ok = true;
        } catch (const std::exception& e) {
            line = e.what();
        }
        failed += ok ? 0 : 1;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream when;
        when << std::fixed << std::setprecision(2) << secs << " s";
        line += " [" + when.str() + "]";
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k + 1 << ": " << criteria[k].first << " -- "
                  << line << std::endl;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
