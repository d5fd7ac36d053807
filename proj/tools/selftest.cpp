#include "cli.hpp"

#include "algspec/analysis.hpp"
#include "algspec/error.hpp"
#include "algspec/fourier.hpp"
#include "algspec/instfreq.hpp"
#include "algspec/opcalc.hpp"
#include "algspec/roots.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace algspec::cli {

namespace {

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

std::string show(const std::vector<double>& f)
{
    std::ostringstream out;
    out.precision(12);
    out << "{";
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? ", " : "") << f[k];
    out << "}";
    return out.str();
}

std::string expect_freqs(const Spectrum& s, const std::vector<double>& want)
{
    bool ok = s.frequencies.size() == want.size();
    for (std::size_t k = 0; ok && k < want.size(); ++k)
        ok = std::abs(s.frequencies[k] - want[k]) <= kFrequencyTolerance * std::max(1.0, std::abs(want[k]));
    return ok ? "" : "frequencies " + show(s.frequencies) + ", expected " + show(want);
}

std::string expect_true(bool cond, const std::string& what)
{
    return cond ? "" : what;
}

RatFunc rat(std::vector<ExactComplex> num, std::vector<ExactComplex> den)
{
    return RatFunc(CPoly(std::move(num)), CPoly(std::move(den)));
}

ExactComplex q(long p, long r = 1)
{
    return ExactComplex(Rational(p, r));
}

ExactComplex qi(long p, long r = 1)
{
    return ExactComplex(Rational(0), Rational(p, r));
}

std::string expect_equation(const OdeSystem& sys, const WeylOp& op, const RatFunc& rhs)
{
    if (sys.op != op) return "operator " + sys.op.to_string() + ", expected " + op.to_string();
    if (sys.rhs != rhs) return "rhs " + sys.rhs.to_string() + ", expected " + rhs.to_string();
    return "";
}

std::string expect_points(const std::vector<SingularPoint>& pts, const std::vector<std::complex<double>>& where,
                          FuchsKind kind, std::optional<Refinement> refinement)
{
    if (pts.size() != where.size()) return std::to_string(pts.size()) + " singular points, expected " +
                                           std::to_string(where.size());
    for (std::size_t k = 0; k < where.size(); ++k) {
        if (!same_point(pts[k].location, where[k], 1e-9)) return "singular point location mismatch";
        if (pts[k].kind != kind) return std::string("point classified ") + to_string(pts[k].kind);
        if (refinement && pts[k].refinement != *refinement)
            return std::string("point refined as ") + to_string(pts[k].refinement);
    }
    return "";
}

std::vector<std::pair<std::string, Check>> catalog()
{
    const RatFunc s = RatFunc::s();
    const WeylOp d = WeylOp::derivation();
    std::vector<std::pair<std::string, Check>> c;

    c.emplace_back("sinc(0) is rejected", [] {
        try {
            parse("sinc(0)");
        } catch (const DomainError&) {
            return std::string();
        }
        return std::string("no domain error");
    });
    c.emplace_back("sin(w t) is an exponential polynomial", [] {
        return expect_true(classify(parse("sin(3*t)")) == SignalClass::ExpPolynomial, "wrong class");
    });
    c.emplace_back("the Dirac impulse has its own class", [] {
        return expect_true(classify(parse("dirac()")) == SignalClass::Dirac, "wrong class");
    });
    c.emplace_back("3/(s^2+9) has simple poles at +-3i", [] {
        const auto ps = poles(rat({q(3)}, {q(9), q(0), q(1)}));
        if (ps.size() != 2) return std::string("wrong pole count");
        for (const auto& p : ps)
            if (p.multiplicity != 1 || !same_point(p.approx(), {0.0, p.approx().imag() > 0 ? 3.0 : -3.0}, 1e-12))
                return std::string("wrong pole");
        return std::string();
    });
    c.emplace_back("1/((s-1)^2+16) has frequencies +-4", [] {
        return expect_freqs(spectrum_of_rational(rat({q(1)}, {q(17), q(-2), q(1)})), {-4.0, 4.0});
    });
    c.emplace_back("Laurent polynomial s^-3 + 2s has empty spectrum", [] {
        return expect_freqs(spectrum_of_rational(laurent({{-3, q(1)}, {1, q(2)}})), {});
    });
    c.emplace_back("the image 1 has empty spectrum", [] {
        return expect_freqs(spectrum_of_rational(RatFunc(1)), {});
    });
    c.emplace_back("sin(3t) maps to 3/(s^2+9)", [] {
        const RatFunc r = to_rational(from_signal(parse("sin(3*t)")));
        return expect_true(r == rat({q(3)}, {q(9), q(0), q(1)}), "image " + r.to_string());
    });
    c.emplace_back("3/(s^2+9) maps back to sin(3t)", [] {
        const ExpPoly x = to_exppoly(rat({q(3)}, {q(9), q(0), q(1)}));
        return expect_true(coefficient_distance(x, from_signal(parse("sin(3*t)"))) <= 1e-12,
                           "time form " + x.to_string());
    });
    c.emplace_back("the Dirac impulse maps to 1 with empty spectrum", [] {
        const Analysis a = analyze(parse("dirac()"));
        if (!a.image || *a.image != RatFunc(1)) return std::string("image is not 1");
        return expect_freqs(a.spectrum, {});
    });
    c.emplace_back("the discrete impulse has a flat transform", [] {
        SampledSignal imp;
        for (int k = 0; k < 64; ++k) {
            imp.times.push_back(k);
            imp.values.push_back(k == 0 ? 1.0 : 0.0);
        }
        for (double m : dft(imp).magnitudes)
            if (std::abs(m - 1.0) > 1e-12) return std::string("magnitude ") + std::to_string(m);
        return std::string();
    });
    c.emplace_back("Taylor truncation of sin(2t) has empty spectrum", [] {
        const ExpPoly p = taylor_truncate(parse("sin(2*t)"), Rational(0), 5);
        const ExpPoly want({{ExactComplex(), CPoly({q(0), q(2), q(0), q(-4, 3), q(0), q(4, 15)})}});
        if (coefficient_distance(p, want) > 1e-12) return "truncation " + p.to_string();
        return expect_freqs(spectrum_of_exppoly(p), {});
    });
    c.emplace_back("sinc(3) satisfies dx/ds = -3/(s^2+9)", [=] {
        return expect_equation(catalog_equation(parse("sinc(3)")), d, rat({q(-3)}, {q(9), q(0), q(1)}));
    });
    c.emplace_back("delay(0.5) satisfies (d/ds + 1/2) x = 0", [=] {
        return expect_equation(catalog_equation(parse("delay(0.5)")),
                               d + WeylOp::multiplication(RatFunc(q(1, 2))), RatFunc());
    });
    c.emplace_back("chirp(1,2,0) satisfies (2i d/ds + s - 2i) x = 1", [=] {
        return expect_equation(catalog_equation(parse("chirp(1,2,0)")),
                               WeylOp({s - RatFunc(qi(2)), RatFunc(qi(2))}), RatFunc(1));
    });
    c.emplace_back("sinc(3): logarithmic regular points at +-3i", [] {
        const auto pts = finite_singularities(catalog_equation(parse("sinc(3)")));
        return expect_points(pts, {{0, -3}, {0, 3}}, FuchsKind::regular, Refinement::logarithmic);
    });
    c.emplace_back("rcos(2): regular candidates at +-2i", [] {
        const auto pts = finite_singularities(catalog_equation(parse("rcos(2)")));
        return expect_points(pts, {{0, -2}, {0, 2}}, FuchsKind::regular, std::nullopt);
    });
    c.emplace_back("delay: no finite singular point", [] {
        for (const char* e : {"delay(0.5)", "delay(-2)"})
            if (!finite_singularities(catalog_equation(parse(e))).empty())
                return std::string(e) + " has finite singular points";
        return std::string();
    });
    c.emplace_back("chirp(1,0,0): irregular at infinity", [] {
        const auto inf = singularity_at_infinity(catalog_equation(parse("chirp(1,0,0)")));
        return expect_true(inf && inf->kind == FuchsKind::irregular, "infinity not irregular");
    });
    c.emplace_back("sinc(5) has frequencies +-5", [] {
        return expect_freqs(analyze(parse("sinc(5)")).spectrum, {-5.0, 5.0});
    });
    c.emplace_back("rcos(2) has frequencies +-2", [] {
        return expect_freqs(analyze(parse("rcos(2)")).spectrum, {-2.0, 2.0});
    });
    c.emplace_back("chirp(1,2,3): empty spectrum, singular at infinity", [] {
        const Spectrum sp = analyze(parse("chirp(1,2,3)")).spectrum;
        if (!sp.infinite_singularity) return std::string("infinite_singularity not set");
        return expect_freqs(sp, {});
    });
    c.emplace_back("Phi of sin(2t) at pi/4 is -4", [] {
        // x'' = -w^2 A sin(w t): the defining formula carries the sign of x''.
        const double v = phi_symbolic(parse("sin(2*t)"), std::numbers::pi / 4);
        return expect_true(std::abs(v + 4.0) <= 1e-12, "Phi = " + std::to_string(v));
    });
    c.emplace_back("Phi of A sin(w t) matches the closed form in magnitude", [] {
        const SignalExpr e = parse("1.5*sin(2*t)");
        for (double t : {0.1, 0.7, 1.3, 2.9}) {
            const double w = 2.0, a = 1.5;
            const double closed = w * w * a * std::sin(w * t) /
                                  std::sqrt(1.0 + w * w * a * a * std::cos(w * t) * std::cos(w * t));
            const double v = phi_symbolic(e, t);
            if (std::abs(v + closed) > 1e-12 * std::max(1.0, std::abs(closed)))
                return "Phi(" + std::to_string(t) + ") = " + std::to_string(v);
        }
        return std::string();
    });
    c.emplace_back("Phi of a constant signal is 0", [] {
        for (double t : {0.0, 0.5, 2.0})
            if (phi_symbolic(parse("7"), t) != 0.0) return std::string("nonzero Phi");
        return std::string();
    });
    c.emplace_back("Ville column of sin(2t) is the constant 2", [] {
        const VilleReport r = phi_vs_ville(parse("sin(2*t)"), {0.0, 0.4, 1.1, 2.5});
        for (const auto& row : r.rows) {
            if (row.ville != 2.0) return std::string("Ville value ") + std::to_string(row.ville);
            const double want = -4.0 * std::sin(2 * row.t) / std::sqrt(1 + 4 * std::cos(2 * row.t) * std::cos(2 * row.t));
            if (std::abs(row.phi - want) > 1e-12) return std::string("Phi column mismatch");
        }
        return std::string();
    });
    c.emplace_back("sinc transform: 3 at 0 and 0 at 5 for omega 3", [] {
        return expect_true(sinc_fourier_closed_form(3, 0) == 3.0 && sinc_fourier_closed_form(3, 5) == 0.0,
                           "closed form mismatch");
    });
    c.emplace_back("contrast: Dirac is empty algebraically and flat in Fourier", [] {
        const ContrastReport r = contrast_report(parse("dirac()"));
        if (!r.algebraic.frequencies.empty()) return std::string("algebraic spectrum not empty");
        for (double m : r.dft.magnitudes)
            if (std::abs(m - 1.0) > 1e-12) return std::string("transform not flat");
        return std::string();
    });
    c.emplace_back("contrast: sinc sweep keeps +-w while the support widens", [] {
        const ContrastReport r = contrast_report(parse("sinc(1)"));
        if (r.sweep.size() != 4) return std::string("sweep has ") + std::to_string(r.sweep.size()) + " rows";
        for (const auto& row : r.sweep) {
            std::string m = expect_freqs(row.algebraic, {-row.omega, row.omega});
            if (!m.empty()) return m;
            if (row.rect_high - row.rect_low != 2 * row.omega) return std::string("support width mismatch");
        }
        return std::string();
    });
    c.emplace_back("cli: spectrum of sin(3t) in JSON", [] {
        std::ostringstream out, err;
        if (main_entry({"spectrum", "sin(3*t)", "--json"}, out, err) != kOk) return "exit status: " + err.str();
        const auto j = nlohmann::json::parse(out.str());
        return expect_true(j["frequencies"] == nlohmann::json::array({-3, 3}) && j["infinite_singularity"] == false,
                           "output " + out.str());
    });
    c.emplace_back("cli: spectrum of dirac() is empty", [] {
        std::ostringstream out, err;
        if (main_entry({"spectrum", "dirac()", "--json"}, out, err) != kOk) return "exit status: " + err.str();
        const auto j = nlohmann::json::parse(out.str());
        return expect_true(j["frequencies"].empty(), "output " + out.str());
    });
    return c;
}

} // namespace

std::vector<SelftestCase> run_selftest()
{
    std::vector<SelftestCase> out;
    for (const auto& [name, check] : catalog()) {
        std::string detail;
        try {
            detail = check();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        out.push_back({name, detail.empty(), detail});
    }
    return out;
}

} // namespace algspec::cli
