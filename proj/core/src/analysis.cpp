#include "algspec/analysis.hpp"

#include "algspec/error.hpp"

#include <sstream>

namespace algspec {

Analysis analyze(const SignalExpr& e)
{
    Analysis a(e);
    a.cls = classify(e);
    switch (a.cls) {
    case SignalClass::ExpPolynomial:
        a.exppoly = from_signal(e);
        a.image = to_rational(*a.exppoly);
        a.spectrum = spectrum_of_exppoly(*a.exppoly);
        break;
    case SignalClass::Dirac: {
        const auto sa = as_scaled_atom(e);
        a.image = dirac_image() * RatFunc(sa->scale);
        a.spectrum = spectrum_of_rational(*a.image);
        break;
    }
    case SignalClass::OdeDefined:
        a.ode = catalog_equation(e);
        a.finite_points = finite_singularities(*a.ode);
        a.infinity = singularity_at_infinity(*a.ode);
        a.spectrum = spectrum_of_ode(*a.ode);
        break;
    case SignalClass::Unsupported:
        throw UnsupportedError("'" + pretty_print(e) +
                               "' is neither an exponential polynomial, a Dirac impulse nor a catalog signal");
    }
    return a;
}

namespace {

std::string format_point(std::complex<double> z)
{
    std::ostringstream out;
    out.precision(12);
    out << round_significant(z.real(), 12);
    const double im = round_significant(z.imag(), 12);
    out << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
    return out.str();
}

} // namespace

namespace {

void explain_points(std::ostream& out, const OdeSystem& sys, const std::vector<SingularPoint>& points,
                    const std::optional<SingularPoint>& inf)
{
    out << "equation: " << sys.to_string() << "\n";
    if (points.empty()) out << "finite singular points: none\n";
    for (const auto& p : points) {
        out << "  point " << format_point(p.location) << ": " << to_string(p.kind) << ", "
            << to_string(p.refinement);
        if (p.refinement == Refinement::pole) out << " of order " << p.pole_order;
        out << (p.confirmed ? "" : " (candidate)") << "\n";
    }
    if (!inf) {
        out << "infinity: ordinary\n";
    } else {
        out << "infinity: " << to_string(inf->kind);
        if (inf->kind == FuchsKind::irregular) out << ", rank " << inf->rank;
        out << "\n";
    }
}

void explain_frequencies(std::ostream& out, const Spectrum& s)
{
    out << "frequencies: {";
    for (std::size_t k = 0; k < s.frequencies.size(); ++k)
        out << (k ? ", " : "") << round_significant(s.frequencies[k], 12);
    out << "}\n";
    out << "infinite singularity: " << (s.infinite_singularity ? "yes" : "no") << "\n";
}

} // namespace

std::string explain(const Analysis& a)
{
    std::ostringstream out;
    out.precision(12);
    out << "expression: " << pretty_print(a.expr) << "\n";
    out << "class: " << to_string(a.cls) << "\n";
    if (a.exppoly) out << "time form: " << a.exppoly->to_string() << "\n";
    if (a.image) out << "image: " << a.image->to_string() << "\n";
    if (a.ode) {
        explain_points(out, *a.ode, a.finite_points, a.infinity);
    } else {
        for (const auto& src : a.spectrum.sources)
            out << "  pole " << format_point(src.location) << " of order " << src.order << "\n";
    }
    explain_frequencies(out, a.spectrum);
    return out.str();
}

std::string explain(const OdeSystem& sys)
{
    std::ostringstream out;
    out.precision(12);
    explain_points(out, sys, finite_singularities(sys), singularity_at_infinity(sys));
    explain_frequencies(out, spectrum_of_ode(sys));
    return out.str();
}

} // namespace algspec
