#include "algspec/opcalc.hpp"

#include "algspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace algspec {

ExpPoly::ExpPoly(std::vector<ExpTerm> terms) : terms_(std::move(terms))
{
    normalize();
}

void ExpPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return compare(a.rate, b.rate) < 0; });
    std::vector<ExpTerm> merged;
    for (auto& term : terms_) {
        if (!merged.empty() && merged.back().rate == term.rate) merged.back().poly += term.poly;
        else merged.push_back(std::move(term));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const ExpTerm& term) { return term.poly.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

ExpPoly ExpPoly::constant(const ExactComplex& c)
{
    return ExpPoly({{ExactComplex(), CPoly(c)}});
}

ExpPoly ExpPoly::time()
{
    return ExpPoly({{ExactComplex(), CPoly::x()}});
}

ExpPoly ExpPoly::exponential(const ExactComplex& rate)
{
    return ExpPoly({{rate, CPoly(1)}});
}

bool ExpPoly::is_polynomial() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().rate.is_zero());
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o)
{
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o)
{
    std::vector<ExpTerm> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) out.push_back({a.rate + b.rate, a.poly * b.poly});
    terms_ = std::move(out);
    normalize();
    return *this;
}

ExpPoly ExpPoly::operator*(const ExactComplex& c) const
{
    ExpPoly r = *this;
    for (auto& term : r.terms_) term.poly *= c;
    r.normalize();
    return r;
}

ExpPoly ExpPoly::pow(unsigned k) const
{
    ExpPoly result = constant(ExactComplex(1));
    ExpPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

bool operator==(const ExpPoly& a, const ExpPoly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].rate != b.terms_[k].rate || a.terms_[k].poly != b.terms_[k].poly) return false;
    }
    return true;
}

std::complex<double> ExpPoly::eval(double t) const
{
    std::complex<double> acc = 0.0;
    for (const auto& term : terms_)
        acc += term.poly.evaluate(std::complex<double>(t)) * std::exp(term.rate.to_complex() * t);
    return acc;
}

std::string ExpPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& term : terms_) {
        if (!out.empty()) out += " + ";
        std::string p = "(" + term.poly.to_string("t") + ")";
        if (term.rate.is_zero()) out += p;
        else out += p + "*exp(" + to_display_string(term.rate) + "*t)";
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExactComplex unit_phasor(const Rational& phase)
{
    if (sgn(phase) == 0) return ExactComplex(1);
    const double p = phase.get_d();
    return {rational_from_double(std::cos(p)), rational_from_double(std::sin(p))};
}

ExpPoly expand(const SignalExpr& e)
{
    return std::visit(overloaded{
        [](const expr::Const& x) { return ExpPoly::constant(x.value); },
        [](const expr::TimeVar&) { return ExpPoly::time(); },
        [](const expr::Add& x) {
            ExpPoly acc;
            for (const auto& term : x.terms) acc += expand(term);
            return acc;
        },
        [](const expr::Mul& x) {
            ExpPoly acc = ExpPoly::constant(ExactComplex(1));
            for (const auto& f : x.factors) acc *= expand(f);
            return acc;
        },
        [](const expr::Pow& x) { return expand(x.base).pow(x.k); },
        [](const expr::Exp& x) { return ExpPoly::exponential(x.rate); },
        [](const expr::Sin& x) {
            // (e^{i phi} e^{i w t} - e^{-i phi} e^{-i w t}) / (2i)
            const ExactComplex iw = ExactComplex(Rational(0), x.omega);
            const ExactComplex z = unit_phasor(x.phase);
            const ExactComplex two_i(Rational(0), Rational(2));
            return ExpPoly({{iw, CPoly(z / two_i)}, {-iw, CPoly(-(z.conj() / two_i))}});
        },
        [](const expr::Cos& x) {
            const ExactComplex iw = ExactComplex(Rational(0), x.omega);
            const ExactComplex z = unit_phasor(x.phase);
            const ExactComplex half(Rational(1, 2));
            return ExpPoly({{iw, CPoly(z * half)}, {-iw, CPoly(z.conj() * half)}});
        },
        [](const auto&) -> ExpPoly {
            throw UnsupportedError("expression is not an exponential polynomial");
        },
    }, e.node().v);
}

} // namespace

ExpPoly from_signal(const SignalExpr& e)
{
    if (classify(e) != SignalClass::ExpPolynomial)
        throw UnsupportedError("'" + pretty_print(e) + "' is not an exponential polynomial");
    return expand(e);
}

RatFunc to_rational(const ExpPoly& x)
{
    if (x.is_zero()) return RatFunc();
    // Each term is N_i / (s - a_i)^(d_i + 1) with N_i(a_i) = d_i! * lead != 0,
    // and the rates are distinct, so the common-denominator sum is reduced.
    std::vector<CPoly> nums;
    std::vector<CPoly> dens;
    for (const auto& term : x.terms()) {
        const unsigned d = static_cast<unsigned>(term.poly.degree());
        const CPoly lin = CPoly::linear(term.rate);
        CPoly n;
        for (unsigned k = 0; k <= d; ++k) {
            const ExactComplex c = term.poly.coeff(k);
            if (c.is_zero()) continue;
            n += (c * ExactComplex(factorial(k))) * lin.pow(d - k);
        }
        nums.push_back(std::move(n));
        dens.push_back(lin.pow(d + 1));
    }
    CPoly den(1);
    for (const auto& d : dens) den *= d;
    CPoly num;
    for (std::size_t i = 0; i < nums.size(); ++i) {
        CPoly term = nums[i];
        for (std::size_t j = 0; j < dens.size(); ++j)
            if (j != i) term *= dens[j];
        num += term;
    }
    return RatFunc(num, den);
}

ExpPoly to_exppoly(const RatFunc& r, const RootOptions& opts)
{
    if (!r.is_strictly_proper())
        throw DomainError("only strictly proper rational functions have an exponential-polynomial image");
    if (r.is_zero()) return {};
    const PartialFractions pf = partial_fractions(r, opts);
    std::vector<ExpTerm> terms;
    for (const auto& t : pf.terms) {
        const unsigned k = static_cast<unsigned>(t.order - 1);
        terms.push_back({t.pole, CPoly::monomial(t.coefficient / ExactComplex(factorial(k)), k)});
    }
    return ExpPoly(std::move(terms));
}

RatFunc dirac_image()
{
    return RatFunc(1);
}

ExpPoly mult_by_minus_t(const ExpPoly& x)
{
    const CPoly minus_t = -CPoly::x();
    std::vector<ExpTerm> terms;
    for (const auto& term : x.terms()) terms.push_back({term.rate, term.poly * minus_t});
    return ExpPoly(std::move(terms));
}

Spectrum spectrum_of_exppoly(const ExpPoly& x)
{
    std::vector<SingularityRecord> records;
    for (const auto& term : x.terms()) {
        SingularityRecord rec;
        rec.location = term.rate.to_complex();
        rec.kind = SourceKind::pole;
        rec.order = term.poly.degree() + 1;
        records.push_back(rec);
    }
    return make_spectrum(std::move(records), false);
}

ExpPoly taylor_truncate(const SignalExpr& e, const Rational& t0, unsigned order)
{
    if (!is_evaluable(e)) throw DomainError("Taylor truncation needs a pointwise-differentiable signal");
    const double at = t0.get_d();
    std::vector<ExactComplex> coeffs;
    SignalExpr d = e;
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0) d = diff_time(d);
        const std::complex<double> v = eval(d, at);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("derivative of order " + std::to_string(k) + " is not finite at t0");
        coeffs.push_back(ExactComplex::from_complex(v) / ExactComplex(factorial(k)));
    }
    // Polynomial in (t - t0), re-expanded in t.
    CPoly around(std::move(coeffs));
    CPoly in_t = around.taylor_shift(ExactComplex(-t0));
    return ExpPoly({{ExactComplex(), in_t}});
}

double coefficient_distance(const ExpPoly& a, const ExpPoly& b, double rate_tol)
{
    double dist = 0.0;
    std::vector<bool> used(b.terms().size(), false);
    auto poly_norm = [](const CPoly& p) { return p.norm_inf(); };
    for (const auto& ta : a.terms()) {
        const auto ra = ta.rate.to_complex();
        std::size_t match = b.terms().size();
        for (std::size_t j = 0; j < b.terms().size(); ++j) {
            if (!used[j] && same_point(ra, b.terms()[j].rate.to_complex(), rate_tol)) {
                match = j;
                break;
            }
        }
        if (match == b.terms().size()) {
            dist = std::max(dist, poly_norm(ta.poly));
            continue;
        }
        used[match] = true;
        const auto& tb = b.terms()[match];
        dist = std::max(dist, std::abs(ra - tb.rate.to_complex()));
        const int deg = std::max(ta.poly.degree(), tb.poly.degree());
        for (int k = 0; k <= deg; ++k) {
            const auto ca = ta.poly.coeff(static_cast<unsigned>(k)).to_complex();
            const auto cb = tb.poly.coeff(static_cast<unsigned>(k)).to_complex();
            dist = std::max(dist, std::abs(ca - cb));
        }
    }
    for (std::size_t j = 0; j < b.terms().size(); ++j)
        if (!used[j]) dist = std::max(dist, poly_norm(b.terms()[j].poly));
    return dist;
}

double coefficient_distance(const RatFunc& a, const RatFunc& b)
{
    double dist = 0.0;
    auto cmp_poly = [&](const CPoly& p, const CPoly& q) {
        const int deg = std::max(p.degree(), q.degree());
        for (int k = 0; k <= deg; ++k)
            dist = std::max(dist, std::abs(p.coeff(static_cast<unsigned>(k)).to_complex() -
                                           q.coeff(static_cast<unsigned>(k)).to_complex()));
    };
    cmp_poly(a.num(), b.num());
    cmp_poly(a.den(), b.den());
    return dist;
}

} // namespace algspec
