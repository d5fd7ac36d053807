#include "algspec/weylode.hpp"

#include "algspec/error.hpp"
#include "algspec/roots.hpp"

#include <algorithm>
#include <cmath>

namespace algspec {

WeylOp::WeylOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void WeylOp::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

WeylOp WeylOp::derivation()
{
    return WeylOp({RatFunc(), RatFunc(1)});
}

WeylOp WeylOp::multiplication(const RatFunc& r)
{
    return WeylOp({r});
}

RatFunc WeylOp::coeff(unsigned k) const
{
    return k < c_.size() ? c_[k] : RatFunc();
}

WeylOp& WeylOp::operator+=(const WeylOp& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    // D^i b_j = sum_l C(i, l) b_j^(l) D^(i - l)
    const std::size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<RatFunc> out(n);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        std::vector<RatFunc> derivs{b.c_[j]};
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            while (derivs.size() <= i) derivs.push_back(alg_deriv(derivs.back()));
            for (std::size_t l = 0; l <= i; ++l) {
                if (derivs[l].is_zero()) continue;
                RatFunc term = a.c_[i] * derivs[l];
                if (l > 0) term *= RatFunc(ExactComplex(binomial(static_cast<unsigned>(i), static_cast<unsigned>(l))));
                out[i - l + j] += term;
            }
        }
    }
    return WeylOp(std::move(out));
}

WeylOp WeylOp::pow(unsigned k) const
{
    WeylOp result = identity();
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

std::string WeylOp::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int k = order(); k >= 0; --k) {
        const RatFunc& r = c_[static_cast<std::size_t>(k)];
        if (r.is_zero()) continue;
        const std::string d = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
        std::string coef = r.to_string(var);
        bool negative = false;
        // A single term such as "-2", "3i" or "-1/2*s" needs no parentheses.
        const bool single = coef.find(' ') == std::string::npos;
        if (single && coef[0] == '-') {
            negative = true;
            coef.erase(0, 1);
        }
        std::string term;
        if (d.empty()) term = single ? coef : "(" + coef + ")";
        else if (single && coef == "1") term = d;
        else term = (single ? coef : "(" + coef + ")") + "*" + d;
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

RatFunc apply(const WeylOp& op, const RatFunc& r)
{
    if (op.is_zero()) throw DomainError("the zero operator has no order");
    RatFunc acc;
    RatFunc deriv = r;
    for (std::size_t k = 0; k < op.coeffs().size(); ++k) {
        if (k > 0) deriv = alg_deriv(deriv);
        if (!op.coeffs()[k].is_zero()) acc += op.coeffs()[k] * deriv;
    }
    return acc;
}

OdeSystem::OdeSystem(WeylOp op_, RatFunc rhs_, std::string origin_)
    : op(std::move(op_)), rhs(std::move(rhs_)), origin(std::move(origin_))
{
    if (op.order() < 1)
        throw DomainError("an operational equation needs an operator of order >= 1");
}

std::string OdeSystem::to_string() const
{
    return "[" + op.to_string() + "] x = " + rhs.to_string();
}

// ---------------------------------------------------------------------------

OdeSystem catalog_equation(const SignalExpr& e)
{
    auto sa = as_scaled_atom(e);
    if (!sa) throw UnsupportedError("'" + pretty_print(e) + "' is not a catalog signal");
    const RatFunc scale(sa->scale);
    const RatFunc s = RatFunc::s();
    const WeylOp d = WeylOp::derivation();

    if (const auto* x = sa->atom.as<expr::Sinc>()) {
        // d sigma/ds + w/(s^2 + w^2) = 0
        const RatFunc w(ExactComplex(x->omega));
        return {d, -(w / (s * s + w * w)) * scale, "sinc"};
    }
    if (const auto* x = sa->atom.as<expr::RaisedCos>()) {
        // (d^2/ds^2 + 1) rho = s/(s^2 + w^2)
        const RatFunc w(ExactComplex(x->omega));
        return {d * d + WeylOp::identity(), (s / (s * s + w * w)) * scale, "rcos"};
    }
    if (const auto* x = sa->atom.as<expr::Delay>()) {
        // (d/ds + L) rho = 0
        return {d + WeylOp::multiplication(RatFunc(ExactComplex(x->lag))), RatFunc(), "delay"};
    }
    if (const auto* x = sa->atom.as<expr::Chirp>()) {
        // [s + (2a d/ds - b) i] eps = exp(c i)
        const ExactComplex i = ExactComplex::i();
        WeylOp op = WeylOp::multiplication(RatFunc(ExactComplex(2 * x->a) * i)) * d +
                    WeylOp::multiplication(s - RatFunc(ExactComplex(x->b) * i));
        ExactComplex rhs(1);
        if (sgn(x->c) != 0) {
            const double c = x->c.get_d();
            rhs = ExactComplex(rational_from_double(std::cos(c)), rational_from_double(std::sin(c)));
        }
        return {op, RatFunc(rhs * sa->scale), "chirp"};
    }
    throw UnsupportedError("'" + pretty_print(e) + "' is not a catalog signal");
}

OdeSystem equation_from_time_relation(const CPoly& p_of_t, const ExpPoly& q)
{
    // t <-> -d/ds
    const WeylOp minus_d = WeylOp::multiplication(RatFunc(-1)) * WeylOp::derivation();
    WeylOp op;
    for (int k = 0; k <= p_of_t.degree(); ++k) {
        const ExactComplex c = p_of_t.coeff(static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        op += WeylOp::multiplication(RatFunc(c)) * minus_d.pow(static_cast<unsigned>(k));
    }
    return {op, to_rational(q)};
}

WeylOp homogenized(const OdeSystem& sys)
{
    if (sys.rhs.is_zero()) return sys.op;
    return WeylOp::derivation() * WeylOp::multiplication(RatFunc(1) / sys.rhs) * sys.op;
}

WeylOp at_infinity(const WeylOp& op)
{
    // d/ds = -z^2 d/dz
    const WeylOp ds = WeylOp::multiplication(RatFunc(CPoly::monomial(ExactComplex(-1), 2))) *
                      WeylOp::derivation();
    WeylOp out;
    WeylOp power = WeylOp::identity();
    for (int k = 0; k <= op.order(); ++k) {
        if (k > 0) power = power * ds;
        const RatFunc& r = op.coeffs()[static_cast<std::size_t>(k)];
        if (r.is_zero()) continue;
        out += WeylOp::multiplication(r.substitute_reciprocal()) * power;
    }
    return out;
}

const char* to_string(Refinement r)
{
    switch (r) {
    case Refinement::logarithmic: return "logarithmic";
    case Refinement::pole: return "pole";
    case Refinement::unclassified: return "unclassified";
    }
    return "unclassified";
}

namespace {

// Order of the pole at 0 (negative for a zero), exact.
int order_at_zero(const RatFunc& r)
{
    auto low = [](const CPoly& p) {
        int k = 0;
        while (p.coeff(static_cast<unsigned>(k)).is_zero()) ++k;
        return k;
    };
    return low(r.den()) - low(r.num());
}

struct Candidate {
    std::complex<double> location;
};

void add_candidates(std::vector<Candidate>& out, const std::vector<Pole>& ps)
{
    for (const auto& p : ps) {
        const auto z = p.approx();
        bool seen = std::any_of(out.begin(), out.end(),
                                [&](const Candidate& c) { return same_point(c.location, z); });
        if (!seen) out.push_back({z});
    }
}

struct FuchsResult {
    bool regular = true;
    double rank = 0.0;
};

FuchsResult fuchs_at(const WeylOp& h, std::complex<double> p)
{
    const int n = h.order();
    const RatFunc& lead = h.coeffs().back();
    FuchsResult res;
    for (int k = 0; k < n; ++k) {
        const RatFunc& r = h.coeffs()[static_cast<std::size_t>(k)];
        if (r.is_zero()) continue;
        const int ord = pole_order_at(r / lead, p);
        if (ord > n - k) res.regular = false;
        res.rank = std::max(res.rank, static_cast<double>(ord) / static_cast<double>(n - k) - 1.0);
    }
    if (res.regular) res.rank = 0.0;
    return res;
}

bool is_quadrature(const OdeSystem& sys)
{
    return sys.op.order() == 1 && sys.op.coeffs()[0].is_zero();
}

} // namespace

std::vector<SingularPoint> finite_singularities(const OdeSystem& sys)
{
    const int n = sys.op.order();
    const RatFunc& lead = sys.op.coeffs().back();
    std::vector<Candidate> cands;
    for (int k = 0; k < n; ++k) {
        const RatFunc& r = sys.op.coeffs()[static_cast<std::size_t>(k)];
        if (!r.is_zero()) add_candidates(cands, poles(r / lead));
    }
    if (!sys.rhs.is_zero()) add_candidates(cands, poles(sys.rhs / lead));
    add_candidates(cands, zeros(lead.num()));

    const WeylOp h = homogenized(sys);
    const bool quad = is_quadrature(sys);
    const RatFunc g = quad ? sys.rhs / lead : RatFunc();
    const bool catalog = sys.origin != "manual";

    std::vector<SingularPoint> out;
    for (const auto& c : cands) {
        SingularPoint sp;
        sp.location = c.location;
        const FuchsResult f = fuchs_at(h, c.location);
        sp.kind = f.regular ? FuchsKind::regular : FuchsKind::irregular;
        sp.rank = f.rank;
        sp.confirmed = catalog;
        if (quad) {
            const int m = pole_order_at(g, c.location);
            if (m == 1) {
                sp.refinement = Refinement::logarithmic;
                sp.confirmed = true;
            } else if (m >= 2) {
                sp.refinement = Refinement::pole;
                sp.pole_order = m - 1;
                sp.confirmed = true;
            }
        }
        out.push_back(sp);
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

std::optional<SingularPoint> singularity_at_infinity(const OdeSystem& sys)
{
    const WeylOp hz = at_infinity(homogenized(sys));
    const int n = hz.order();
    const RatFunc& lead = hz.coeffs().back();
    bool ordinary = true;
    bool regular = true;
    double rank = 0.0;
    for (int k = 0; k < n; ++k) {
        const RatFunc& r = hz.coeffs()[static_cast<std::size_t>(k)];
        if (r.is_zero()) continue;
        const int ord = order_at_zero(r / lead);
        if (ord > 0) ordinary = false;
        if (ord > n - k) regular = false;
        rank = std::max(rank, static_cast<double>(ord) / static_cast<double>(n - k) - 1.0);
    }
    if (ordinary) return std::nullopt;
    SingularPoint sp;
    sp.at_infinity = true;
    sp.kind = regular ? FuchsKind::regular : FuchsKind::irregular;
    sp.rank = regular ? 0.0 : rank;
    sp.confirmed = sys.origin != "manual";
    return sp;
}

Spectrum spectrum_of_ode(const OdeSystem& sys)
{
    std::vector<SingularityRecord> records;
    for (const auto& sp : finite_singularities(sys)) {
        SingularityRecord rec;
        rec.location = sp.location;
        rec.fuchs = sp.kind;
        rec.confirmed = sp.confirmed;
        switch (sp.refinement) {
        case Refinement::logarithmic: rec.kind = SourceKind::logarithmic; break;
        case Refinement::pole:
            rec.kind = SourceKind::pole;
            rec.order = sp.pole_order;
            break;
        case Refinement::unclassified: rec.kind = SourceKind::none; break;
        }
        records.push_back(rec);
    }
    const auto inf = singularity_at_infinity(sys);
    const bool flag = inf && inf->kind == FuchsKind::irregular && inf->rank > 1.0;
    return make_spectrum(std::move(records), flag);
}

} // namespace algspec
