#include "algspec/ratfunc.hpp"

#include "algspec/error.hpp"

namespace algspec {

RatFunc::RatFunc(CPoly num, CPoly den)
{
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = CPoly(1);
        return;
    }
    CPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    ExactComplex inv = ExactComplex(1) / den.lead();
    num_ = num * inv;
    den_ = den * inv;
}

RatFunc reduce(const CPoly& num, const CPoly& den)
{
    return RatFunc(num, den);
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_polynomial() && o.is_polynomial()) {
        *this = RatFunc(num_ + o.num_, CPoly(1), Reduced{});
        return *this;
    }
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
        return *this;
    }
    // Henrici: with g = gcd(d1, d2) only gcd(numerator, g) can cancel.
    const CPoly g = gcd(den_, o.den_);
    if (g.degree() == 0) {
        CPoly num = num_ * o.den_ + o.num_ * den_;
        CPoly den = den_ * o.den_;
        *this = num.is_zero() ? RatFunc() : RatFunc(std::move(num), std::move(den), Reduced{});
        return *this;
    }
    const CPoly d1 = exact_div(den_, g);
    const CPoly d2 = exact_div(o.den_, g);
    CPoly num = num_ * d2 + o.num_ * d1;
    if (num.is_zero()) return *this = RatFunc();
    CPoly den = d1 * d2;
    const CPoly h = gcd(num, g);
    if (h.degree() > 0) {
        num = exact_div(num, h);
        den *= exact_div(g, h);
    } else {
        den *= g;
    }
    *this = RatFunc(std::move(num), std::move(den), Reduced{});
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    return *this += -o;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (is_polynomial() && o.is_polynomial()) {
        *this = RatFunc(num_ * o.num_, CPoly(1), Reduced{});
        return *this;
    }
    if (o.is_constant()) {
        num_ *= o.num_.lead();
        return *this;
    }
    if (is_constant()) {
        const ExactComplex c = num_.lead();
        *this = o;
        num_ *= c;
        return *this;
    }
    // Cross-cancel first so the products stay small.
    CPoly g1 = gcd(num_, o.den_);
    CPoly g2 = gcd(o.num_, den_);
    CPoly n1 = g1.degree() > 0 ? exact_div(num_, g1) : num_;
    CPoly d2 = g1.degree() > 0 ? exact_div(o.den_, g1) : o.den_;
    CPoly n2 = g2.degree() > 0 ? exact_div(o.num_, g2) : o.num_;
    CPoly d1 = g2.degree() > 0 ? exact_div(den_, g2) : den_;
    *this = RatFunc(n1 * n2, d1 * d2);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) throw DomainError("division by the zero rational function");
    return *this *= RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(-num_, den_, Reduced{});
}

RatFunc RatFunc::pow(int k) const
{
    if (k < 0) {
        if (is_zero()) throw DomainError("negative power of the zero rational function");
        return RatFunc(den_, num_).pow(-k);
    }
    return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Reduced{});
}

ExactComplex RatFunc::evaluate(const ExactComplex& x) const
{
    ExactComplex d = den_.evaluate(x);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
    return num_.evaluate(x) / d;
}

RatFunc RatFunc::substitute_reciprocal() const
{
    if (is_zero()) return {};
    // num(1/z)/den(1/z) = z^(dd-dn) * rev(num)/rev(den)
    const int dn = num_.degree();
    const int dd = den_.degree();
    CPoly n = num_.reversed(static_cast<unsigned>(dn));
    CPoly d = den_.reversed(static_cast<unsigned>(dd));
    if (dd >= dn) n *= CPoly::monomial(ExactComplex(1), static_cast<unsigned>(dd - dn));
    else d *= CPoly::monomial(ExactComplex(1), static_cast<unsigned>(dn - dd));
    return RatFunc(n, d);
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFunc alg_deriv(const RatFunc& r)
{
    if (r.is_polynomial()) return RatFunc(r.num().derivative());
    // (n/d)' = (n'd - nd')/d^2 = (n'(d/g) - n(d'/g)) / (d (d/g)) with g = gcd(d, d')
    const CPoly dd = r.den().derivative();
    const CPoly g = gcd(r.den(), dd);
    const CPoly dg = exact_div(r.den(), g);
    return RatFunc(r.num().derivative() * dg - r.num() * exact_div(dd, g), r.den() * dg);
}

RatFunc alg_deriv(const RatFunc& r, unsigned k)
{
    RatFunc out = r;
    for (unsigned i = 0; i < k; ++i) out = alg_deriv(out);
    return out;
}

RatFunc laurent(const std::vector<std::pair<int, ExactComplex>>& terms)
{
    int lowest = 0;
    for (const auto& [alpha, c] : terms) lowest = std::min(lowest, alpha);
    CPoly num;
    for (const auto& [alpha, c] : terms) num += CPoly::monomial(c, static_cast<unsigned>(alpha - lowest));
    return RatFunc(num, CPoly::monomial(ExactComplex(1), static_cast<unsigned>(-lowest)));
}

} // namespace algspec
