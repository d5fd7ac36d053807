#include "algspec/cpoly.hpp"

#include "algspec/error.hpp"

#include <algorithm>
#include <cmath>

namespace algspec {

CPoly::CPoly(std::vector<ExactComplex> coeffs) : c_(std::move(coeffs))
{
    trim();
}

CPoly::CPoly(ExactComplex constant)
{
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

CPoly CPoly::monomial(const ExactComplex& c, unsigned k)
{
    if (c.is_zero()) return {};
    std::vector<ExactComplex> v(k + 1);
    v[k] = c;
    return CPoly(std::move(v));
}

CPoly CPoly::linear(const ExactComplex& root)
{
    return CPoly(std::vector<ExactComplex>{-root, ExactComplex(1)});
}

void CPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactComplex CPoly::coeff(unsigned k) const
{
    return k < c_.size() ? c_[k] : ExactComplex();
}

bool CPoly::has_real_coeffs() const
{
    return std::all_of(c_.begin(), c_.end(), [](const ExactComplex& c) { return c.is_real(); });
}

CPoly& CPoly::operator+=(const CPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

CPoly& CPoly::operator*=(const CPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<ExactComplex> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

CPoly& CPoly::operator*=(const ExactComplex& c)
{
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

CPoly CPoly::operator-() const
{
    CPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CPoly CPoly::pow(unsigned k) const
{
    CPoly result(1);
    CPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

CPoly CPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<ExactComplex> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * ExactComplex(static_cast<long>(k));
    return CPoly(std::move(r));
}

CPoly CPoly::monic() const
{
    if (is_zero()) return {};
    CPoly r = *this;
    ExactComplex inv = ExactComplex(1) / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
}

CPoly CPoly::taylor_shift(const ExactComplex& shift) const
{
    // Repeated synthetic division by (x - shift).
    std::vector<ExactComplex> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) a[k - 1] += shift * a[k];
    }
    return CPoly(std::move(a));
}

CPoly CPoly::reversed(unsigned n) const
{
    if (is_zero()) return {};
    std::vector<ExactComplex> r(n + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) r[n - k] = c_[k];
    return CPoly(std::move(r));
}

ExactComplex CPoly::evaluate(const ExactComplex& x) const
{
    ExactComplex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::complex<double> CPoly::evaluate(std::complex<double> x) const
{
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::complex<long double> CPoly::evaluate(std::complex<long double> x) const
{
    std::complex<long double> acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex_ld();
    return acc;
}

std::vector<std::complex<long double>> CPoly::to_complex_ld() const
{
    std::vector<std::complex<long double>> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c.to_complex_ld());
    return r;
}

double CPoly::norm_inf() const
{
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c.to_complex()));
    return m;
}

std::string CPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const ExactComplex& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string mono;
        if (k == 1) mono = var;
        else if (k > 1) mono = var + "^" + std::to_string(k);

        const bool pure_imag = sgn(c.re()) == 0;
        const bool negative = c.is_real() ? sgn(c.re()) < 0 : pure_imag && sgn(c.im()) < 0;
        ExactComplex mag = negative ? -c : c;
        std::string coef = to_display_string(mag);
        if (!mag.is_real() && !pure_imag) coef = "(" + coef + ")";

        std::string term;
        if (mono.empty()) term = coef;
        else if (mag.is_one()) term = mono;
        else term = coef + "*" + mono;

        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {CPoly(), a};
    std::vector<ExactComplex> rem = a.coeffs();
    const int db = b.degree();
    std::vector<ExactComplex> q(static_cast<std::size_t>(a.degree() - db + 1));
    ExactComplex inv_lead = ExactComplex(1) / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        const ExactComplex& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        ExactComplex f = top * inv_lead;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k - db)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {CPoly(std::move(q)), CPoly(std::move(rem))};
}

CPoly exact_div(const CPoly& a, const CPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

CPoly gcd(const CPoly& a, const CPoly& b)
{
    if (a.is_zero()) return b.is_zero() ? CPoly() : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return CPoly(1);
    CPoly x = a.monic();
    CPoly y = b.monic();
    while (!y.is_zero()) {
        CPoly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

} // namespace algspec
