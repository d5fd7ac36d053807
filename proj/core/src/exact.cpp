#include "algspec/exact.hpp"

#include "algspec/error.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace algspec {

Rational rational_from_double(double x)
{
    if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

namespace {

Rational rational_from_long_double(long double x)
{
    if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
    if (x == 0.0L) return Rational(0);
    int exponent = 0;
    long double mant = std::frexp(x, &exponent);
    // 64 mantissa bits on x87; take them in two 32-bit chunks.
    mpz_class m(0);
    for (int chunk = 0; chunk < 2; ++chunk) {
        mant = std::ldexp(mant, 32);
        long double whole = std::trunc(mant);
        m <<= 32;
        m += mpz_class(static_cast<long>(whole));
        mant -= whole;
        exponent -= 32;
    }
    Rational q(m);
    if (exponent >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(exponent));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-exponent));
    }
    return q;
}

} // namespace

Rational parse_decimal(std::string_view text)
{
    std::size_t pos = 0;
    mpz_class mant(0);
    long scale = 0;
    bool digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mant = mant * 10 + (text[pos] - '0');
        digits = true;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            mant = mant * 10 + (text[pos] - '0');
            --scale;
            digits = true;
            ++pos;
        }
    }
    if (!digits) throw DomainError("malformed number '" + std::string(text) + "'");
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw DomainError("malformed exponent in '" + std::string(text) + "'");
        long e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + (text[pos] - '0');
            if (e > 100000) throw DomainError("exponent out of range in '" + std::string(text) + "'");
            ++pos;
        }
        scale += neg ? -e : e;
    }
    if (pos != text.size()) throw DomainError("malformed number '" + std::string(text) + "'");
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(mant, ten_pow) : Rational(mant * ten_pow);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational rational_approximation(double x, long max_den)
{
    if (!std::isfinite(x)) throw DomainError("non-finite value");
    // Convergents h/k of the continued fraction of x.
    mpz_class h_prev(1), h(static_cast<long>(std::floor(x)));
    mpz_class k_prev(0), k(1);
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
        double inv = 1.0 / frac;
        double a = std::floor(inv);
        if (a > 1e15) break;
        mpz_class ai(static_cast<long>(a));
        mpz_class h_next = ai * h + h_prev;
        mpz_class k_next = ai * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
        frac = inv - a;
    }
    Rational q(h, k);
    q.canonicalize();
    return q;
}

ExactComplex ExactComplex::from_complex(std::complex<double> z)
{
    return {rational_from_double(z.real()), rational_from_double(z.imag())};
}

ExactComplex ExactComplex::from_complex(std::complex<long double> z)
{
    return {rational_from_long_double(z.real()), rational_from_long_double(z.imag())};
}

std::complex<long double> ExactComplex::to_complex_ld() const
{
    // mpq has no long double conversion; go through mpf with 80 bits.
    auto conv = [](const Rational& q) -> long double {
        if (sgn(q) == 0) return 0.0L;
        mpf_class f(q, 80);
        long exp2 = 0;
        double hi = mpf_get_d_2exp(&exp2, f.get_mpf_t());
        mpf_class rest = f - mpf_class(std::ldexp(hi, static_cast<int>(exp2)), 80);
        long exp_lo = 0;
        double lo = mpf_get_d_2exp(&exp_lo, rest.get_mpf_t());
        return std::ldexp(static_cast<long double>(hi), static_cast<int>(exp2)) +
               std::ldexp(static_cast<long double>(lo), static_cast<int>(exp_lo));
    };
    return {conv(re_), conv(im_)};
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational d = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ExactComplex ExactComplex::pow(unsigned k) const
{
    ExactComplex result(1);
    ExactComplex base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

int compare(const ExactComplex& a, const ExactComplex& b)
{
    int c = cmp(a.re(), b.re());
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(a.im(), b.im());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

std::string rational_expr(const Rational& q)
{
    if (q.get_den() == 1) return q.get_str();
    return "(" + q.get_str() + ")";
}

} // namespace

std::string to_expr_string(const ExactComplex& z)
{
    if (z.is_real()) return rational_expr(z.re());
    if (sgn(z.re()) == 0) {
        if (z.im() == 1) return "i";
        return "(" + rational_expr(z.im()) + "*i)";
    }
    return "(" + rational_expr(z.re()) + "+" + rational_expr(z.im()) + "*i)";
}

std::string to_display_string(const ExactComplex& z)
{
    if (z.is_real()) return z.re().get_str();
    std::string im;
    if (z.im() == 1) im = "i";
    else if (z.im() == -1) im = "-i";
    else im = z.im().get_str() + "i";
    if (sgn(z.re()) == 0) return im;
    std::string out = z.re().get_str();
    if (im[0] != '-') out += "+";
    return out + im;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace algspec
