#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).
// Every finite double is a dyadic rational, so float values entering the
// algebra (cos of a phase, a numerically found root) are embedded exactly.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace algspec {

using Rational = mpq_class;

// Exact value of a finite double. Throws DomainError for inf/nan.
Rational rational_from_double(double x);

// Parses a decimal literal ("12", "2.5", "1e-3", ".5") exactly.
// Throws DomainError on malformed input.
Rational parse_decimal(std::string_view text);

// "3", "-3", "1/3".
std::string to_string(const Rational& q);

// Best rational approximation of x with denominator <= max_den
// (continued fractions).
Rational rational_approximation(double x, long max_den);

class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    // Canonicalizes, so Rational(6, 4) and Rational(3, 2) compare equal.
    ExactComplex(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static ExactComplex i() { return {Rational(0), Rational(1)}; }
    static ExactComplex from_complex(std::complex<double> z);
    static ExactComplex from_complex(std::complex<long double> z);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::complex<long double> to_complex_ld() const;

    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);  // DomainError on zero

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    ExactComplex operator-() const { return {-re_, -im_}; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    ExactComplex pow(unsigned k) const;

private:
    Rational re_{0};
    Rational im_{0};
};

// Lexicographic order on (re, im); the canonical order for rates and roots.
int compare(const ExactComplex& a, const ExactComplex& b);

// "3", "(1/2)", "(2*i)", "(1+(-1/3)*i)". Round-trips through the expression
// parser.
std::string to_expr_string(const ExactComplex& z);

// Compact display form: "3", "1/2", "2i", "1-1/3i".
std::string to_display_string(const ExactComplex& z);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

} // namespace algspec
