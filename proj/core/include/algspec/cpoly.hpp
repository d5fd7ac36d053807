#pragma once

#include "algspec/exact.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace algspec {

// Univariate polynomial over Q(i), coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the last coefficient
// is nonzero.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(std::vector<ExactComplex> coeffs);
    CPoly(ExactComplex constant);  // NOLINT(google-explicit-constructor)
    CPoly(long constant) : CPoly(ExactComplex(constant)) {}  // NOLINT

    // c * x^k
    static CPoly monomial(const ExactComplex& c, unsigned k);
    // The indeterminate x.
    static CPoly x() { return monomial(ExactComplex(1), 1); }
    // x - root
    static CPoly linear(const ExactComplex& root);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<ExactComplex>& coeffs() const { return c_; }
    // Zero above the degree.
    ExactComplex coeff(unsigned k) const;
    const ExactComplex& lead() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool has_real_coeffs() const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly& operator*=(const CPoly& o);
    CPoly& operator*=(const ExactComplex& c);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
    friend CPoly operator*(CPoly a, const ExactComplex& c) { return a *= c; }
    friend CPoly operator*(const ExactComplex& c, CPoly a) { return a *= c; }
    CPoly operator-() const;
    friend bool operator==(const CPoly& a, const CPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

    CPoly pow(unsigned k) const;
    CPoly derivative() const;
    CPoly monic() const;
    // p(x + shift)
    CPoly taylor_shift(const ExactComplex& shift) const;
    // x^n * p(1/x) for n >= degree.
    CPoly reversed(unsigned n) const;

    ExactComplex evaluate(const ExactComplex& x) const;
    std::complex<double> evaluate(std::complex<double> x) const;
    std::complex<long double> evaluate(std::complex<long double> x) const;

    std::vector<std::complex<long double>> to_complex_ld() const;
    // Max |coefficient| in double precision.
    double norm_inf() const;

    // "s^2 + 9", "(2i)*s - 1/3"; `var` names the indeterminate.
    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<ExactComplex> c_;
};

// Quotient and remainder; DomainError if the divisor is zero.
std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);
// Exact division; DomainError if b does not divide a.
CPoly exact_div(const CPoly& a, const CPoly& b);
// Monic gcd; gcd(0, 0) = 0.
CPoly gcd(const CPoly& a, const CPoly& b);

} // namespace algspec
