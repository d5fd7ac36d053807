#pragma once

// Operational calculus for t >= 0: exponential polynomials and their images
// in C(s). sum_i P_i(t) e^(a_i t) corresponds to a strictly proper rational
// function whose poles are exactly the rates a_i; the Dirac impulse is 1;
// multiplication by -t is the algebraic derivative d/ds.

#include "algspec/cpoly.hpp"
#include "algspec/ratfunc.hpp"
#include "algspec/roots.hpp"
#include "algspec/sigexpr.hpp"
#include "algspec/spectrum.hpp"

#include <complex>
#include <string>
#include <vector>

namespace algspec {

// P(t) e^(rate t); `poly` is a polynomial in t.
struct ExpTerm {
    ExactComplex rate;
    CPoly poly;
};

// Canonical form: rates pairwise distinct, every poly nonzero, terms ordered
// by (Re rate, Im rate).
class ExpPoly {
public:
    ExpPoly() = default;
    // Merges equal rates, drops zero polynomials, sorts.
    explicit ExpPoly(std::vector<ExpTerm> terms);

    static ExpPoly constant(const ExactComplex& c);
    static ExpPoly time();
    static ExpPoly exponential(const ExactComplex& rate);

    const std::vector<ExpTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // A single term of rate 0.
    bool is_polynomial() const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator*=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
    ExpPoly operator*(const ExactComplex& c) const;
    ExpPoly pow(unsigned k) const;
    friend bool operator==(const ExpPoly& a, const ExpPoly& b);
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    std::complex<double> eval(double t) const;

    // "(-1/2i)*exp(2i*t) + ...", complex-exponential basis.
    std::string to_string() const;

private:
    void normalize();
    std::vector<ExpTerm> terms_;
};

// Expansion of an ExpPolynomial-class expression (sin/cos through Euler's
// formula). UnsupportedError for any other class.
ExpPoly from_signal(const SignalExpr& e);

// Term (a, c t^k) maps to c k! / (s - a)^(k+1). Exact.
RatFunc to_rational(const ExpPoly& x);

// Inverse map through partial fractions: c / (s - p)^m maps to
// (p, c t^(m-1) / (m-1)!). DomainError unless r is strictly proper.
ExpPoly to_exppoly(const RatFunc& r, const RootOptions& opts = {});

// The operational image of the Dirac impulse at the origin: 1.
RatFunc dirac_image();

// P_i(t) -> -t P_i(t). Its image is alg_deriv of the image of x.
ExpPoly mult_by_minus_t(const ExpPoly& x);

// Spectrum read off the rates: frequencies are the nonzero Im(a_i).
Spectrum spectrum_of_exppoly(const ExpPoly& x);

// Taylor polynomial of e at t0 of the given order, built from the symbolic
// derivatives of e. A single rate-0 term, so its spectrum is empty.
ExpPoly taylor_truncate(const SignalExpr& e, const Rational& t0, unsigned order);

// Distance between two exponential polynomials: terms are paired by rate
// (relative tolerance `rate_tol`); the result is the largest coefficient
// difference, counting unpaired terms and rate mismatches in full.
double coefficient_distance(const ExpPoly& a, const ExpPoly& b, double rate_tol = 1e-9);

// Largest coefficient difference between two reduced rational functions
// (denominators monic), coefficients beyond a degree counting as zero.
double coefficient_distance(const RatFunc& a, const RatFunc& b);

} // namespace algspec
