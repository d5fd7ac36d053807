#pragma once

#include "algspec/cpoly.hpp"

#include <string>

namespace algspec {

// Element of C(s) kept reduced: gcd(num, den) = 1 and den monic. Zero is
// 0/1. Coefficients are exact, so reduction never leaves spurious poles.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(CPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(ExactComplex c) : RatFunc(CPoly(std::move(c))) {}  // NOLINT
    RatFunc(long c) : RatFunc(CPoly(c)) {}  // NOLINT
    // Reduces num/den; DomainError if den is zero.
    RatFunc(CPoly num, CPoly den);

    static RatFunc s() { return RatFunc(CPoly::x()); }

    const CPoly& num() const { return num_; }
    const CPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    bool is_strictly_proper() const { return num_.degree() < den_.degree(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);  // DomainError on zero divisor
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(int k) const;

    // Value at an exact point; DomainError at a pole.
    ExactComplex evaluate(const ExactComplex& x) const;

    // r(1/z) as an element of C(z).
    RatFunc substitute_reciprocal() const;

    // "(num) / (den)", or just the numerator when den = 1.
    std::string to_string(const std::string& var = "s") const;

private:
    struct Reduced {};
    RatFunc(CPoly num, CPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    CPoly num_;
    CPoly den_;
};

// Free-function form of the reducing constructor.
RatFunc reduce(const CPoly& num, const CPoly& den);

// The algebraic derivative d/ds.
RatFunc alg_deriv(const RatFunc& r);
// k-fold algebraic derivative.
RatFunc alg_deriv(const RatFunc& r, unsigned k);

// Laurent polynomial sum_{alpha} c_alpha s^alpha given as (alpha, c) pairs.
RatFunc laurent(const std::vector<std::pair<int, ExactComplex>>& terms);

} // namespace algspec
