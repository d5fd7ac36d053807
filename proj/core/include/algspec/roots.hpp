#pragma once

#include "algspec/cpoly.hpp"
#include "algspec/ratfunc.hpp"

#include <complex>
#include <vector>

namespace algspec {

struct SquareFreeFactor {
    CPoly factor;  // monic, square-free
    int multiplicity;
};

// Yun's algorithm over Q(i): p = lead * prod factor_k^k. Exact.
std::vector<SquareFreeFactor> square_free_decomposition(const CPoly& p);

// A root of a polynomial. `value` is exact when `exact` is true (it was
// verified by exact evaluation); otherwise it is the embedding of a double
// approximation.
struct Root {
    ExactComplex value;
    bool exact = false;

    std::complex<double> approx() const { return value.to_complex(); }
};

struct RootOptions {
    int max_iterations = 500;
    // Largest denominator tried when snapping a float root to Q(i).
    long snap_max_den = 1000000;
};

// All roots of a square-free polynomial: simultaneous (Aberth) iteration in
// extended precision, Newton polish, then an attempt to snap each root to an
// exact Gaussian rational. Roots of real-coefficient factors are returned
// conjugate-symmetric. Sorted by (re, im). NumericalError when the
// iteration fails to reach a backward-error residual of 1e-12.
std::vector<Root> roots_square_free(const CPoly& p, const RootOptions& opts = {});

struct Pole {
    ExactComplex location;
    int multiplicity = 1;
    bool exact = false;

    std::complex<double> approx() const { return location.to_complex(); }
};

// Roots of p with multiplicities (square-free decomposition first), sorted
// by (re, im).
std::vector<Pole> zeros(const CPoly& p, const RootOptions& opts = {});
// Roots of the denominator of a reduced rational function.
std::vector<Pole> poles(const RatFunc& r, const RootOptions& opts = {});

// Order of the pole of r at x (0 if r is finite there). x is matched against
// the exact pole list with relative tolerance `tol`.
int pole_order_at(const RatFunc& r, std::complex<double> x, double tol = 1e-9);

// Two complex locations are treated as one point.
bool same_point(std::complex<double> a, std::complex<double> b, double tol = 1e-9);

struct PartialFractionTerm {
    ExactComplex pole;
    int order = 1;
    ExactComplex coefficient;
};

// r = polynomial + sum coefficient / (s - pole)^order
struct PartialFractions {
    CPoly polynomial;
    std::vector<PartialFractionTerm> terms;
    // All poles were exact, so every coefficient is exact.
    bool exact = true;
};

PartialFractions partial_fractions(const RatFunc& r, const RootOptions& opts = {});
// Sum the decomposition back into a reduced rational function.
RatFunc recombine(const PartialFractions& pf);

} // namespace algspec
