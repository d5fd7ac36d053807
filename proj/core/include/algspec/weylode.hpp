#pragma once

// Linear differential operators in C(s)[d/ds] and the singularity analysis
// of operational equations L x = rhs.

#include "algspec/cpoly.hpp"
#include "algspec/opcalc.hpp"
#include "algspec/ratfunc.hpp"
#include "algspec/sigexpr.hpp"
#include "algspec/spectrum.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace algspec {

// sum_k coeff(k) (d/ds)^k. The zero operator has no coefficients; otherwise
// the last coefficient is nonzero and its index is the order.
class WeylOp {
public:
    WeylOp() = default;
    explicit WeylOp(std::vector<RatFunc> coeffs);

    static WeylOp identity() { return multiplication(RatFunc(1)); }
    static WeylOp derivation();  // d/ds
    static WeylOp multiplication(const RatFunc& r);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    // Zero above the order.
    RatFunc coeff(unsigned k) const;

    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    // Composition, using (d/ds) r = r (d/ds) + r'.
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend bool operator==(const WeylOp& a, const WeylOp& b) { return a.c_ == b.c_; }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    WeylOp pow(unsigned k) const;

    // "2i*D + (s - 2i)"; `var` is the indeterminate, D the derivation.
    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<RatFunc> c_;
};

inline WeylOp mul_ops(const WeylOp& a, const WeylOp& b) { return a * b; }

// sum_k coeff(k) * (k-th algebraic derivative of r). DomainError for the
// zero operator.
RatFunc apply(const WeylOp& op, const RatFunc& r);

// L x = rhs with order(L) >= 1.
struct OdeSystem {
    WeylOp op;
    RatFunc rhs;
    // Catalog entry name ("sinc", "rcos", "delay", "chirp") or "manual".
    std::string origin = "manual";

    OdeSystem(WeylOp op_, RatFunc rhs_, std::string origin_ = "manual");
    std::string to_string() const;
};

// The defining equation of a (scaled) sinc, rcos, delay or chirp atom.
// UnsupportedError for anything else.
OdeSystem catalog_equation(const SignalExpr& e);

// If P(t) x(t) = q(t) with q an exponential polynomial, then
// P(-d/ds) x = image(q). Returns that system.
OdeSystem equation_from_time_relation(const CPoly& p_of_t, const ExpPoly& q);

// D o (1/rhs) o L: an order n+1 homogeneous operator annihilating every
// solution of L x = rhs. Returns L itself when rhs = 0.
WeylOp homogenized(const OdeSystem& sys);

// The operator in z = 1/s: s -> 1/z, d/ds -> -z^2 d/dz.
WeylOp at_infinity(const WeylOp& op);

enum class Refinement { logarithmic, pole, unclassified };
const char* to_string(Refinement r);

struct SingularPoint {
    bool at_infinity = false;
    std::complex<double> location;
    FuchsKind kind = FuchsKind::regular;
    Refinement refinement = Refinement::unclassified;
    // Order of the solution's pole for refinement == pole.
    int pole_order = 0;
    // Katz (Poincare) rank at the point; 0 for regular points.
    double rank = 0.0;
    bool confirmed = false;
};

// Candidates: poles of coeff(k)/coeff(n) for k < n, poles of rhs/coeff(n),
// zeros of coeff(n). Each is classified by the Fuchs test on the
// homogenized operator; first-order quadratures x' = g are refined to
// logarithmic (simple pole of g) or pole(m-1) (pole of order m >= 2).
std::vector<SingularPoint> finite_singularities(const OdeSystem& sys);

// Fuchs test at z = 0 of the homogenized operator moved to z = 1/s.
// nullopt when infinity is an ordinary point.
std::optional<SingularPoint> singularity_at_infinity(const OdeSystem& sys);

// Frequencies are the nonzero imaginary parts of the finite singular points.
// infinite_singularity is set when infinity is irregular with rank > 1
// (growing phase, as for the chirp); rank-1 irregularity is the exponential
// e^(-Ls) of a pure shift and is not flagged.
Spectrum spectrum_of_ode(const OdeSystem& sys);

} // namespace algspec
