#pragma once

#include "algspec/sigexpr.hpp"

#include <istream>
#include <string>
#include <vector>

namespace algspec {

struct SampledSignal {
    std::vector<double> times;
    std::vector<double> values;

    // DomainError unless lengths match, there are at least 3 samples, every
    // value is finite and the times are strictly increasing.
    void validate() const;
};

enum class PhiMethod { symbolic, fitted };
const char* to_string(PhiMethod m);

struct PhiTrace {
    std::vector<double> times;
    // NaN where a fit was rank deficient.
    std::vector<double> phi;
    PhiMethod method = PhiMethod::symbolic;
};

// Phi(t) = x''(t) / sqrt(1 + x'(t)^2), derivatives taken symbolically.
// DomainError for non-differentiable or complex-valued input, or when a
// derivative is not finite at t.
double phi_symbolic(const SignalExpr& e, double t);
PhiTrace phi_symbolic(const SignalExpr& e, const std::vector<double>& times);

// x''(t) / (1 + x'(t)^2)^(3/2).
double curvature(const SignalExpr& e, double t);

// Least-squares polynomial of the given degree on each centred window of
// `window` samples; x' and x'' of the fit at the centre give Phi. The first
// and last window/2 samples have no centred window and are left out.
PhiTrace phi_fitted(const SampledSignal& sig, int window, int degree);

struct VilleRow {
    double t;
    double ville;
    double phi;
};

struct VilleReport {
    double amplitude;
    double omega;
    std::vector<VilleRow> rows;
};

// A sin(omega t) side by side: the analytic-signal frequency of a pure tone
// is |omega| (0 when A = 0), against Phi(t). DomainError for omega = 0.
VilleReport phi_vs_ville(double amplitude, double omega, const std::vector<double>& times);
// Same, reading A and omega off an expression of the form A*sin(omega*t).
// The zero signal is taken as A = 0. UnsupportedError for other shapes.
VilleReport phi_vs_ville(const SignalExpr& e, const std::vector<double>& times);

std::string to_text(const VilleReport& r);

// CSV with header "t,x" and one decimal sample per line. Blank lines are
// skipped. ParseError (byte offset of the offending line) on bad input.
SampledSignal read_csv(std::istream& in);
SampledSignal read_csv_file(const std::string& path);

} // namespace algspec
