#pragma once

// The spectrum pipeline: classify an expression, build its operational
// representation (rational image or defining equation) and read off the
// spectrum. Every front end goes through analyze().

#include "algspec/opcalc.hpp"
#include "algspec/ratfunc.hpp"
#include "algspec/sigexpr.hpp"
#include "algspec/spectrum.hpp"
#include "algspec/weylode.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algspec {

struct Analysis {
    explicit Analysis(SignalExpr e) : expr(std::move(e)) {}

    SignalExpr expr;
    SignalClass cls = SignalClass::Unsupported;
    Spectrum spectrum;

    // ExpPolynomial and Dirac classes.
    std::optional<RatFunc> image;
    std::optional<ExpPoly> exppoly;

    // OdeDefined class.
    std::optional<OdeSystem> ode;
    std::vector<SingularPoint> finite_points;
    std::optional<SingularPoint> infinity;
};

// UnsupportedError for the Unsupported class.
Analysis analyze(const SignalExpr& e);

// Multi-line account of how the spectrum was obtained: the representation,
// the candidate points with their classification, and the frequency set.
std::string explain(const Analysis& a);

// The equation, its singular points and the resulting frequency set.
std::string explain(const OdeSystem& sys);

} // namespace algspec
