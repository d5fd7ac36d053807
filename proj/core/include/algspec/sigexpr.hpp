#pragma once

// Signal expression language: canonical AST, parser, printer, evaluation and
// symbolic time differentiation.
//
// Grammar:
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := ("-"|"+") unary | factor
//   factor := atom ("^" uint)?
//   atom   := number | "i" | "t" | call | "(" expr ")"
//   call   := ident "(" args ")"
//   ident  := exp | sin | cos | sinc | rcos | dirac | delay | chirp
//
// sin/cos/exp take one argument affine in t (sin(2*t + 1), exp(-t)); sin and
// cos also accept the two-constant form sin(omega, phase). sinc, rcos,
// delay take one constant, chirp three, dirac none.

#include "algspec/exact.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace algspec {

struct ExprNode;

// Immutable handle to a shared AST node. Value semantics: copying shares
// the (immutable) tree.
class SignalExpr {
public:
    explicit SignalExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

    const ExprNode& node() const { return *node_; }

    template <class T>
    const T* as() const;

    template <class T>
    bool is() const { return as<T>() != nullptr; }

private:
    std::shared_ptr<const ExprNode> node_;
};

namespace expr {

struct Const { ExactComplex value; };
struct TimeVar {};
struct Add { std::vector<SignalExpr> terms; };
struct Mul { std::vector<SignalExpr> factors; };
struct Pow { SignalExpr base; unsigned k; };
// e^(rate t)
struct Exp { ExactComplex rate; };
// sin(omega t + phase)
struct Sin { Rational omega; Rational phase; };
struct Cos { Rational omega; Rational phase; };
// sin(omega t) / t
struct Sinc { Rational omega; };
// cos(omega t) / (t^2 + 1)
struct RaisedCos { Rational omega; };
struct Dirac {};
// e^(-lag s): delay for lag > 0, advance for lag < 0.
struct Delay { Rational lag; };
// exp[(a t^2 + b t + c) i]
struct Chirp { Rational a, b, c; };
// 1 / arg. Only produced by division by a non-constant and by
// differentiating sinc and rcos.
struct Recip { SignalExpr arg; };

} // namespace expr

using ExprVariant = std::variant<expr::Const, expr::TimeVar, expr::Add, expr::Mul, expr::Pow,
                                 expr::Exp, expr::Sin, expr::Cos, expr::Sinc, expr::RaisedCos,
                                 expr::Dirac, expr::Delay, expr::Chirp, expr::Recip>;

struct ExprNode {
    ExprVariant v;
};

template <class T>
const T* SignalExpr::as() const
{
    return std::get_if<T>(&node_->v);
}

// Structural equality.
bool operator==(const SignalExpr& a, const SignalExpr& b);
inline bool operator!=(const SignalExpr& a, const SignalExpr& b) { return !(a == b); }

// Canonicalizing builders. Add/Mul flatten, fold constants (the constant
// factor of a Mul goes first, the constant term of an Add is dropped when
// zero), Add terms are sorted by a structural key, Pow with k = 0 is 1.
namespace build {

SignalExpr constant(const ExactComplex& c);
SignalExpr t();
SignalExpr add(std::vector<SignalExpr> terms);
SignalExpr mul(std::vector<SignalExpr> factors);
SignalExpr pow(const SignalExpr& base, unsigned k);
SignalExpr exp(const ExactComplex& rate);
SignalExpr sin(const Rational& omega, const Rational& phase = 0);
SignalExpr cos(const Rational& omega, const Rational& phase = 0);
SignalExpr sinc(const Rational& omega);        // DomainError unless omega > 0
SignalExpr raised_cos(const Rational& omega);  // DomainError unless omega > 0
SignalExpr dirac();
SignalExpr delay(const Rational& lag);
SignalExpr chirp(const Rational& a, const Rational& b, const Rational& c);  // a != 0
SignalExpr recip(const SignalExpr& arg);
SignalExpr neg(const SignalExpr& e);
SignalExpr sub(const SignalExpr& a, const SignalExpr& b);

} // namespace build

// Wraps a node without canonicalizing (tests build raw trees with it).
SignalExpr make_raw(ExprVariant v);

// Rebuilds the tree through the canonicalizing builders.
SignalExpr canonical(const SignalExpr& e);

// Throws ParseError (syntax, arity; byte offset attached) or DomainError
// (parameter domain, e.g. sinc(0)).
SignalExpr parse(std::string_view text);

// Text that parses back to a structurally equal canonical tree.
std::string pretty_print(const SignalExpr& e);

enum class SignalClass { ExpPolynomial, Dirac, OdeDefined, Unsupported };
const char* to_string(SignalClass c);

SignalClass classify(const SignalExpr& e);

// If e is c * atom (or the bare atom) for a single non-constant atom,
// returns {c, atom}.
struct ScaledAtom {
    ExactComplex scale;
    SignalExpr atom;
};
std::optional<ScaledAtom> as_scaled_atom(const SignalExpr& e);

// Value at t >= 0. sinc at t = 0 is its limit omega. DomainError for Dirac
// and Delay, and for t < 0.
std::complex<double> eval(const SignalExpr& e, double t);

// Exact time derivative. DomainError for Dirac and Delay.
SignalExpr diff_time(const SignalExpr& e);

// True if no Dirac and no Delay atom occurs.
bool is_evaluable(const SignalExpr& e);

} // namespace algspec
