#include "algspec/sigexpr.hpp"

#include "algspec/error.hpp"

#include <algorithm>
#include <cmath>

namespace algspec {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool equal_lists(const std::vector<SignalExpr>& a, const std::vector<SignalExpr>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

} // namespace

bool operator==(const SignalExpr& a, const SignalExpr& b)
{
    if (&a.node() == &b.node()) return true;
    const ExprVariant& va = a.node().v;
    const ExprVariant& vb = b.node().v;
    if (va.index() != vb.index()) return false;
    return std::visit(overloaded{
        [&](const expr::Const& x) { return x.value == std::get<expr::Const>(vb).value; },
        [&](const expr::TimeVar&) { return true; },
        [&](const expr::Add& x) { return equal_lists(x.terms, std::get<expr::Add>(vb).terms); },
        [&](const expr::Mul& x) { return equal_lists(x.factors, std::get<expr::Mul>(vb).factors); },
        [&](const expr::Pow& x) {
            const auto& y = std::get<expr::Pow>(vb);
            return x.k == y.k && x.base == y.base;
        },
        [&](const expr::Exp& x) { return x.rate == std::get<expr::Exp>(vb).rate; },
        [&](const expr::Sin& x) {
            const auto& y = std::get<expr::Sin>(vb);
            return x.omega == y.omega && x.phase == y.phase;
        },
        [&](const expr::Cos& x) {
            const auto& y = std::get<expr::Cos>(vb);
            return x.omega == y.omega && x.phase == y.phase;
        },
        [&](const expr::Sinc& x) { return x.omega == std::get<expr::Sinc>(vb).omega; },
        [&](const expr::RaisedCos& x) { return x.omega == std::get<expr::RaisedCos>(vb).omega; },
        [&](const expr::Dirac&) { return true; },
        [&](const expr::Delay& x) { return x.lag == std::get<expr::Delay>(vb).lag; },
        [&](const expr::Chirp& x) {
            const auto& y = std::get<expr::Chirp>(vb);
            return x.a == y.a && x.b == y.b && x.c == y.c;
        },
        [&](const expr::Recip& x) { return x.arg == std::get<expr::Recip>(vb).arg; },
    }, va);
}

SignalExpr make_raw(ExprVariant v)
{
    return SignalExpr(std::make_shared<const ExprNode>(ExprNode{std::move(v)}));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kAdd = 1, kMul = 2, kPow = 3, kAtom = 4 };

std::string print(const SignalExpr& e, int context);

int precedence(const SignalExpr& e)
{
    if (e.is<expr::Add>()) return kAdd;
    if (e.is<expr::Mul>() || e.is<expr::Recip>()) return kMul;
    if (e.is<expr::Pow>()) return kPow;
    if (const auto* c = e.as<expr::Const>()) {
        // Negative or fractional reals print with a sign or parentheses.
        return c->value.is_real() && sgn(c->value.re()) < 0 ? kMul : kAtom;
    }
    return kAtom;
}

std::string wrap(const SignalExpr& e, int context)
{
    std::string s = print(e, context);
    return precedence(e) < context ? "(" + s + ")" : s;
}

std::string real_str(const Rational& q)
{
    return to_expr_string(ExactComplex(q));
}

// True when the term prints with a leading minus that can become " - ".
bool is_negative_term(const SignalExpr& e)
{
    if (const auto* c = e.as<expr::Const>()) return c->value.is_real() && sgn(c->value.re()) < 0;
    if (const auto* m = e.as<expr::Mul>()) {
        if (const auto* c = m->factors.front().as<expr::Const>())
            return c->value.is_real() && sgn(c->value.re()) < 0;
    }
    return false;
}

std::string affine_arg(const Rational& omega, const Rational& phase)
{
    std::string s = real_str(omega) + "*t";
    if (sgn(phase) > 0) s += " + " + real_str(phase);
    else if (sgn(phase) < 0) s += " - " + real_str(-phase);
    return s;
}

std::string print(const SignalExpr& e, int /*context*/)
{
    return std::visit(overloaded{
        [](const expr::Const& x) { return to_expr_string(x.value); },
        [](const expr::TimeVar&) { return std::string("t"); },
        [](const expr::Add& x) {
            std::string s = wrap(x.terms.front(), kAdd);
            for (std::size_t k = 1; k < x.terms.size(); ++k) {
                const SignalExpr& term = x.terms[k];
                if (is_negative_term(term)) s += " - " + wrap(build::neg(term), kMul);
                else s += " + " + wrap(term, kAdd);
            }
            return s;
        },
        [](const expr::Mul& x) {
            std::string s;
            for (std::size_t k = 0; k < x.factors.size(); ++k) {
                const SignalExpr& f = x.factors[k];
                if (k > 0) s += "*";
                // A leading negative constant prints bare ("-3*t").
                if ((k == 0 && f.is<expr::Const>()) || f.is<expr::Recip>()) s += print(f, kMul);
                else s += wrap(f, kPow);
            }
            return s;
        },
        [](const expr::Pow& x) { return wrap(x.base, kAtom) + "^" + std::to_string(x.k); },
        [](const expr::Exp& x) {
            if (x.rate.is_one()) return std::string("exp(t)");
            return "exp(" + to_expr_string(x.rate) + "*t)";
        },
        [](const expr::Sin& x) { return "sin(" + affine_arg(x.omega, x.phase) + ")"; },
        [](const expr::Cos& x) { return "cos(" + affine_arg(x.omega, x.phase) + ")"; },
        [](const expr::Sinc& x) { return "sinc(" + real_str(x.omega) + ")"; },
        [](const expr::RaisedCos& x) { return "rcos(" + real_str(x.omega) + ")"; },
        [](const expr::Dirac&) { return std::string("dirac()"); },
        [](const expr::Delay& x) { return "delay(" + real_str(x.lag) + ")"; },
        [](const expr::Chirp& x) {
            return "chirp(" + real_str(x.a) + ", " + real_str(x.b) + ", " + real_str(x.c) + ")";
        },
        [](const expr::Recip& x) { return "1/(" + print(x.arg, kAdd) + ")"; },
    }, e.node().v);
}

} // namespace

std::string pretty_print(const SignalExpr& e)
{
    return print(e, kAdd);
}

// ---------------------------------------------------------------------------
// Builders

namespace build {

SignalExpr constant(const ExactComplex& c)
{
    return make_raw(expr::Const{c});
}

SignalExpr t()
{
    static const SignalExpr tv = make_raw(expr::TimeVar{});
    return tv;
}

namespace {

std::pair<std::size_t, std::string> sort_key(const SignalExpr& e)
{
    return {e.node().v.index(), pretty_print(e)};
}

} // namespace

SignalExpr add(std::vector<SignalExpr> terms)
{
    std::vector<SignalExpr> flat;
    ExactComplex c;
    for (auto& term : terms) {
        if (const auto* a = term.as<expr::Add>()) {
            for (const auto& sub_term : a->terms) {
                if (const auto* k = sub_term.as<expr::Const>()) c += k->value;
                else flat.push_back(sub_term);
            }
        } else if (const auto* k = term.as<expr::Const>()) {
            c += k->value;
        } else {
            flat.push_back(std::move(term));
        }
    }
    if (!c.is_zero()) flat.push_back(constant(c));
    if (flat.empty()) return constant(ExactComplex());
    if (flat.size() == 1) return flat.front();
    std::vector<std::pair<std::pair<std::size_t, std::string>, SignalExpr>> keyed;
    keyed.reserve(flat.size());
    for (auto& f : flat) keyed.emplace_back(sort_key(f), f);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SignalExpr> sorted;
    sorted.reserve(keyed.size());
    for (auto& [key, term] : keyed) sorted.push_back(std::move(term));
    return make_raw(expr::Add{std::move(sorted)});
}

SignalExpr mul(std::vector<SignalExpr> factors)
{
    std::vector<SignalExpr> flat;
    ExactComplex c(1);
    auto take = [&](const SignalExpr& f) {
        if (const auto* k = f.as<expr::Const>()) c *= k->value;
        else flat.push_back(f);
    };
    for (const auto& f : factors) {
        if (const auto* m = f.as<expr::Mul>()) {
            for (const auto& g : m->factors) take(g);
        } else {
            take(f);
        }
    }
    if (c.is_zero()) return constant(ExactComplex());
    if (flat.empty()) return constant(c);
    if (flat.size() == 1 && c.is_one()) return flat.front();
    std::vector<SignalExpr> out;
    out.reserve(flat.size() + 1);
    if (!c.is_one()) out.push_back(constant(c));
    for (auto& f : flat) out.push_back(std::move(f));
    return make_raw(expr::Mul{std::move(out)});
}

SignalExpr pow(const SignalExpr& base, unsigned k)
{
    if (k == 0) return constant(ExactComplex(1));
    if (k == 1) return base;
    if (const auto* c = base.as<expr::Const>()) return constant(c->value.pow(k));
    if (const auto* p = base.as<expr::Pow>()) return pow(p->base, p->k * k);
    return make_raw(expr::Pow{base, k});
}

// Builders take parameters by value and canonicalize them, so 6/4 and 3/2
// give structurally equal trees.
namespace {
Rational canon(Rational q)
{
    q.canonicalize();
    return q;
}
} // namespace

SignalExpr exp(const ExactComplex& rate)
{
    if (rate.is_zero()) return constant(ExactComplex(1));
    return make_raw(expr::Exp{rate});
}

SignalExpr sin(const Rational& omega, const Rational& phase)
{
    if (sgn(omega) == 0) {
        if (sgn(phase) == 0) return constant(ExactComplex());
        return constant(ExactComplex(rational_from_double(std::sin(phase.get_d()))));
    }
    return make_raw(expr::Sin{canon(omega), canon(phase)});
}

SignalExpr cos(const Rational& omega, const Rational& phase)
{
    if (sgn(omega) == 0) {
        if (sgn(phase) == 0) return constant(ExactComplex(1));
        return constant(ExactComplex(rational_from_double(std::cos(phase.get_d()))));
    }
    return make_raw(expr::Cos{canon(omega), canon(phase)});
}

SignalExpr sinc(const Rational& omega)
{
    if (sgn(omega) <= 0) throw DomainError("sinc requires omega > 0, got " + to_string(omega));
    return make_raw(expr::Sinc{canon(omega)});
}

SignalExpr raised_cos(const Rational& omega)
{
    if (sgn(omega) <= 0) throw DomainError("rcos requires omega > 0, got " + to_string(omega));
    return make_raw(expr::RaisedCos{canon(omega)});
}

SignalExpr dirac()
{
    return make_raw(expr::Dirac{});
}

SignalExpr delay(const Rational& lag)
{
    return make_raw(expr::Delay{canon(lag)});
}

SignalExpr chirp(const Rational& a, const Rational& b, const Rational& c)
{
    if (sgn(a) == 0) throw DomainError("chirp requires a != 0");
    return make_raw(expr::Chirp{canon(a), canon(b), canon(c)});
}

SignalExpr recip(const SignalExpr& arg)
{
    if (const auto* c = arg.as<expr::Const>()) {
        if (c->value.is_zero()) throw DomainError("division by zero");
        return constant(ExactComplex(1) / c->value);
    }
    if (const auto* r = arg.as<expr::Recip>()) return r->arg;
    return make_raw(expr::Recip{arg});
}

SignalExpr neg(const SignalExpr& e)
{
    return mul({constant(ExactComplex(-1)), e});
}

SignalExpr sub(const SignalExpr& a, const SignalExpr& b)
{
    return add({a, neg(b)});
}

} // namespace build

SignalExpr canonical(const SignalExpr& e)
{
    return std::visit(overloaded{
        [&](const expr::Const& x) { return build::constant(x.value); },
        [&](const expr::TimeVar&) { return build::t(); },
        [&](const expr::Add& x) {
            std::vector<SignalExpr> terms;
            for (const auto& term : x.terms) terms.push_back(canonical(term));
            return build::add(std::move(terms));
        },
        [&](const expr::Mul& x) {
            std::vector<SignalExpr> factors;
            for (const auto& f : x.factors) factors.push_back(canonical(f));
            return build::mul(std::move(factors));
        },
        [&](const expr::Pow& x) { return build::pow(canonical(x.base), x.k); },
        [&](const expr::Exp& x) { return build::exp(x.rate); },
        [&](const expr::Sin& x) { return build::sin(x.omega, x.phase); },
        [&](const expr::Cos& x) { return build::cos(x.omega, x.phase); },
        [&](const expr::Sinc& x) { return build::sinc(x.omega); },
        [&](const expr::RaisedCos& x) { return build::raised_cos(x.omega); },
        [&](const expr::Dirac&) { return build::dirac(); },
        [&](const expr::Delay& x) { return build::delay(x.lag); },
        [&](const expr::Chirp& x) { return build::chirp(x.a, x.b, x.c); },
        [&](const expr::Recip& x) { return build::recip(canonical(x.arg)); },
    }, e.node().v);
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(SignalClass c)
{
    switch (c) {
    case SignalClass::ExpPolynomial: return "exp_polynomial";
    case SignalClass::Dirac: return "dirac";
    case SignalClass::OdeDefined: return "ode_defined";
    case SignalClass::Unsupported: return "unsupported";
    }
    return "unsupported";
}

namespace {

bool is_exp_polynomial(const SignalExpr& e)
{
    return std::visit(overloaded{
        [](const expr::Const&) { return true; },
        [](const expr::TimeVar&) { return true; },
        [](const expr::Add& x) {
            return std::all_of(x.terms.begin(), x.terms.end(), is_exp_polynomial);
        },
        [](const expr::Mul& x) {
            return std::all_of(x.factors.begin(), x.factors.end(), is_exp_polynomial);
        },
        [](const expr::Pow& x) { return is_exp_polynomial(x.base); },
        [](const expr::Exp&) { return true; },
        [](const expr::Sin&) { return true; },
        [](const expr::Cos&) { return true; },
        [](const auto&) { return false; },
    }, e.node().v);
}

} // namespace

std::optional<ScaledAtom> as_scaled_atom(const SignalExpr& e)
{
    if (const auto* m = e.as<expr::Mul>()) {
        if (m->factors.size() == 2) {
            if (const auto* c = m->factors[0].as<expr::Const>()) {
                const SignalExpr& atom = m->factors[1];
                if (!atom.is<expr::Add>() && !atom.is<expr::Mul>()) return ScaledAtom{c->value, atom};
            }
        }
        return std::nullopt;
    }
    if (e.is<expr::Add>() || e.is<expr::Const>()) return std::nullopt;
    return ScaledAtom{ExactComplex(1), e};
}

SignalClass classify(const SignalExpr& e)
{
    if (is_exp_polynomial(e)) return SignalClass::ExpPolynomial;
    if (auto sa = as_scaled_atom(e)) {
        const SignalExpr& a = sa->atom;
        if (a.is<expr::Dirac>()) return SignalClass::Dirac;
        if (a.is<expr::Sinc>() || a.is<expr::RaisedCos>() || a.is<expr::Delay>() || a.is<expr::Chirp>())
            return SignalClass::OdeDefined;
    }
    return SignalClass::Unsupported;
}

bool is_evaluable(const SignalExpr& e)
{
    return std::visit(overloaded{
        [](const expr::Add& x) { return std::all_of(x.terms.begin(), x.terms.end(), is_evaluable); },
        [](const expr::Mul& x) { return std::all_of(x.factors.begin(), x.factors.end(), is_evaluable); },
        [](const expr::Pow& x) { return is_evaluable(x.base); },
        [](const expr::Recip& x) { return is_evaluable(x.arg); },
        [](const expr::Dirac&) { return false; },
        [](const expr::Delay&) { return false; },
        [](const auto&) { return true; },
    }, e.node().v);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using cd = std::complex<double>;

cd eval_at(const SignalExpr& e, double t)
{
    return std::visit(overloaded{
        [](const expr::Const& x) { return x.value.to_complex(); },
        [t](const expr::TimeVar&) { return cd(t); },
        [t](const expr::Add& x) {
            cd acc = 0.0;
            for (const auto& term : x.terms) acc += eval_at(term, t);
            return acc;
        },
        [t](const expr::Mul& x) {
            cd acc = 1.0;
            for (const auto& f : x.factors) acc *= eval_at(f, t);
            return acc;
        },
        [t](const expr::Pow& x) {
            cd b = eval_at(x.base, t);
            cd acc = 1.0;
            for (unsigned k = 0; k < x.k; ++k) acc *= b;
            return acc;
        },
        [t](const expr::Exp& x) { return std::exp(x.rate.to_complex() * t); },
        [t](const expr::Sin& x) { return cd(std::sin(x.omega.get_d() * t + x.phase.get_d())); },
        [t](const expr::Cos& x) { return cd(std::cos(x.omega.get_d() * t + x.phase.get_d())); },
        [t](const expr::Sinc& x) {
            const double w = x.omega.get_d();
            if (t == 0.0) return cd(w);
            return cd(std::sin(w * t) / t);
        },
        [t](const expr::RaisedCos& x) { return cd(std::cos(x.omega.get_d() * t) / (t * t + 1.0)); },
        [](const expr::Dirac&) -> cd { throw DomainError("the Dirac impulse has no pointwise value"); },
        [](const expr::Delay&) -> cd {
            throw DomainError("a standalone delay operator has no pointwise value");
        },
        [t](const expr::Chirp& x) {
            const double phase = x.a.get_d() * t * t + x.b.get_d() * t + x.c.get_d();
            return std::polar(1.0, phase);
        },
        [t](const expr::Recip& x) { return 1.0 / eval_at(x.arg, t); },
    }, e.node().v);
}

} // namespace

std::complex<double> eval(const SignalExpr& e, double t)
{
    if (!(t >= 0.0)) throw DomainError("signals are defined for t >= 0");
    return eval_at(e, t);
}

// ---------------------------------------------------------------------------
// Time differentiation

SignalExpr diff_time(const SignalExpr& e)
{
    using namespace build;
    return std::visit(overloaded{
        [](const expr::Const&) { return constant(ExactComplex()); },
        [](const expr::TimeVar&) { return constant(ExactComplex(1)); },
        [](const expr::Add& x) {
            std::vector<SignalExpr> terms;
            for (const auto& term : x.terms) terms.push_back(diff_time(term));
            return add(std::move(terms));
        },
        [](const expr::Mul& x) {
            std::vector<SignalExpr> terms;
            for (std::size_t k = 0; k < x.factors.size(); ++k) {
                if (x.factors[k].is<expr::Const>()) continue;
                std::vector<SignalExpr> fs = x.factors;
                fs[k] = diff_time(x.factors[k]);
                terms.push_back(mul(std::move(fs)));
            }
            return add(std::move(terms));
        },
        [](const expr::Pow& x) {
            return mul({constant(ExactComplex(static_cast<long>(x.k))), pow(x.base, x.k - 1),
                        diff_time(x.base)});
        },
        [&e](const expr::Exp& x) { return mul({constant(x.rate), e}); },
        [](const expr::Sin& x) { return mul({constant(ExactComplex(x.omega)), cos(x.omega, x.phase)}); },
        [](const expr::Cos& x) { return mul({constant(ExactComplex(-x.omega)), sin(x.omega, x.phase)}); },
        [](const expr::Sinc& x) {
            // sin(wt) * (1/t)
            return diff_time(make_raw(expr::Mul{{sin(x.omega), recip(t())}}));
        },
        [](const expr::RaisedCos& x) {
            // cos(wt) * 1/(t^2 + 1)
            SignalExpr den = add({pow(t(), 2), constant(ExactComplex(1))});
            return diff_time(make_raw(expr::Mul{{cos(x.omega), recip(den)}}));
        },
        [](const expr::Dirac&) -> SignalExpr {
            throw DomainError("the Dirac impulse is not differentiable pointwise");
        },
        [](const expr::Delay&) -> SignalExpr {
            throw DomainError("a standalone delay operator is not differentiable pointwise");
        },
        [&e](const expr::Chirp& x) {
            // i (2a t + b) * chirp
            SignalExpr inner = add({mul({constant(ExactComplex(2 * x.a)), t()}), constant(ExactComplex(x.b))});
            return mul({constant(ExactComplex::i()), inner, e});
        },
        [](const expr::Recip& x) {
            return mul({constant(ExactComplex(-1)), diff_time(x.arg), recip(pow(x.arg, 2))});
        },
    }, e.node().v);
}

} // namespace algspec
