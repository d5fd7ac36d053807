#include "algspec/error.hpp"
#include "algspec/sigexpr.hpp"

#include <cctype>
#include <cmath>

namespace algspec {

namespace {

struct Affine {
    ExactComplex slope;   // coefficient of t
    ExactComplex offset;
};

// slope * t + offset, if e has that form.
std::optional<Affine> as_affine(const SignalExpr& e)
{
    if (const auto* c = e.as<expr::Const>()) return Affine{ExactComplex(), c->value};
    if (e.is<expr::TimeVar>()) return Affine{ExactComplex(1), ExactComplex()};
    if (const auto* m = e.as<expr::Mul>()) {
        ExactComplex scale(1);
        std::optional<Affine> inner;
        for (const auto& f : m->factors) {
            if (const auto* c = f.as<expr::Const>()) {
                scale *= c->value;
            } else {
                if (inner) return std::nullopt;
                inner = as_affine(f);
                if (!inner) return std::nullopt;
            }
        }
        if (!inner) return Affine{ExactComplex(), scale};
        return Affine{inner->slope * scale, inner->offset * scale};
    }
    if (const auto* a = e.as<expr::Add>()) {
        Affine acc{ExactComplex(), ExactComplex()};
        for (const auto& term : a->terms) {
            auto part = as_affine(term);
            if (!part) return std::nullopt;
            acc.slope += part->slope;
            acc.offset += part->offset;
        }
        return acc;
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SignalExpr run()
    {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
        SignalExpr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ >= text_.size())
                throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
            throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
        }
    }

    SignalExpr parse_expr()
    {
        SignalExpr lhs = parse_term();
        for (;;) {
            if (accept('+')) lhs = build::add({lhs, parse_term()});
            else if (accept('-')) lhs = build::sub(lhs, parse_term());
            else return lhs;
        }
    }

    SignalExpr parse_term()
    {
        SignalExpr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = build::mul({lhs, parse_unary()});
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                SignalExpr rhs = parse_unary();
                if (const auto* c = rhs.as<expr::Const>(); c && c->value.is_zero())
                    throw DomainError("division by zero", at);
                lhs = build::mul({lhs, build::recip(rhs)});
            } else {
                return lhs;
            }
        }
    }

    SignalExpr parse_unary()
    {
        if (accept('-')) return build::neg(parse_unary());
        if (accept('+')) return parse_unary();
        return parse_factor();
    }

    SignalExpr parse_factor()
    {
        SignalExpr base = parse_atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected a nonnegative integer exponent", start);
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
                throw ParseError("exponent must be a nonnegative integer", start);
            if (pos_ - start > 6) throw ParseError("exponent too large", start);
            unsigned k = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            return build::pow(base, k);
        }
        return base;
    }

    SignalExpr parse_atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == '(') {
            ++pos_;
            SignalExpr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string ident(text_.substr(start, pos_ - start));
            if (ident == "t") return build::t();
            if (ident == "i") return build::constant(ExactComplex::i());
            return parse_call(ident, start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    SignalExpr parse_number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                // "2e" or "2exp(t)": not an exponent.
                pos_ = save;
            } else {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        try {
            return build::constant(ExactComplex(parse_decimal(text_.substr(start, pos_ - start))));
        } catch (const DomainError& err) {
            throw ParseError(err.what(), start);
        }
    }

    std::vector<std::pair<SignalExpr, std::size_t>> parse_args()
    {
        std::vector<std::pair<SignalExpr, std::size_t>> args;
        expect('(');
        if (accept(')')) return args;
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            args.emplace_back(parse_expr(), at);
            if (accept(')')) return args;
            expect(',');
        }
    }

    static Rational real_constant(const SignalExpr& e, std::size_t at, const char* what)
    {
        const auto* c = e.as<expr::Const>();
        if (!c) throw DomainError(std::string(what) + " must be a constant", at);
        if (!c->value.is_real()) throw DomainError(std::string(what) + " must be real", at);
        return c->value.re();
    }

    static void arity(const std::string& name, std::size_t got, std::size_t lo, std::size_t hi,
                      std::size_t at)
    {
        if (got < lo || got > hi) {
            std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi);
            throw ParseError(name + "() takes " + want + " argument(s), got " + std::to_string(got), at);
        }
    }

    template <class F>
    static SignalExpr with_offset(std::size_t at, F&& f)
    {
        try {
            return f();
        } catch (const DomainError& err) {
            if (err.offset()) throw;
            throw DomainError(err.what(), at);
        }
    }

    SignalExpr parse_call(const std::string& name, std::size_t at)
    {
        static const char* known[] = {"exp", "sin", "cos", "sinc", "rcos", "dirac", "delay", "chirp"};
        bool ok = false;
        for (const char* k : known) ok = ok || name == k;
        if (!ok) throw ParseError("unknown identifier '" + name + "'", at);
        auto args = parse_args();

        if (name == "dirac") {
            arity(name, args.size(), 0, 0, at);
            return build::dirac();
        }
        if (name == "exp") {
            arity(name, args.size(), 1, 1, at);
            auto aff = as_affine(args[0].first);
            if (!aff) throw DomainError("exp() argument must be of the form a*t + b", args[0].second);
            SignalExpr scale = build::constant(ExactComplex(1));
            if (!aff->offset.is_zero()) {
                auto v = std::exp(aff->offset.to_complex());
                scale = build::constant(ExactComplex::from_complex(v));
            }
            return build::mul({scale, build::exp(aff->slope)});
        }
        if (name == "sin" || name == "cos") {
            arity(name, args.size(), 1, 2, at);
            Rational omega, phase;
            if (args.size() == 2) {
                omega = real_constant(args[0].first, args[0].second, "omega");
                phase = real_constant(args[1].first, args[1].second, "phase");
            } else {
                auto aff = as_affine(args[0].first);
                if (!aff) throw DomainError(name + "() argument must be of the form w*t + phi", args[0].second);
                if (!aff->slope.is_real() || !aff->offset.is_real())
                    throw DomainError(name + "() frequency and phase must be real", args[0].second);
                omega = aff->slope.re();
                phase = aff->offset.re();
            }
            return with_offset(at, [&] { return name == "sin" ? build::sin(omega, phase) : build::cos(omega, phase); });
        }
        if (name == "sinc" || name == "rcos" || name == "delay") {
            arity(name, args.size(), 1, 1, at);
            Rational v = real_constant(args[0].first, args[0].second, name == "delay" ? "lag" : "omega");
            return with_offset(args[0].second, [&] {
                if (name == "sinc") return build::sinc(v);
                if (name == "rcos") return build::raised_cos(v);
                return build::delay(v);
            });
        }
        // chirp
        arity(name, args.size(), 3, 3, at);
        Rational a = real_constant(args[0].first, args[0].second, "a");
        Rational b = real_constant(args[1].first, args[1].second, "b");
        Rational c = real_constant(args[2].first, args[2].second, "c");
        return with_offset(args[0].second, [&] { return build::chirp(a, b, c); });
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SignalExpr parse(std::string_view text)
{
    return Parser(text).run();
}

} // namespace algspec
