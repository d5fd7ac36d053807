#include "algspec/error.hpp"
#include "algspec/opcalc.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algspec;

namespace {

const RatFunc S = RatFunc::s();

ExactComplex gi(Rational re, Rational im) { return {std::move(re), std::move(im)}; }

RatFunc image_of(const char* text) { return to_rational(from_signal(parse(text))); }

} // namespace

TEST_CASE("images of elementary signals")
{
    CHECK(image_of("sin(3*t)") == RatFunc(3) / (S * S + RatFunc(9)));
    CHECK(image_of("cos(2*t)") == S / (S * S + RatFunc(4)));
    CHECK(image_of("1") == RatFunc(1) / S);
    CHECK(image_of("t") == RatFunc(1) / (S * S));
    CHECK(image_of("t^2*exp(-t)") == RatFunc(2) / (S + RatFunc(1)).pow(3));
    CHECK(image_of("exp(2*i*t)") == RatFunc(1) / (S - RatFunc(gi(0, 2))));
    CHECK(image_of("0").is_zero());
    CHECK(dirac_image() == RatFunc(1));
}

TEST_CASE("from_signal expands through Euler's formula")
{
    const ExpPoly x = from_signal(parse("sin(2*t)"));
    REQUIRE(x.terms().size() == 2);
    CHECK(x.terms()[0].rate == gi(0, -2));
    CHECK(x.terms()[1].rate == gi(0, 2));
    // 1/(2i) = -i/2 on e^(2it).
    CHECK(x.terms()[1].poly == CPoly(gi(0, Rational(-1, 2))));
    CHECK(x.terms()[0].poly == CPoly(gi(0, Rational(1, 2))));

    const ExpPoly y = from_signal(parse("t^2*exp(-t)"));
    REQUIRE(y.terms().size() == 1);
    CHECK(y.terms()[0].rate == ExactComplex(-1));
    CHECK(y.terms()[0].poly == CPoly::monomial(ExactComplex(1), 2));

    CHECK_THROWS_AS(from_signal(parse("sinc(1)")), UnsupportedError);
}

TEST_CASE("to_exppoly inverts to_rational")
{
    const RatFunc r = RatFunc(2) * S / (S * S - RatFunc(1));
    const ExpPoly x = to_exppoly(r);
    CHECK(x == ExpPoly::exponential(ExactComplex(1)) + ExpPoly::exponential(ExactComplex(-1)));
    CHECK_THROWS_AS(to_exppoly(S), DomainError);
    CHECK_THROWS_AS(to_exppoly(RatFunc(1)), DomainError);

    for (const char* text : {"sin(3*t) + t^2*exp(-t)", "cos(t/2 + 1/3)*t", "3*exp((1-2*i)*t)*t^3 + 7"}) {
        const ExpPoly e = from_signal(parse(text));
        INFO(text);
        CHECK(to_exppoly(to_rational(e)) == e);
    }
}

TEST_CASE("bijection on random exponential polynomials")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-6, 6);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int n = 0; n < 100; ++n) {
        std::vector<ExpTerm> terms;
        for (int k = 0; k < 3; ++k) {
            std::vector<ExactComplex> p;
            for (int d = 0; d <= deg(rng); ++d) p.push_back(gi(c(rng), c(rng)));
            terms.push_back({gi(Rational(c(rng), 2), c(rng)), CPoly(p)});
        }
        const ExpPoly x(terms);
        const RatFunc r = to_rational(x);
        CHECK(r.is_strictly_proper());
        CHECK(to_exppoly(r) == x);
    }
}

TEST_CASE("multiplication by -t is the algebraic derivative")
{
    for (const char* text : {"exp(3*t)", "1", "sin(2*t)*t", "t^2*exp(-t) + cos(t)"}) {
        const ExpPoly x = from_signal(parse(text));
        INFO(text);
        CHECK(to_rational(mult_by_minus_t(x)) == alg_deriv(to_rational(x)));
    }
    CHECK(mult_by_minus_t(ExpPoly::constant(1)) == ExpPoly::time() * ExactComplex(-1));
}

TEST_CASE("spectrum of exponential polynomials")
{
    const Spectrum s = spectrum_of_exppoly(from_signal(parse("sin(3*t) + exp(-t)*cos(5*t)")));
    REQUIRE(s.frequencies.size() == 4);
    CHECK(s.frequencies[0] == -5.0);
    CHECK(s.frequencies[3] == 5.0);
    CHECK(spectrum_of_exppoly(from_signal(parse("t^3 + 2"))).empty());
}

TEST_CASE("taylor truncation")
{
    const ExpPoly p = taylor_truncate(parse("sin(2*t)"), 0, 5);
    REQUIRE(p.is_polynomial());
    const CPoly& c = p.terms()[0].poly;
    CHECK(c.coeff(0) == ExactComplex(0));
    CHECK(c.coeff(1) == ExactComplex(2));
    CHECK(c.coeff(2) == ExactComplex(0));
    CHECK(c.coeff(3) == ExactComplex(Rational(-4, 3)));
    CHECK(c.coeff(5) == ExactComplex(Rational(4, 15)));
    CHECK(spectrum_of_exppoly(p).empty());

    // A polynomial is its own Taylor polynomial once the order reaches its
    // degree.
    const ExpPoly q = from_signal(parse("3*t^2 - t + 5"));
    CHECK(taylor_truncate(parse("3*t^2 - t + 5"), 0, 2) == q);
    CHECK(taylor_truncate(parse("3*t^2 - t + 5"), 0, 6) == q);
}

TEST_CASE("ExpPoly evaluation matches the expression")
{
    for (const char* text : {"3*t^2*exp(-t) + sin(2*t + 1)", "cos(t)^3", "exp(i*t)*t - 4"}) {
        const SignalExpr e = parse(text);
        const ExpPoly x = from_signal(e);
        for (double t : {0.0, 0.7, 2.2}) {
            INFO(text << " at " << t);
            CHECK(std::abs(x.eval(t) - eval(e, t)) < 1e-12 * (1 + std::abs(eval(e, t))));
        }
    }
}

TEST_CASE("coefficient distance")
{
    const ExpPoly a = from_signal(parse("sin(2*t)"));
    CHECK(coefficient_distance(a, a) == 0.0);
    CHECK(coefficient_distance(a, a + ExpPoly::constant(1)) == doctest::Approx(1.0));
    const RatFunc r = RatFunc(1) / (S + RatFunc(1));
    CHECK(coefficient_distance(r, r) == 0.0);
    CHECK(coefficient_distance(r, RatFunc(2) / (S + RatFunc(1))) == doctest::Approx(1.0));
}
