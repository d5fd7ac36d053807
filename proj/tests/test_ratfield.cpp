#include "algspec/error.hpp"
#include "algspec/opcalc.hpp"
#include "algspec/ratfunc.hpp"
#include "algspec/roots.hpp"
#include "algspec/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algspec;

namespace {

const RatFunc S = RatFunc::s();

CPoly poly(std::initializer_list<long> c)
{
    std::vector<ExactComplex> v;
    for (long x : c) v.emplace_back(x);
    return CPoly(std::move(v));
}

ExactComplex gi(long re, long im) { return {Rational(re), Rational(im)}; }

RatFunc random_ratfunc(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto rp = [&](bool nonzero) {
        for (;;) {
            std::vector<ExactComplex> v;
            const int d = deg(rng);
            for (int k = 0; k <= d; ++k) v.push_back(gi(c(rng), c(rng) % 2));
            CPoly p(std::move(v));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return RatFunc(rp(false), rp(true));
}

} // namespace

TEST_CASE("polynomial division and gcd")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 50; ++n) {
        const RatFunc r = random_ratfunc(rng);
        const CPoly a = r.num() * poly({1, 2, 3});
        const CPoly b = r.den();
        const auto [q, rem] = divmod(a, b);
        CHECK(q * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    CHECK(gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(gcd(poly({1, 0, 1}), poly({0, 1})) == CPoly(1));
    CHECK(gcd(CPoly(), CPoly()).is_zero());
    CHECK_THROWS_AS(divmod(poly({1}), CPoly()), DomainError);
    CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({-1, 1})), DomainError);
}

TEST_CASE("taylor_shift and evaluation")
{
    const CPoly p = poly({1, -3, 0, 2});
    const ExactComplex h = gi(2, -1);
    const CPoly q = p.taylor_shift(h);
    for (long x : {-2L, 0L, 3L}) CHECK(q.evaluate(ExactComplex(x)) == p.evaluate(ExactComplex(x) + h));
    CHECK(poly({9, 0, 1}).to_string() == "s^2 + 9");
}

TEST_CASE("RatFunc reduction")
{
    CHECK(RatFunc(poly({-1, 0, 1}), poly({-1, 1})) == RatFunc(poly({1, 1})));
    const RatFunc r(poly({0, 2}), CPoly(2));
    CHECK(r.num() == poly({0, 1}));
    CHECK(r.den() == CPoly(1));
    CHECK(RatFunc(poly({9, 0, 1}), poly({9, 0, 1})) == RatFunc(1));
    CHECK_THROWS_AS(RatFunc(CPoly(1), CPoly()), DomainError);
}

TEST_CASE("RatFunc arithmetic")
{
    const RatFunc sum = RatFunc(1) / (S - RatFunc(1)) + RatFunc(1) / (S + RatFunc(1));
    CHECK(sum == RatFunc(poly({0, 2}), poly({-1, 0, 1})));
    const RatFunc x = S / (S * S + RatFunc(1));
    CHECK(x * (S * S + RatFunc(1)) == S);
    CHECK_THROWS_AS(x / RatFunc(0), DomainError);
    CHECK(S.pow(-2) == RatFunc(CPoly(1), poly({0, 0, 1})));
}

TEST_CASE("field identities on random elements")
{
    std::mt19937_64 rng(42);
    for (int n = 0; n < 60; ++n) {
        const RatFunc a = random_ratfunc(rng);
        const RatFunc b = random_ratfunc(rng);
        const RatFunc c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc(0));
        if (!a.is_zero()) CHECK(a / a == RatFunc(1));
        CHECK(a.den().lead() == ExactComplex(1));
        // Leibniz rule for the algebraic derivative.
        CHECK(alg_deriv(a * b) == alg_deriv(a) * b + a * alg_deriv(b));
    }
}

TEST_CASE("algebraic derivative")
{
    CHECK(alg_deriv(RatFunc(1) / S) == -(RatFunc(1) / (S * S)));
    const ExactComplex a(3);
    CHECK(alg_deriv(RatFunc(1) / (S - RatFunc(a))) == -(RatFunc(1) / (S - RatFunc(a)).pow(2)));
    const RatFunc w2(4);
    CHECK(alg_deriv(S / (S * S + w2)) == (w2 - S * S) / (S * S + w2).pow(2));
    CHECK(alg_deriv(RatFunc(7)).is_zero());
    CHECK(alg_deriv(RatFunc(1) / S, 3) == RatFunc(-6) / S.pow(4));
}

TEST_CASE("substitute_reciprocal and laurent")
{
    const RatFunc r = S / (S * S + RatFunc(1));
    // s/(s^2+1) at s = 1/z is z/(1+z^2).
    CHECK(r.substitute_reciprocal() == r);
    CHECK(S.substitute_reciprocal() == RatFunc(1) / S);
    const RatFunc l = laurent({{-2, ExactComplex(3)}, {1, ExactComplex(1)}});
    CHECK(l == RatFunc(3) / (S * S) + S);
}

TEST_CASE("poles")
{
    const auto p = poles(RatFunc(CPoly(3), poly({9, 0, 1})));
    REQUIRE(p.size() == 2);
    CHECK(p[0].location == gi(0, -3));
    CHECK(p[1].location == gi(0, 3));
    CHECK(p[0].exact);

    const auto triple = poles(RatFunc(1) / (S - RatFunc(2)).pow(3));
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].location == ExactComplex(2));
    CHECK(triple[0].multiplicity == 3);

    const auto irr = poles(RatFunc(CPoly(1), poly({-2, 0, 1})));
    REQUIRE(irr.size() == 2);
    CHECK_FALSE(irr[1].exact);
    CHECK(irr[1].approx().real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(irr[0].approx().real() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));

    CHECK(poles(S * S + RatFunc(1)).empty());
    CHECK(pole_order_at(RatFunc(1) / (S - RatFunc(2)).pow(3), {2.0, 0.0}) == 3);
    CHECK(pole_order_at(RatFunc(1) / S, {1.0, 0.0}) == 0);
}

TEST_CASE("square-free decomposition")
{
    const CPoly p = CPoly::linear(ExactComplex(1)).pow(2) * CPoly::linear(gi(0, 1)).pow(3) * CPoly(5);
    const auto f = square_free_decomposition(p);
    CPoly back(5);
    for (const auto& sf : f) back *= sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
    CHECK(back == p);
}

TEST_CASE("partial fractions")
{
    const RatFunc r(poly({0, 2}), poly({-1, 0, 1}));
    const PartialFractions pf = partial_fractions(r);
    CHECK(pf.exact);
    CHECK(pf.polynomial.is_zero());
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].pole == ExactComplex(-1));
    CHECK(pf.terms[0].coefficient == ExactComplex(1));
    CHECK(pf.terms[1].pole == ExactComplex(1));
    CHECK(pf.terms[1].coefficient == ExactComplex(1));

    const RatFunc sq = RatFunc(1) / (S - RatFunc(gi(1, 2))).pow(2);
    const auto pf2 = partial_fractions(sq);
    REQUIRE(pf2.terms.size() == 1);
    CHECK(pf2.terms[0].order == 2);
    CHECK(pf2.terms[0].coefficient == ExactComplex(1));

    std::mt19937_64 rng(5);
    for (int n = 0; n < 40; ++n) {
        const RatFunc x = random_ratfunc(rng);
        const PartialFractions d = partial_fractions(x);
        // Irrational poles go through the numeric path; only exact
        // decompositions must recombine to the identical element.
        if (d.exact)
            CHECK(recombine(d) == x);
        else
            CHECK(coefficient_distance(recombine(d), x) < 1e-9);
    }
}

TEST_CASE("spectrum of rational images")
{
    const Spectrum a = spectrum_of_rational(RatFunc(CPoly(3), poly({9, 0, 1})));
    REQUIRE(a.frequencies.size() == 2);
    CHECK(a.frequencies[0] == -3.0);
    CHECK(a.frequencies[1] == 3.0);
    CHECK(a.sources.size() == 2);

    // Real poles and Laurent polynomials carry no frequency.
    CHECK(spectrum_of_rational(RatFunc(1) / (S - RatFunc(2))).empty());
    CHECK(spectrum_of_rational(laurent({{-3, ExactComplex(1)}, {2, ExactComplex(1)}})).empty());
    CHECK(spectrum_of_rational(RatFunc(1)).empty());
}

TEST_CASE("make_spectrum deduplicates within tolerance")
{
    std::vector<SingularityRecord> src;
    src.push_back({{0.0, 2.0}, SourceKind::pole, 1});
    src.push_back({{1.0, 2.0 * (1 + 1e-12)}, SourceKind::pole, 1});
    src.push_back({{0.0, -5.0}, SourceKind::pole, 2});
    src.push_back({{4.0, 0.0}, SourceKind::pole, 1});
    const Spectrum s = make_spectrum(src);
    REQUIRE(s.frequencies.size() == 2);
    CHECK(s.frequencies[0] == -5.0);
    CHECK(s.frequencies[1] == doctest::Approx(2.0));
}

TEST_CASE("spectrum JSON")
{
    const Spectrum a = spectrum_of_rational(RatFunc(CPoly(3), poly({9, 0, 1})));
    const nlohmann::json j = to_json(a);
    CHECK(j["frequencies"] == nlohmann::json::parse("[-3, 3]"));
    CHECK(j["infinite_singularity"] == false);
    REQUIRE(j["sources"].size() == 2);
    for (const char* key : {"re", "im", "kind", "order", "fuchs", "status"})
        CHECK(j["sources"][0].contains(key));
    CHECK(j["sources"][0]["kind"] == "pole");
    CHECK(round_significant(1.23456789, 3) == 1.23);
    CHECK(std::signbit(round_significant(-0.0, 5)) == false);
    CHECK(json_number(2.0, 15).is_number_integer());
}
