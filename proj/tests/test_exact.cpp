#include "algspec/error.hpp"
#include "algspec/exact.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace algspec;

TEST_CASE("rational_from_double is exact on dyadic values")
{
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(-3.0) == Rational(-3));
    CHECK(rational_from_double(0.0) == Rational(0));
    // 0.1 is not dyadic; the embedding is the exact binary value, not 1/10.
    const Rational tenth = rational_from_double(0.1);
    CHECK(tenth != Rational(1, 10));
    CHECK(tenth.get_d() == 0.1);
    CHECK_THROWS_AS(rational_from_double(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(rational_from_double(std::nan("")), DomainError);
}

TEST_CASE("parse_decimal reads decimal literals exactly")
{
    CHECK(parse_decimal("12") == Rational(12));
    CHECK(parse_decimal("2.5") == Rational(5, 2));
    CHECK(parse_decimal("1e-3") == Rational(1, 1000));
    CHECK(parse_decimal(".5") == Rational(1, 2));
    CHECK(parse_decimal("0.1") == Rational(1, 10));
    CHECK_THROWS_AS(parse_decimal(""), DomainError);
    CHECK_THROWS_AS(parse_decimal("1.2.3"), DomainError);
    CHECK_THROWS_AS(parse_decimal("abc"), DomainError);
}

TEST_CASE("rational_approximation")
{
    CHECK(rational_approximation(0.333333333333, 100) == Rational(1, 3));
    CHECK(rational_approximation(3.14159265358979, 1000) == Rational(355, 113));
    CHECK(rational_approximation(-2.5, 10) == Rational(-5, 2));
}

TEST_CASE("Rational formatting")
{
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK(to_string(Rational(1, 3)) == "1/3");
}

TEST_CASE("ExactComplex arithmetic")
{
    const ExactComplex i = ExactComplex::i();
    CHECK(i * i == ExactComplex(-1));
    const ExactComplex a(Rational(1), Rational(2));
    const ExactComplex b(Rational(3), Rational(-1));
    CHECK(a + b == ExactComplex(Rational(4), Rational(1)));
    CHECK(a * b == ExactComplex(Rational(5), Rational(5)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == ExactComplex(Rational(1), Rational(-2)));
    CHECK(a.norm() == Rational(5));
    CHECK(i.pow(4) == ExactComplex(1));
    CHECK(a.pow(0) == ExactComplex(1));
    CHECK_THROWS_AS(a / ExactComplex(0), DomainError);
}

TEST_CASE("ExactComplex equality is canonical")
{
    CHECK(ExactComplex(Rational(6, 4)) == ExactComplex(Rational(3, 2)));
    CHECK(ExactComplex(Rational(-6, 2), Rational(4, 8)) == ExactComplex(Rational(-3), Rational(1, 2)));
}

TEST_CASE("ExactComplex ordering and conversion")
{
    CHECK(compare(ExactComplex(1), ExactComplex(2)) < 0);
    CHECK(compare(ExactComplex(Rational(1), Rational(-1)), ExactComplex(Rational(1), Rational(1))) < 0);
    CHECK(compare(ExactComplex(3), ExactComplex(3)) == 0);
    const auto z = ExactComplex::from_complex(std::complex<double>(0.25, -1.5));
    CHECK(z == ExactComplex(Rational(1, 4), Rational(-3, 2)));
    CHECK(z.to_complex() == std::complex<double>(0.25, -1.5));
}

TEST_CASE("ExactComplex string forms")
{
    CHECK(to_expr_string(ExactComplex(3)) == "3");
    CHECK(to_expr_string(ExactComplex(Rational(1, 2))) == "(1/2)");
    CHECK(to_expr_string(ExactComplex(Rational(0), Rational(2))) == "(2*i)");
    CHECK(to_display_string(ExactComplex(Rational(1, 2))) == "1/2");
    CHECK(to_display_string(ExactComplex(Rational(0), Rational(2))) == "2i");
    CHECK(to_display_string(ExactComplex(Rational(1), Rational(-1, 3))) == "1-1/3i");
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Rational("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}
