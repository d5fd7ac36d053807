#include "algspec/error.hpp"
#include "algspec/fourier.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace algspec;

namespace {

const double kPi = std::acos(-1.0);

cvec random_signal(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    cvec x(n);
    for (auto& v : x) v = {g(rng), g(rng)};
    return x;
}

double max_diff(const cvec& a, const cvec& b)
{
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

} // namespace

TEST_CASE("transform of an impulse is flat")
{
    cvec x(64);
    x[0] = 1.0;
    for (const auto& v : dft_auto(x)) CHECK(std::abs(v - std::complex<double>(1, 0)) < 1e-14);
}

TEST_CASE("radix-2 agrees with the direct transform")
{
    for (std::size_t n : {1u, 2u, 8u, 256u}) {
        const cvec x = random_signal(n, static_cast<unsigned>(n));
        CHECK(max_diff(dft_radix2(x), dft_direct(x)) < 1e-10 * static_cast<double>(n));
    }
    CHECK_THROWS_AS(dft_radix2(cvec(12)), DomainError);
    CHECK(dft_auto(cvec(12)).size() == 12);
}

TEST_CASE("Parseval")
{
    for (std::size_t n : {100u, 128u}) {
        const cvec x = random_signal(n, 9);
        const cvec X = dft_auto(x);
        double ex = 0, eX = 0;
        for (const auto& v : x) ex += std::norm(v);
        for (const auto& v : X) eX += std::norm(v);
        CHECK(eX / static_cast<double>(n) == doctest::Approx(ex).epsilon(1e-12));
    }
}

TEST_CASE("sampled transform")
{
    SampledSignal s;
    const double dt = 0.05;
    for (int k = 0; k < 1024; ++k) {
        s.times.push_back(k * dt);
        s.values.push_back(std::sin(3.0 * k * dt));
    }
    const DftResult r = dft(s);
    REQUIRE(r.bin_frequencies.size() == 1024);
    CHECK(std::is_sorted(r.bin_frequencies.begin(), r.bin_frequencies.end()));
    CHECK(r.bin_frequencies.front() == doctest::Approx(-kPi / dt));
    const double bin = 2 * kPi / (1024 * dt);
    const auto dom = dominant_bins(r, 2);
    REQUIRE(dom.size() == 2);
    CHECK(std::abs(dom[0] + 3.0) <= bin / 2);
    CHECK(std::abs(dom[1] - 3.0) <= bin / 2);

    SampledSignal uneven = s;
    uneven.times[10] += 0.01;
    CHECK_THROWS_AS(dft(uneven), DomainError);
}

TEST_CASE("closed-form transform of sinc")
{
    CHECK(sinc_fourier_closed_form(3, 0) == 3.0);
    CHECK(sinc_fourier_closed_form(3, 2.9) == 3.0);
    CHECK(sinc_fourier_closed_form(3, 3) == 1.5);
    CHECK(sinc_fourier_closed_form(3, -3) == 1.5);
    CHECK(sinc_fourier_closed_form(3, 3.1) == 0.0);
}

TEST_CASE("contrast reports")
{
    const ContrastReport d = contrast_report(parse("dirac()"));
    CHECK(d.kind == "dirac");
    CHECK(d.algebraic.empty());
    for (double m : d.dft.magnitudes) CHECK(m == doctest::Approx(1.0));

    const ContrastReport s = contrast_report(parse("sinc(3)"));
    CHECK(s.kind == "sinc");
    CHECK(s.algebraic.frequencies == std::vector<double>{-3.0, 3.0});
    REQUIRE(s.sweep.size() == 4);
    for (const auto& row : s.sweep) {
        CHECK(row.algebraic.frequencies == std::vector<double>{-row.omega, row.omega});
        CHECK(row.rect_high == row.omega);
        CHECK(row.rect_height == row.omega);
    }

    const ContrastReport t = contrast_report(parse("sin(3*t)"));
    CHECK(t.kind == "sin");
    CHECK(t.algebraic.frequencies == std::vector<double>{-3.0, 3.0});
    REQUIRE(t.dominant.size() == 2);
    CHECK(std::abs(std::abs(t.dominant[1]) - 3.0) < 0.1);

    CHECK_THROWS_AS(contrast_report(parse("delay(1)")), UnsupportedError);
    CHECK_THROWS_AS(contrast_report(parse("t^2")), UnsupportedError);
}

TEST_CASE("contrast rendering")
{
    const ContrastReport s = contrast_report(parse("sinc(2)"));
    const nlohmann::json j = to_json(s);
    for (const char* key : {"expr", "kind", "algebraic", "fourier", "sweep"}) CHECK(j.contains(key));
    CHECK(j["kind"] == "sinc");
    CHECK(j["sweep"].size() == 4);
    CHECK_FALSE(to_text(s).empty());

    const std::string dump = to_dump(s);
    std::size_t lines = 0;
    for (char c : dump) lines += c == '\n';
    CHECK(lines == 401);

    const ContrastReport d = contrast_report(parse("dirac()"));
    CHECK(to_json(d).contains("dft"));
}
