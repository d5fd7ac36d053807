#pragma once

#include "algspec/analysis.hpp"
#include "algspec/instfreq.hpp"
#include "algspec/spectrum.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <string>
#include <vector>

namespace algspec {

using cvec = std::vector<std::complex<double>>;

// X_k = sum_n x_n e^(-2 pi i k n / N), O(N^2).
cvec dft_direct(const cvec& x);
// Iterative radix-2 transform; DomainError unless N is a power of two.
cvec dft_radix2(const cvec& x);
// Radix-2 for power-of-two lengths, direct otherwise.
cvec dft_auto(const cvec& x);

struct DftResult {
    // Angular frequencies 2 pi k / (N dt), k in [-N/2, N/2), ascending.
    std::vector<double> bin_frequencies;
    std::vector<double> magnitudes;
    // Same order as the bins.
    cvec coefficients;
};

// DomainError if the sampling step varies by more than 1e-9 relative.
DftResult dft(const SampledSignal& sig);

// Frequencies of the `count` largest-magnitude bins, ascending.
std::vector<double> dominant_bins(const DftResult& r, std::size_t count);

// omega inside (-omega, omega), omega/2 at the jumps, 0 outside.
double sinc_fourier_closed_form(double omega, double xi);

struct SincRow {
    double omega;
    Spectrum algebraic;
    // The transform is omega on (-omega, omega).
    double rect_low;
    double rect_high;
    double rect_height;
};

struct ContrastReport {
    std::string expr;
    // "dirac", "sinc" or "sin".
    std::string kind;
    Spectrum algebraic;
    std::string fourier_summary;

    // dirac: transform of the discrete impulse. sin: transform of the tone.
    DftResult dft;
    double dt = 0.0;
    std::vector<double> dominant;

    // sinc: the input's omega and the sweep {1, 2, 4, 8}.
    double sinc_omega = 0.0;
    std::vector<SincRow> sweep;
};

// Supported: a (scaled) Dirac impulse, sinc, or sin(omega t + phi).
// UnsupportedError otherwise. The algebraic column is analyze(e).spectrum.
ContrastReport contrast_report(const SignalExpr& e);

std::string to_text(const ContrastReport& r);
nlohmann::json to_json(const ContrastReport& r);
// Whitespace-separated "x y" lines: DFT bins and magnitudes, or for sinc
// the closed-form transform of the input on a grid.
std::string to_dump(const ContrastReport& r);

} // namespace algspec
