#pragma once

#include "algspec/ratfunc.hpp"
#include "algspec/roots.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <string>
#include <vector>

namespace algspec {

enum class SourceKind { pole, logarithmic, none };

// Fuchs classification of a singular point of an operational equation;
// `not_applicable` for poles of a rational image.
enum class FuchsKind { regular, irregular, not_applicable };

const char* to_string(SourceKind k);
const char* to_string(FuchsKind k);

// One singular point that may contribute a frequency.
struct SingularityRecord {
    std::complex<double> location;
    SourceKind kind = SourceKind::none;
    // Pole order for kind == pole; 0 otherwise.
    int order = 0;
    FuchsKind fuchs = FuchsKind::not_applicable;
    // False when the point is only known to be a singularity of the
    // equation, not necessarily of the signal.
    bool confirmed = true;
};

struct Spectrum {
    // Sorted, distinct, zero excluded.
    std::vector<double> frequencies;
    std::vector<SingularityRecord> sources;
    bool infinite_singularity = false;

    bool empty() const { return frequencies.empty(); }
};

// Relative tolerance for merging frequencies and for deciding a singular
// point is real.
inline constexpr double kFrequencyTolerance = 1e-9;

// Builds the frequency set from the sources: nonzero imaginary parts,
// deduplicated within kFrequencyTolerance, sorted ascending.
Spectrum make_spectrum(std::vector<SingularityRecord> sources, bool infinite_singularity = false);

// Pole-based spectrum of an element of C(s). Real poles (in particular the
// Laurent polynomials) contribute nothing; the polynomial part contributes
// nothing.
Spectrum spectrum_of_rational(const RatFunc& r, const RootOptions& opts = {});

// Rounds to `digits` significant decimal digits; -0 becomes 0.
double round_significant(double x, int digits);

// {frequencies:[...], sources:[{re,im,kind,order,fuchs,status}],
//  infinite_singularity:bool}. Frequencies use `frequency_digits`
// significant digits, everything else `digits`.
nlohmann::json to_json(const Spectrum& s, int digits = 15, int frequency_digits = 15);

// Number in JSON: integral values become integers.
nlohmann::json json_number(double x, int digits);

} // namespace algspec
