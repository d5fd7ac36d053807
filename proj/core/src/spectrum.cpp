#include "algspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace algspec {

const char* to_string(SourceKind k)
{
    switch (k) {
    case SourceKind::pole: return "pole";
    case SourceKind::logarithmic: return "logarithmic";
    case SourceKind::none: return "none";
    }
    return "none";
}

const char* to_string(FuchsKind k)
{
    switch (k) {
    case FuchsKind::regular: return "regular";
    case FuchsKind::irregular: return "irregular";
    case FuchsKind::not_applicable: return "n/a";
    }
    return "n/a";
}

Spectrum make_spectrum(std::vector<SingularityRecord> sources, bool infinite_singularity)
{
    Spectrum s;
    std::sort(sources.begin(), sources.end(), [](const auto& a, const auto& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    std::vector<double> freqs;
    for (const auto& src : sources) {
        double scale = std::max(1.0, std::abs(src.location));
        double f = src.location.imag();
        if (std::abs(f) <= kFrequencyTolerance * scale) continue;
        freqs.push_back(f);
    }
    std::sort(freqs.begin(), freqs.end());
    for (double f : freqs) {
        if (!s.frequencies.empty()) {
            double prev = s.frequencies.back();
            if (std::abs(f - prev) <= kFrequencyTolerance * std::max(1.0, std::abs(f))) continue;
        }
        s.frequencies.push_back(f);
    }
    s.sources = std::move(sources);
    s.infinite_singularity = infinite_singularity;
    return s;
}

Spectrum spectrum_of_rational(const RatFunc& r, const RootOptions& opts)
{
    std::vector<SingularityRecord> records;
    for (const auto& p : poles(r, opts)) {
        SingularityRecord rec;
        rec.location = p.approx();
        rec.kind = SourceKind::pole;
        rec.order = p.multiplicity;
        records.push_back(rec);
    }
    return make_spectrum(std::move(records), false);
}

double round_significant(double x, int digits)
{
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::json json_number(double x, int digits)
{
    if (!std::isfinite(x)) return nullptr;
    double r = round_significant(x, digits);
    if (std::abs(r) < 9.0e15 && r == std::trunc(r)) return static_cast<long long>(r);
    return r;
}

nlohmann::json to_json(const Spectrum& s, int digits, int frequency_digits)
{
    nlohmann::json freqs = nlohmann::json::array();
    for (double f : s.frequencies) freqs.push_back(json_number(f, frequency_digits));
    nlohmann::json sources = nlohmann::json::array();
    for (const auto& src : s.sources) {
        sources.push_back({
            {"re", json_number(src.location.real(), digits)},
            {"im", json_number(src.location.imag(), digits)},
            {"kind", to_string(src.kind)},
            {"order", src.order},
            {"fuchs", to_string(src.fuchs)},
            {"status", src.confirmed ? "confirmed" : "candidate"},
        });
    }
    nlohmann::json j;
    j["frequencies"] = std::move(freqs);
    j["sources"] = std::move(sources);
    j["infinite_singularity"] = s.infinite_singularity;
    return j;
}

} // namespace algspec
