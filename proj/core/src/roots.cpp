#include "algspec/roots.hpp"

#include "algspec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace algspec {

std::vector<SquareFreeFactor> square_free_decomposition(const CPoly& p)
{
    std::vector<SquareFreeFactor> out;
    if (p.degree() <= 0) return out;
    CPoly f = p.monic();
    CPoly fp = f.derivative();
    CPoly a = gcd(f, fp);
    CPoly b = exact_div(f, a);
    CPoly c = exact_div(fp, a);
    CPoly d = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        a = gcd(b, d);
        if (a.degree() > 0) out.push_back({a, k});
        b = exact_div(b, a);
        c = exact_div(d, a);
        ++k;
        d = c - b.derivative();
    }
    return out;
}

namespace {

using cld = std::complex<long double>;

cld eval_ld(const std::vector<cld>& c, cld x)
{
    cld acc = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// p(x) and p'(x) together.
std::pair<cld, cld> eval_with_deriv(const std::vector<cld>& c, cld x)
{
    cld p = 0.0L, dp = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * x + p;
        p = p * x + *it;
    }
    return {p, dp};
}

long double backward_scale(const std::vector<cld>& c, cld x)
{
    long double ax = std::abs(x);
    long double acc = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

std::vector<cld> aberth(const std::vector<cld>& c, int max_iterations)
{
    const std::size_t n = c.size() - 1;
    // Fujiwara bound on root magnitudes.
    long double bound = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        long double term = std::pow(std::abs(c[k] / c[n]), 1.0L / static_cast<long double>(n - k));
        bound = std::max(bound, term);
    }
    bound = 2.0L * bound;
    const cld center = -c[n - 1] / (static_cast<long double>(n) * c[n]);
    const long double radius = std::max(0.5L * bound, 1e-3L);

    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                static_cast<long double>(n) + 0.7L;
        z[k] = center + std::polar(radius, angle);
    }

    const long double eps = std::numeric_limits<long double>::epsilon();
    for (int iter = 0; iter < max_iterations; ++iter) {
        long double max_step = 0.0L;
        for (std::size_t k = 0; k < n; ++k) {
            auto [p, dp] = eval_with_deriv(c, z[k]);
            if (p == 0.0L) continue;
            cld ratio = p / dp;
            cld sum = 0.0L;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            }
            cld w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[k] -= w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0L, std::abs(z[k])));
        }
        if (max_step <= 16.0L * eps) return z;
    }
    return z;
}

// Snaps a root to an exact Gaussian rational when one with a small
// denominator satisfies the polynomial exactly.
std::optional<ExactComplex> snap(const CPoly& f, cld z, long max_den)
{
    const double re = static_cast<double>(z.real());
    const double im = static_cast<double>(z.imag());
    const double scale = std::max(1.0, std::abs(std::complex<double>(re, im)));
    Rational qr = rational_approximation(re, max_den);
    Rational qi = rational_approximation(im, max_den);
    if (std::abs(qr.get_d() - re) > 1e-9 * scale || std::abs(qi.get_d() - im) > 1e-9 * scale)
        return std::nullopt;
    ExactComplex cand(qr, qi);
    if (f.evaluate(cand).is_zero()) return cand;
    return std::nullopt;
}

} // namespace

std::vector<Root> roots_square_free(const CPoly& p, const RootOptions& opts)
{
    std::vector<Root> out;
    const int n = p.degree();
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back({-p.coeff(0) / p.coeff(1), true});
        return out;
    }

    const std::vector<cld> c = p.monic().to_complex_ld();
    std::vector<cld> z = aberth(c, opts.max_iterations);

    // Newton polish in extended precision.
    for (auto& root : z) {
        for (int it = 0; it < 4; ++it) {
            auto [v, dv] = eval_with_deriv(c, root);
            if (v == 0.0L || dv == 0.0L) break;
            cld next = root - v / dv;
            if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
            root = next;
        }
        long double resid = std::abs(eval_ld(c, root));
        if (!(resid <= 1e-12L * backward_scale(c, root)))
            throw NumericalError("root iteration did not converge for degree-" + std::to_string(n) +
                                 " factor " + p.to_string());
    }

    const bool real_coeffs = p.has_real_coeffs();
    if (real_coeffs) {
        // Conjugate-symmetrize: near-real roots become real, the rest pair up.
        std::vector<bool> used(z.size(), false);
        for (std::size_t k = 0; k < z.size(); ++k) {
            long double scale = std::max(1.0L, std::abs(z[k]));
            if (std::abs(z[k].imag()) <= 1e-9L * scale) {
                z[k] = {z[k].real(), 0.0L};
                used[k] = true;
            }
        }
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (used[k] || z[k].imag() < 0.0L) continue;
            std::size_t best = z.size();
            long double best_d = std::numeric_limits<long double>::infinity();
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (used[j] || j == k || z[j].imag() >= 0.0L) continue;
                long double d = std::abs(z[j] - std::conj(z[k]));
                if (d < best_d) { best_d = d; best = j; }
            }
            if (best == z.size()) continue;
            cld avg = 0.5L * (z[k] + std::conj(z[best]));
            z[k] = avg;
            z[best] = std::conj(avg);
            used[k] = used[best] = true;
        }
    }

    for (const auto& root : z) {
        if (auto exact = snap(p, root, opts.snap_max_den)) out.push_back({*exact, true});
        else out.push_back({ExactComplex::from_complex(root), false});
    }
    std::sort(out.begin(), out.end(),
              [](const Root& a, const Root& b) { return compare(a.value, b.value) < 0; });
    return out;
}

std::vector<Pole> zeros(const CPoly& p, const RootOptions& opts)
{
    std::vector<Pole> out;
    for (const auto& sf : square_free_decomposition(p)) {
        for (const auto& r : roots_square_free(sf.factor, opts))
            out.push_back({r.value, sf.multiplicity, r.exact});
    }
    std::sort(out.begin(), out.end(),
              [](const Pole& a, const Pole& b) { return compare(a.location, b.location) < 0; });
    return out;
}

std::vector<Pole> poles(const RatFunc& r, const RootOptions& opts)
{
    return zeros(r.den(), opts);
}

bool same_point(std::complex<double> a, std::complex<double> b, double tol)
{
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

int pole_order_at(const RatFunc& r, std::complex<double> x, double tol)
{
    if (r.is_polynomial()) return 0;
    for (const auto& p : poles(r)) {
        if (same_point(p.approx(), x, tol)) return p.multiplicity;
    }
    return 0;
}

namespace {

template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t n)
{
    std::vector<T> r(n, T(0));
    for (std::size_t i = 0; i < n && i < a.size(); ++i)
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class T>
std::vector<T> series_div(const std::vector<T>& a, const std::vector<T>& b, std::size_t n)
{
    std::vector<T> q(n, T(0));
    for (std::size_t k = 0; k < n; ++k) {
        T acc = k < a.size() ? a[k] : T(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

// Taylor coefficients of poly at x, first n of them.
template <class T>
std::vector<T> taylor_at(std::vector<T> c, const T& x, std::size_t n)
{
    const std::size_t m = c.size();
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t k = m - 1; k > i; --k) c[k - 1] += x * c[k];
    c.resize(std::max(n, m), T(0));
    c.resize(n);
    return c;
}

template <class T>
T from_rational(const Rational& q);

template <>
ExactComplex from_rational<ExactComplex>(const Rational& q) { return ExactComplex(q); }

template <>
cld from_rational<cld>(const Rational& q) { return ExactComplex(q).to_complex_ld(); }

template <class T>
std::vector<T> to_field(const CPoly& p);

template <>
std::vector<ExactComplex> to_field<ExactComplex>(const CPoly& p) { return p.coeffs(); }

template <>
std::vector<cld> to_field<cld>(const CPoly& p) { return p.to_complex_ld(); }

template <class T>
T to_field(const ExactComplex& z);

template <>
ExactComplex to_field<ExactComplex>(const ExactComplex& z) { return z; }

template <>
cld to_field<cld>(const ExactComplex& z) { return z.to_complex_ld(); }

ExactComplex to_exact(const ExactComplex& z) { return z; }
ExactComplex to_exact(const cld& z) { return ExactComplex::from_complex(z); }

// Laurent coefficients of rem/den at each pole, den monic = prod (s - p)^m.
template <class T>
std::vector<PartialFractionTerm> principal_parts(const CPoly& rem, const std::vector<Pole>& ps)
{
    std::vector<PartialFractionTerm> terms;
    const std::vector<T> rem_c = to_field<T>(rem);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::size_t m = static_cast<std::size_t>(ps[i].multiplicity);
        const T p = to_field<T>(ps[i].location);
        std::vector<T> cof{T(1)};
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (j == i) continue;
            const T d = p - to_field<T>(ps[j].location);
            const unsigned mj = static_cast<unsigned>(ps[j].multiplicity);
            std::vector<T> factor(std::min<std::size_t>(m, mj + 1), T(0));
            for (std::size_t k = 0; k < factor.size(); ++k) {
                T dp(1);
                for (unsigned e = 0; e < mj - k; ++e) dp *= d;
                factor[k] = from_rational<T>(binomial(mj, static_cast<unsigned>(k))) * dp;
            }
            cof = series_mul(cof, factor, m);
        }
        std::vector<T> h = series_div(taylor_at(rem_c, p, m), cof, m);
        for (std::size_t k = 0; k < m; ++k) {
            ExactComplex coef = to_exact(h[k]);
            if (coef.is_zero()) continue;
            terms.push_back({ps[i].location, static_cast<int>(m - k), std::move(coef)});
        }
    }
    return terms;
}

} // namespace

PartialFractions partial_fractions(const RatFunc& r, const RootOptions& opts)
{
    PartialFractions pf;
    auto [q, rem] = divmod(r.num(), r.den());
    pf.polynomial = q;
    if (rem.is_zero()) return pf;
    const std::vector<Pole> ps = poles(r, opts);
    pf.exact = std::all_of(ps.begin(), ps.end(), [](const Pole& p) { return p.exact; });
    pf.terms = pf.exact ? principal_parts<ExactComplex>(rem, ps) : principal_parts<cld>(rem, ps);
    std::sort(pf.terms.begin(), pf.terms.end(), [](const auto& a, const auto& b) {
        int c = compare(a.pole, b.pole);
        return c != 0 ? c < 0 : a.order < b.order;
    });
    return pf;
}

RatFunc recombine(const PartialFractions& pf)
{
    // Group per pole: N_p / (s - p)^m with N_p = sum c_k (s - p)^(m - k).
    struct Group { ExactComplex pole; int order; CPoly num; };
    std::vector<Group> groups;
    for (const auto& t : pf.terms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return g.pole == t.pole; });
        if (it == groups.end()) {
            groups.push_back({t.pole, 0, CPoly()});
            it = groups.end() - 1;
        }
        it->order = std::max(it->order, t.order);
    }
    for (auto& g : groups) {
        for (const auto& t : pf.terms) {
            if (t.pole != g.pole) continue;
            g.num += t.coefficient * CPoly::linear(g.pole).pow(static_cast<unsigned>(g.order - t.order));
        }
    }
    CPoly den(1);
    for (const auto& g : groups) den *= CPoly::linear(g.pole).pow(static_cast<unsigned>(g.order));
    CPoly num = pf.polynomial * den;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        CPoly term = groups[i].num;
        for (std::size_t j = 0; j < groups.size(); ++j) {
            if (j != i) term *= CPoly::linear(groups[j].pole).pow(static_cast<unsigned>(groups[j].order));
        }
        num += term;
    }
    return RatFunc(num, den);
}

} // namespace algspec
