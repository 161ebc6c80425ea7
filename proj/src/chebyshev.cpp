#include "colleague/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace colleague {

template <typename T>
static T clenshaw(const std::vector<double>& a, T x) {
    if (a.empty()) return T{};
    T b1{}, b2{};
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
        T b = a[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    return a[0] + x * b1 - b2;
}

double evaluate(const ChebSeries& s, double x) { return clenshaw(s.coeffs, x); }
Complex evaluate(const ChebSeries& s, Complex x) { return clenshaw(s.coeffs, x); }

ChebSeries derivative(const ChebSeries& s) {
    const int n = s.degree();
    if (n <= 0) return ChebSeries({0.0});
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c[n - 1] = 2.0 * n * s.coeffs[n];
    for (int j = n - 1; j >= 1; --j) {
        double above = (j + 1 < n) ? c[j + 1] : 0.0;
        c[j - 1] = above + 2.0 * j * s.coeffs[j];
    }
    c[0] *= 0.5;
    return ChebSeries(std::move(c));
}

std::vector<double> chebyshev_points(int n) {
    if (n < 0) throw std::invalid_argument("grid order must be nonnegative");
    std::vector<double> x(static_cast<std::size_t>(n) + 1);
    if (n == 0) {
        x[0] = 1.0;
        return x;
    }
    for (int j = 0; j <= n; ++j) x[j] = std::cos(std::numbers::pi * j / n);
    return x;
}

// cos(k j pi / n) with the product folded to [0, n] first, so the argument
// never exceeds pi.
static double cos_kj(long k, long j, long n) {
    long r = (k * j) % (2 * n);
    if (r > n) r = 2 * n - r;
    return std::cos(std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

ChebSeries interpolate(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("interpolation needs at least one sample");
    const long n = static_cast<long>(samples.size()) - 1;
    if (n == 0) return ChebSeries({samples[0]});
    std::vector<double> a(samples.size());
    for (long k = 0; k <= n; ++k) {
        // Trapezoid-weighted cosine sum: endpoint samples count half.
        double acc = 0.5 * (samples[0] + cos_kj(k, n, n) * samples[n]);
        for (long j = 1; j < n; ++j) acc += cos_kj(k, j, n) * samples[j];
        const double w = (k == 0 || k == n) ? 1.0 : 2.0;
        a[k] = w * acc / static_cast<double>(n);
    }
    return ChebSeries(std::move(a));
}

ChebSeries trim_trailing_zeros(const ChebSeries& s) {
    std::vector<double> c = s.coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return ChebSeries(std::move(c));
}

MonicCoeffs monic_normalize(const ChebSeries& s) {
    if (s.coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
    const double an = s.coeffs.back();
    if (an == 0.0)
        throw std::invalid_argument(
            "leading coefficient is exactly zero; trim trailing zeros before normalizing");
    std::vector<double> c(s.coeffs.begin(), s.coeffs.end() - 1);
    for (double& v : c) v /= an;
    return {std::move(c), an};
}

HessGenerators colleague_generators(std::span<const double> c) {
    const std::size_t n = c.size();
    if (n == 0) throw std::invalid_argument("monic coefficient vector is empty");
    for (double v : c)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite coefficient");

    std::vector<Complex> d(n), beta(n - 1), p(n), q(n);
    p[n - 1] = 1.0;
    if (n == 1) {
        // Degree one: the lone root of T_1 + c_0 is -c_0.  The sqrt(2)
        // symmetrization below only concerns the T_1 <-> T_0 coupling, which
        // a 1x1 matrix does not have.
        q[0] = -c[0];
        return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    beta[0] = inv_sqrt2;
    for (std::size_t i = 1; i + 1 < n; ++i) beta[i] = 0.5;
    q[0] = -c[0] * inv_sqrt2;
    for (std::size_t j = 1; j < n; ++j) q[j] = -c[j] * 0.5;
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

}  // namespace colleague
