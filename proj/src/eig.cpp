#include "colleague/eig.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <sstream>

#include "colleague/errors.hpp"
#include "colleague/sweep.hpp"

namespace colleague {

constexpr double kUnitRoundoff = 0x1p-53;

double default_epsilon(const HessGenerators& g) {
    return 4.0 * static_cast<double>(g.n) * kUnitRoundoff * hermitian_frobenius(g);
}

static double resolve_epsilon(const HessGenerators& g, const EigOptions& opts) {
    return opts.epsilon > 0.0 ? opts.epsilon : default_epsilon(g);
}

std::pair<Complex, Complex> eigenvalues_2x2(Complex a11, Complex a12, Complex a21, Complex a22) {
    const Complex m = 0.5 * (a11 + a22);
    const Complex det = a11 * a22 - a12 * a21;
    const Complex disc = std::sqrt(m * m - det);
    // Add the discriminant on the side where it reinforces m instead of
    // cancelling it.
    const Complex big = (std::real(std::conj(m) * disc) >= 0.0) ? m + disc : m - disc;
    if (big == Complex{}) return {Complex{}, Complex{}};
    return {big, det / big};
}

[[noreturn]] static void budget_exceeded(std::size_t index_1based, int budget, double residual) {
    std::ostringstream os;
    os << "eigenvalue " << index_1based << " did not deflate after " << budget
       << " sweeps (off-diagonal residual " << residual << ")";
    throw convergence_error(os.str());
}

EigResult eig_unshifted(const HessGenerators& g, const EigOptions& opts) {
    const std::size_t n = g.n;
    std::vector<Complex> d = g.d, beta = g.beta, p = g.p, q = g.q;
    EigResult res;
    res.iterations.assign(n, 0);
    const double eps = resolve_epsilon(g, opts);
    SweepScratch scratch;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto dd = std::span<Complex>(d).subspan(i);
        auto bb = std::span<Complex>(beta).subspan(i);
        auto pp = std::span<Complex>(p).subspan(i);
        auto qq = std::span<Complex>(q).subspan(i);
        int iters = 0;
        while (std::abs(bb[0] + pp[0] * std::conj(qq[1])) >= eps) {
            if (iters >= opts.max_iters_per_eigenvalue)
                budget_exceeded(i + 1, iters, std::abs(bb[0] + pp[0] * std::conj(qq[1])));
            qr_sweep_inplace(dd, bb, pp, qq, scratch);
            ++iters;
            ++res.total_sweeps;
        }
        res.iterations[i] = iters;
    }

    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = d[i] + p[i] * std::conj(q[i]);
    return res;
}

EigResult eig_shifted(const HessGenerators& g, const EigOptions& opts) {
    const std::size_t n = g.n;
    std::vector<Complex> d = g.d, beta = g.beta, p = g.p, q = g.q;
    EigResult res;
    res.iterations.assign(n, 0);
    const double eps = resolve_epsilon(g, opts);
    SweepScratch scratch;

    if (n >= 2) {
        for (int w = 0; w < opts.warmup_unshifted_sweeps; ++w) {
            qr_sweep_inplace(d, beta, p, q, scratch);
            ++res.total_sweeps;
        }
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto dd = std::span<Complex>(d).subspan(i);
        auto bb = std::span<Complex>(beta).subspan(i);
        auto pp = std::span<Complex>(p).subspan(i);
        auto qq = std::span<Complex>(q).subspan(i);
        Complex mu_sum{};
        int iters = 0;
        while (std::abs(bb[0] + pp[0] * std::conj(qq[1])) >= eps) {
            if (iters >= opts.max_iters_per_eigenvalue)
                budget_exceeded(i + 1, iters, std::abs(bb[0] + pp[0] * std::conj(qq[1])));
            const Complex a11 = dd[0] + pp[0] * std::conj(qq[0]);
            const Complex a12 = bb[0] + pp[0] * std::conj(qq[1]);
            const Complex a21 = std::conj(bb[0]) + pp[1] * std::conj(qq[0]);
            const Complex a22 = dd[1] + pp[1] * std::conj(qq[1]);
            const auto [mu1, mu2] = eigenvalues_2x2(a11, a12, a21, a22);
            // Wilkinson choice: the block eigenvalue nearest the entry being
            // deflated; ties go to the first (larger) root.
            const Complex mu = (std::abs(mu1 - a11) <= std::abs(mu2 - a11)) ? mu1 : mu2;
            mu_sum += mu;
            res.max_total_shift = std::max(res.max_total_shift, std::abs(mu_sum));
            for (auto& x : dd) x -= mu;
            qr_sweep_inplace(dd, bb, pp, qq, scratch);
            ++iters;
            ++res.total_sweeps;
        }
        // Undo the accumulated shift in one shot rather than per sweep; the
        // deflated entries above the window are never shifted, so they need
        // no repair.
        for (auto& x : dd) x += mu_sum;
        res.iterations[i] = iters;
    }

    res.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.eigenvalues[i] = d[i] + p[i] * std::conj(q[i]);
    return res;
}

EigResult eig(const HessGenerators& g, const EigOptions& opts) {
    return opts.mode == EigOptions::Mode::shifted ? eig_shifted(g, opts) : eig_unshifted(g, opts);
}

}  // namespace colleague
