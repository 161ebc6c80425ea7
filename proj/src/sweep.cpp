#include "colleague/sweep.hpp"

#include "colleague/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace colleague {

void SweepScratch::resize(std::size_t n) {
    gamma.resize(n > 0 ? n - 1 : 0);
    qtilde.resize(n);
    rotations.resize(n > 0 ? n - 1 : 0);
}

static bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] static void nonfinite_at(const char* pass, std::size_t k) {
    // k is the 1-based plane index; steps run k = n .. 2.
    throw convergence_error(std::string(pass) + " produced a non-finite value at step k=" +
                             std::to_string(k));
}

static void check_shapes(std::size_t n, std::size_t beta, std::size_t p, std::size_t q) {
    if (n < 2) throw std::invalid_argument("sweep requires n >= 2");
    if (beta + 1 != n || p != n || q != n)
        throw std::invalid_argument("sweep given inconsistently sized generator spans");
}

void eliminate_superdiagonal_inplace(std::span<Complex> d, std::span<Complex> beta,
                                     std::span<Complex> p, std::span<const Complex> q,
                                     std::span<Complex> gamma, std::span<Complex> qtilde,
                                     std::span<PlaneRotation> rot, Correction corr) {
    const std::size_t n = d.size();
    check_shapes(n, beta.size(), p.size(), q.size());
    if (gamma.size() + 1 != n || qtilde.size() != n || rot.size() + 1 != n)
        throw std::invalid_argument("sweep given inconsistently sized work spans");

    // The subdiagonal of the Hermitian part mirrors the superdiagonal.
    for (std::size_t i = 0; i + 1 < n; ++i) gamma[i] = std::conj(beta[i]);
    std::copy(q.begin(), q.end(), qtilde.begin());

    for (std::size_t k = n - 1; k >= 1; --k) {
        const Complex qk = std::conj(q[k]);
        const PlaneRotation Q =
            eliminating_rotation(beta[k - 1] + p[k - 1] * qk, d[k] + p[k] * qk);
        rot[k - 1] = Q;

        if (k >= 2) {
            // Rotating rows k-1 and k pushes weight into column k-2 two below
            // the diagonal, outside the tracked band.  That entry of the
            // partially triangularized factor equals -qtilde[k] conj(p[k-2]),
            // so it can be folded into the subdiagonal without storing it.
            gamma[k - 2] = apply(Q, gamma[k - 2], -qtilde[k] * std::conj(p[k - 2])).first;
        }
        std::tie(d[k - 1], gamma[k - 1]) = apply(Q, d[k - 1], gamma[k - 1]);

        // Decide the rescue on the values entering this step, before the pair
        // rotations below overwrite them.  When it fires, |q[k]| > 0 is
        // guaranteed (otherwise the left side would be zero), so the division
        // is safe.
        bool rescue = false;
        if (corr == Correction::on) {
            const double rank1 = std::norm(p[k - 1] * qk) + std::norm(p[k] * qk);
            const double band = std::norm(beta[k - 1]) + std::norm(d[k]);
            rescue = rank1 > band;
        }
        std::tie(beta[k - 1], d[k]) = apply(Q, beta[k - 1], d[k]);
        std::tie(p[k - 1], p[k]) = apply(Q, p[k - 1], p[k]);
        if (rescue) {
            // The rotated p[k-1] was produced by cancellation against much
            // larger intermediates; the eliminated superdiagonal pins down
            // what it must be instead: beta[k-1] + p[k-1] conj(q[k]) = 0.
            p[k - 1] = -beta[k - 1] / qk;
        }
        std::tie(qtilde[k - 1], qtilde[k]) = apply(Q, qtilde[k - 1], qtilde[k]);

        const Complex probe = d[k - 1] + d[k] + beta[k - 1] + gamma[k - 1] + p[k - 1] + p[k] +
                              qtilde[k - 1] + qtilde[k] + (k >= 2 ? gamma[k - 2] : Complex{});
        if (!finite(probe)) nonfinite_at("elimination", k + 1);
    }
}

void rotate_back_inplace(std::span<Complex> d, std::span<const Complex> gamma,
                         std::span<Complex> beta, std::span<const Complex> p,
                         std::span<Complex> q, std::span<const PlaneRotation> rot) {
    const std::size_t n = d.size();
    check_shapes(n, beta.size(), p.size(), q.size());
    if (gamma.size() + 1 != n || rot.size() + 1 != n)
        throw std::invalid_argument("sweep given inconsistently sized work spans");

    for (std::size_t k = n - 1; k >= 1; --k) {
        const PlaneRotation& Q = rot[k - 1];
        // Row k-1 of the product: its diagonal entry pairs with the inferred
        // superdiagonal entry -p[k-1] conj(q[k]) of the triangular factor.
        std::tie(d[k - 1], beta[k - 1]) =
            apply_conjugate(Q, d[k - 1], -p[k - 1] * std::conj(q[k]));
        // Row k keeps only its diagonal; the other output lands below the
        // subdiagonal and is determined by symmetry.
        d[k] = apply_conjugate(Q, gamma[k - 1], d[k]).second;
        std::tie(q[k - 1], q[k]) = apply(Q, q[k - 1], q[k]);

        const Complex probe = d[k - 1] + d[k] + beta[k - 1] + q[k - 1] + q[k];
        if (!finite(probe)) nonfinite_at("rotate-back", k + 1);
    }
}

void qr_sweep_inplace(std::span<Complex> d, std::span<Complex> beta, std::span<Complex> p,
                      std::span<Complex> q, SweepScratch& scratch, Correction corr) {
    const std::size_t n = d.size();
    check_shapes(n, beta.size(), p.size(), q.size());
    scratch.resize(n);
    eliminate_superdiagonal_inplace(d, beta, p, q, std::span<Complex>(scratch.gamma),
                                    std::span<Complex>(scratch.qtilde),
                                    std::span<PlaneRotation>(scratch.rotations), corr);
    rotate_back_inplace(d, std::span<const Complex>(scratch.gamma), beta, p, q,
                        std::span<const PlaneRotation>(scratch.rotations));
}

std::pair<TriGenerators, SweepWorkspace> eliminate_superdiagonal(const HessGenerators& g,
                                                                 Correction corr) {
    std::vector<Complex> d = g.d, beta = g.beta, p = g.p;
    std::vector<Complex> gamma(g.n > 0 ? g.n - 1 : 0);
    SweepWorkspace w;
    w.rotations.resize(g.n > 0 ? g.n - 1 : 0);
    w.qtilde.resize(g.n);
    eliminate_superdiagonal_inplace(d, beta, p, g.q, gamma, w.qtilde, w.rotations, corr);
    return {TriGenerators(std::move(d), std::move(gamma), std::move(p), g.q), std::move(w)};
}

HessGenerators rotate_back(const TriGenerators& t, const SweepWorkspace& w) {
    if (w.rotations.size() + 1 != t.n)
        throw std::invalid_argument("workspace does not match generator size");
    std::vector<Complex> d = t.d, q = t.q, beta(t.n > 0 ? t.n - 1 : 0);
    rotate_back_inplace(d, t.gamma, beta, t.p, q, w.rotations);
    return HessGenerators(std::move(d), std::move(beta), t.p, std::move(q));
}

HessGenerators qr_sweep(const HessGenerators& g, Correction corr) {
    std::vector<Complex> d = g.d, beta = g.beta, p = g.p, q = g.q;
    SweepScratch scratch;
    qr_sweep_inplace(d, beta, p, q, scratch, corr);
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

}  // namespace colleague
