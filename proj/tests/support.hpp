#pragma once

// Dense helpers shared by the test drivers.  Everything here is deliberately
// naive (triple-loop products, explicit embeddings) so it can serve as an
// independent oracle for the O(n) kernels under test.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "colleague/generators.hpp"
#include "colleague/rng.hpp"
#include "colleague/rotations.hpp"

namespace support {

using colleague::Complex;
using colleague::DenseMatrix;
using colleague::HessGenerators;
using colleague::PlaneRotation;
using colleague::Rng;

inline DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < a.n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix c(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) c(i, j) = std::conj(a(j, i));
    return c;
}

// U = Q_2 Q_3 ... Q_n assembled by replaying the rotations in application
// order (plane n-2,n-1 first, plane 0,1 last, acting from the left).
inline DenseMatrix assemble_u(std::span<const PlaneRotation> rot) {
    const std::size_t n = rot.size() + 1;
    DenseMatrix u = identity(n);
    for (std::size_t j = n - 1; j-- > 0;)
        for (std::size_t col = 0; col < n; ++col)
            std::tie(u(j, col), u(j + 1, col)) = apply(rot[j], u(j, col), u(j + 1, col));
    return u;
}

inline DenseMatrix similarity(const DenseMatrix& u, const DenseMatrix& a) {
    return matmul(matmul(u, a), adjoint(u));
}

inline std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> x) {
    std::vector<Complex> y(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline double vec_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (Complex z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline std::vector<Complex> vec_sub(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.n);
    for (std::size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
    return c;
}

// Random Hessenberg generators with a real diagonal, unit-scale band, and
// p, q scaled by pq_scale.
inline HessGenerators random_hess(std::size_t n, Rng& rng, double pq_scale = 1.0) {
    std::vector<Complex> d(n), beta(n - 1), p(n), q(n);
    for (auto& z : d) z = Complex(rng.normal(), 0.0);
    for (auto& z : beta) z = Complex(rng.normal(), rng.normal());
    for (auto& z : p) z = pq_scale * Complex(rng.normal(), rng.normal());
    for (auto& z : q) z = Complex(rng.normal(), rng.normal());
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

namespace detail {

inline void fill_band(std::vector<Complex>& d, std::vector<Complex>& beta, Rng& rng) {
    for (auto& z : d) z = Complex(rng.normal(), 0.0);
    for (auto& z : beta) z = Complex(rng.normal(), rng.normal());
}

inline void fill_scaled(std::span<Complex> v, Rng& rng, double scale) {
    double ss = 0.0;
    for (auto& z : v) {
        z = Complex(rng.normal(), rng.normal());
        ss += std::norm(z);
    }
    const double rescale = scale / std::sqrt(ss);
    for (auto& z : v) z *= rescale;
}

}  // namespace detail

// Colleague-shaped instance: tridiagonal band (so ||A|| stays O(1) no matter
// the scale), p = scale * e_n exactly, q a random vector of norm `scale`.
inline HessGenerators scaled_colleague_like(std::size_t n, Rng& rng, double scale) {
    std::vector<Complex> d(n), beta(n - 1), p(n), q(n);
    detail::fill_band(d, beta, rng);
    p[n - 1] = scale;
    detail::fill_scaled(q, rng, scale);
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

// The far entries of A are -p_i conj(q_j) for j > i+1, which never touch the
// last two entries of p or the first two of q.  Loading all of p's mass on
// its tail therefore keeps ||A|| at O(1) while ||p|| = ||q|| = scale, and the
// very first elimination step must rotate two scale-sized p entries whose
// exact combination is O(1/scale): the catastrophic-cancellation case the
// p-rescue exists for.
inline HessGenerators rescue_tail_instance(std::size_t n, Rng& rng, double scale) {
    std::vector<Complex> d(n), beta(n - 1), p(n), q(n);
    detail::fill_band(d, beta, rng);
    detail::fill_scaled(std::span<Complex>(p).subspan(n - 2), rng, scale);
    detail::fill_scaled(q, rng, scale);
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

// Mirror image: q's mass on its head, p dense.  The cancellation then hits
// the last elimination step (plane 1,2) instead of the first.
inline HessGenerators rescue_head_instance(std::size_t n, Rng& rng, double scale) {
    std::vector<Complex> d(n), beta(n - 1), p(n), q(n);
    detail::fill_band(d, beta, rng);
    detail::fill_scaled(p, rng, scale);
    detail::fill_scaled(std::span<Complex>(q).first(2), rng, scale);
    return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
}

}  // namespace support
