#pragma once

#include <cmath>
#include <utility>

#include "colleague/generators.hpp"

namespace colleague {

// Unitary plane rotation with determinant 1,
//
//   [ c       -s      ]
//   [ conj(s)  conj(c)]      |c|^2 + |s|^2 = 1.
//
// Rotations are constructed once and stored; they are never recomputed from
// the data they transformed.
struct PlaneRotation {
    Complex c{1.0, 0.0};
    Complex s{0.0, 0.0};
};

// Rotation mapping (x1, x2) to (0, h) with h = sqrt(|x1|^2 + |x2|^2):
// c = x2/h, s = x1/h.  The hypot is computed with the usual scaling by the
// larger modulus, so entries near the overflow threshold are safe (the
// vectors fed in here can carry norms around 1e15).  Zero input gives the
// identity.
inline PlaneRotation eliminating_rotation(Complex x1, Complex x2) {
    double m1 = std::abs(x1), m2 = std::abs(x2);
    double m = std::max(m1, m2);
    if (m == 0.0) return {};
    double h = m * std::sqrt((m1 / m) * (m1 / m) + (m2 / m) * (m2 / m));
    return {x2 / h, x1 / h};
}

// (x1, x2) -> (c x1 - s x2, conj(s) x1 + conj(c) x2)
inline std::pair<Complex, Complex> apply(const PlaneRotation& r, Complex x1, Complex x2) {
    return {r.c * x1 - r.s * x2, std::conj(r.s) * x1 + std::conj(r.c) * x2};
}

// Multiplication by the entrywise conjugate matrix [conj(c) -conj(s); s c].
// For a row pair y this is exactly (y Q^*)^T, which is how the triangular
// factor is carried back to Hessenberg form.
inline std::pair<Complex, Complex> apply_conjugate(const PlaneRotation& r, Complex x1, Complex x2) {
    return {std::conj(r.c) * x1 - std::conj(r.s) * x2, r.s * x1 + r.c * x2};
}

}  // namespace colleague
