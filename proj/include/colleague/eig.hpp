#pragma once

#include <utility>
#include <vector>

#include "colleague/generators.hpp"

namespace colleague {

struct EigOptions {
    enum class Mode { shifted, unshifted };

    // Deflation tolerance; anything <= 0 means "derive from the matrix" via
    // default_epsilon.
    double epsilon = 0.0;
    int max_iters_per_eigenvalue = 80;
    // Shifted driver only: plain sweeps applied to the whole matrix before
    // shifting starts, so the small eigenvalues drift to the top and the
    // accumulated shifts stay small.  Set to 0 for pure shifted iteration.
    int warmup_unshifted_sweeps = 2;
    Mode mode = Mode::shifted;
};

struct EigResult {
    std::vector<Complex> eigenvalues;  // in deflation order
    std::vector<int> iterations;       // sweeps charged to each deflation
    long total_sweeps = 0;
    // Largest |accumulated shift| seen at any point (shifted driver only).
    double max_total_shift = 0.0;
};

// 4 n u ||A||_F with u = 2^-53; the norm comes from the generator formulas
// directly (see hermitian_frobenius), computed once per solve.
double default_epsilon(const HessGenerators& g);

// Eigenvalues of [a11 a12; a21 a22] by the stable quadratic: the root of
// larger modulus is formed without cancellation, the other as det / larger.
// Returns (larger, other).
std::pair<Complex, Complex> eigenvalues_2x2(Complex a11, Complex a12, Complex a21, Complex a22);

// Explicit structured QR without shifts.  Deflates from the top: sweeps run
// on the trailing generators until |beta_i + p_i conj(q_{i+1})| < epsilon,
// then the window advances.  Eigenvalues are d_i + p_i conj(q_i) at the end.
// Throws convergence_error when a deflation exceeds the sweep budget.
EigResult eig_unshifted(const HessGenerators& g, const EigOptions& opts = {});

// Same loop with a shift: per iteration the eigenvalue of the leading 2x2
// block closest to its corner entry is subtracted from the trailing diagonal
// (shifts touch d only), one sweep runs, and the accumulated shift is added
// back once the eigenvalue deflates.
EigResult eig_shifted(const HessGenerators& g, const EigOptions& opts = {});

// Dispatch on opts.mode.
EigResult eig(const HessGenerators& g, const EigOptions& opts = {});

}  // namespace colleague
