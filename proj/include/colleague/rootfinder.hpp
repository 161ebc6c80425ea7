#pragma once

#include <span>
#include <utility>
#include <vector>

#include "colleague/chebyshev.hpp"
#include "colleague/dense_eig.hpp"
#include "colleague/eig.hpp"

namespace colleague {

struct RootReport {
    std::vector<Complex> all_eigenvalues;  // solver output order
    std::vector<double> real_roots;        // ascending
    int n_roots = 0;
    std::vector<double> eta;    // aligned with real_roots
    std::vector<double> kappa;  // aligned with real_roots
    double max_eta = 0.0;
    double max_abs_eigenvalue = 0.0;
    double coeff_norm = 0.0;  // euclidean norm of the monic coefficients
};

// Normalized residual of x as a root of s, measured against a backward error
// model that charges the perturbation to the coefficients:
//   eta = |s(x)| / max(kappa, ||a||_2),   kappa = |x| |s'(x)|.
// Returns (eta, kappa).  ||a|| is the norm of the full coefficient vector as
// given, not the monic rescaling.
std::pair<double, double> eta(const ChebSeries& s, double xhat);

// Keep eigenvalues inside the window -1-delta < Re < 1+delta,
// -delta < Im < delta, sort by (Re, Im), project to the real part.
// Duplicates are kept; the result does not depend on the input order.
std::vector<double> extract_real_roots(std::span<const Complex> eigs, double delta);

// Full pipeline: trim exact trailing zeros, normalize to monic, build the
// colleague generators, run the structured QR, filter the real roots and
// attach the residual diagnostics.  No polishing happens afterwards; the
// reported eta is what the eigensolver alone achieves.
RootReport find_roots(const ChebSeries& s, double delta, const EigOptions& opts = {});

// Same pipeline with the eigenvalues taken from the dense solver on the
// explicitly reconstructed colleague matrix instead.
RootReport find_roots_dense(const ChebSeries& s, double delta, const OracleOptions& opts = {});

}  // namespace colleague
