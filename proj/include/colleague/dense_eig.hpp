#pragma once

#include <vector>

#include "colleague/generators.hpp"

namespace colleague {

struct OracleOptions {
    // Diagonal similarity scaling before reduction.  Off by default: the
    // unbalanced path is the interesting comparison point, since scaling is
    // exactly what a normwise-stable dense solver needs to cope with lopsided
    // entries.
    bool balance = false;
    // Relative subdiagonal deflation threshold; <= 0 picks machine epsilon.
    double tolerance = 0.0;
    // Shifted QR sweeps allowed per eigenvalue.
    int max_iters = 40;
};

// Eigenvalues of a general complex square matrix: optional balancing,
// Householder reduction to upper Hessenberg, then explicit single-shift QR
// with deflation.  Deliberately plain O(n^3) reference code; throws
// convergence_error if a window refuses to deflate within the budget.
std::vector<Complex> dense_eig(const DenseMatrix& m, const OracleOptions& opts = {});

// Diagonal similarity with powers of two equalizing row/column sums.
// Eigenvalues are preserved exactly (the scalings are exact in binary).
void balance_inplace(DenseMatrix& m);

// Roots of the characteristic polynomial for n <= 4: coefficients from sums
// of principal minors, roots by the closed-form quadratic/cubic/quartic
// formulas.  Entirely independent of the QR path, which is the point.
std::vector<Complex> char_poly_roots_small(const DenseMatrix& m);

}  // namespace colleague
