#pragma once

#include <span>
#include <vector>

#include "colleague/generators.hpp"

namespace colleague {

// Finite Chebyshev expansion sum_j a_j T_j(x) with real coefficients, a_0
// first.  degree() is the index of the last stored coefficient, which is not
// trimmed implicitly anywhere.
struct ChebSeries {
    std::vector<double> coeffs;

    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> c) : coeffs(std::move(c)) {}
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Clenshaw recurrence; the complex overload serves evaluation off the real
// axis.
double evaluate(const ChebSeries& s, double x);
Complex evaluate(const ChebSeries& s, Complex x);

// Coefficients of the derivative expansion (degree drops by one).
ChebSeries derivative(const ChebSeries& s);

// Extrema grid cos(j pi / n), j = 0..n, descending from 1 to -1.
std::vector<double> chebyshev_points(int n);

// Interpolant through samples f(x_j) on chebyshev_points(m-1), m = number of
// samples.  Plain O(n^2) cosine-transform sums; the cos arguments are folded
// into [0, pi] so no accuracy is lost to large-angle reduction.
ChebSeries interpolate(std::span<const double> samples);

// Drop exact trailing zeros (a constant zero series keeps one entry).
ChebSeries trim_trailing_zeros(const ChebSeries& s);

struct MonicCoeffs {
    std::vector<double> c;  // c_j = a_j / a_n, j = 0..n-1
    double scale;           // a_n
};

// Divide through by the leading coefficient.  Throws std::invalid_argument
// when it is exactly zero (trim first); small is fine, that is the point of
// the structured solver.
MonicCoeffs monic_normalize(const ChebSeries& s);

// Colleague matrix of the monic series T_n + sum c_j T_j in generator form:
// zero diagonal, superdiagonal (1/sqrt2, 1/2, ..., 1/2), p = e_n and q
// carrying the scaled coefficients, so A + p q^* is the (symmetrized) basis
// recurrence with the last row bent by the coefficients.  Its eigenvalues
// are exactly the roots.
HessGenerators colleague_generators(std::span<const double> c);

}  // namespace colleague
