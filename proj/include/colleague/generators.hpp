#pragma once

#include <complex>
#include <span>
#include <vector>

namespace colleague {

using Complex = std::complex<double>;

// Generator representation of a Hermitian matrix A such that A + p q^* is
// lower Hessenberg.  The strict upper triangle beyond the first superdiagonal
// is forced to equal -p_i conj(q_j), so the whole matrix is determined by the
// diagonal d, the superdiagonal beta and the two vectors p, q.  Storage is
// O(n); nothing dense is kept.
struct HessGenerators {
    std::size_t n = 0;
    std::vector<Complex> d;     // n diagonal entries
    std::vector<Complex> beta;  // n-1 superdiagonal entries
    std::vector<Complex> p;     // rank-one left vector
    std::vector<Complex> q;     // rank-one right vector

    HessGenerators() = default;
    HessGenerators(std::vector<Complex> d_, std::vector<Complex> beta_,
                   std::vector<Complex> p_, std::vector<Complex> q_);
};

// Same idea for a matrix B with B + p q^* lower triangular: B is upper
// Hessenberg in view, with diagonal d and subdiagonal gamma.  Entries above
// the diagonal equal -p_i conj(q_j); entries below the subdiagonal are not
// represented (see is_in_hessenberg_view).
struct TriGenerators {
    std::size_t n = 0;
    std::vector<Complex> d;      // n diagonal entries
    std::vector<Complex> gamma;  // n-1 subdiagonal entries
    std::vector<Complex> p;
    std::vector<Complex> q;

    TriGenerators() = default;
    TriGenerators(std::vector<Complex> d_, std::vector<Complex> gamma_,
                  std::vector<Complex> p_, std::vector<Complex> q_);
};

// Minimal dense square matrix, row major.  Used by the dense oracle and by
// tests; the structured solver never builds one.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;  // n*n entries, row major

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n_) : n(n_), a(n_ * n_) {}

    Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// True for the entries a reconstructed triangular factor actually represents
// (j >= i-1); everything below the subdiagonal is reported as zero.
inline bool is_in_hessenberg_view(std::size_t i, std::size_t j) {
    return j + 1 >= i;
}

// Dense A from generators:
//   a_ij = -p_i conj(q_j)        j > i+1
//   a_ij = beta_i                j = i+1
//   a_ij = d_i                   j = i
//   a_ij = conj(beta_j)          j = i-1
//   a_ij = -q_i conj(p_j)        j < i-1   (conjugate of the far-upper rule)
DenseMatrix reconstruct_hermitian(const HessGenerators& g);

// Dense upper-Hessenberg view of B: -p_i conj(q_j) above the diagonal, d on
// it, gamma below it, zeros outside the view.
DenseMatrix reconstruct_triangular(const TriGenerators& t);

// A + p q^*.  Entries beyond the first superdiagonal cancel exactly (they are
// the same product with opposite signs), so the result is lower Hessenberg
// with true zeros.
DenseMatrix reconstruct_sum(const HessGenerators& g);

// Seminorms used by the error analysis: norm_hess sums |a_ij|^2 over
// j >= i-1, norm_tri over j >= i; norm_frobenius over everything.
double norm_hess(const DenseMatrix& m);
double norm_tri(const DenseMatrix& m);
double norm_frobenius(const DenseMatrix& m);

// ||A||_F of the reconstructed Hermitian part, accumulated entrywise from the
// generator formulas without forming the dense matrix.  O(n) time and space.
double hermitian_frobenius(const HessGenerators& g);

// Throws std::invalid_argument if any component of any entry is NaN or Inf.
void require_finite(std::span<const Complex> v, const char* name);

}  // namespace colleague
