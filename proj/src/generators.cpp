#include "colleague/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace colleague {

void require_finite(std::span<const Complex> v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
            throw std::invalid_argument(std::string(name) + "[" + std::to_string(i) +
                                        "] is not finite");
    }
}

static void check_sizes(std::size_t n, std::size_t off, std::size_t p, std::size_t q,
                        const char* off_name) {
    if (n == 0) throw std::invalid_argument("empty generator set");
    if (off + 1 != n)
        throw std::invalid_argument(std::string(off_name) + " must have n-1 entries");
    if (p != n || q != n) throw std::invalid_argument("p and q must have n entries");
}

HessGenerators::HessGenerators(std::vector<Complex> d_, std::vector<Complex> beta_,
                               std::vector<Complex> p_, std::vector<Complex> q_)
    : n(d_.size()), d(std::move(d_)), beta(std::move(beta_)), p(std::move(p_)), q(std::move(q_)) {
    check_sizes(n, beta.size(), p.size(), q.size(), "beta");
    require_finite(d, "d");
    require_finite(beta, "beta");
    require_finite(p, "p");
    require_finite(q, "q");
}

TriGenerators::TriGenerators(std::vector<Complex> d_, std::vector<Complex> gamma_,
                             std::vector<Complex> p_, std::vector<Complex> q_)
    : n(d_.size()), d(std::move(d_)), gamma(std::move(gamma_)), p(std::move(p_)), q(std::move(q_)) {
    check_sizes(n, gamma.size(), p.size(), q.size(), "gamma");
    require_finite(d, "d");
    require_finite(gamma, "gamma");
    require_finite(p, "p");
    require_finite(q, "q");
}

DenseMatrix reconstruct_hermitian(const HessGenerators& g) {
    DenseMatrix m(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = i + 2; j < g.n; ++j) {
            m(i, j) = -g.p[i] * std::conj(g.q[j]);
            m(j, i) = std::conj(m(i, j));
        }
        m(i, i) = g.d[i];
        if (i + 1 < g.n) {
            m(i, i + 1) = g.beta[i];
            m(i + 1, i) = std::conj(g.beta[i]);
        }
    }
    return m;
}

DenseMatrix reconstruct_triangular(const TriGenerators& t) {
    DenseMatrix m(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t j = i + 1; j < t.n; ++j) m(i, j) = -t.p[i] * std::conj(t.q[j]);
        m(i, i) = t.d[i];
        if (i + 1 < t.n) m(i + 1, i) = t.gamma[i];
    }
    return m;
}

DenseMatrix reconstruct_sum(const HessGenerators& g) {
    DenseMatrix m = reconstruct_hermitian(g);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) m(i, j) += g.p[i] * std::conj(g.q[j]);
    return m;
}

static double sum_squares_from(const DenseMatrix& m, std::size_t drop_below_diagonal) {
    // drop_below_diagonal = 1: start rows at j = i-1; 0: start at j = i.
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) {
        std::size_t j0 = (i >= drop_below_diagonal) ? i - drop_below_diagonal : 0;
        for (std::size_t j = j0; j < m.n; ++j) s += std::norm(m(i, j));
    }
    return std::sqrt(s);
}

double norm_hess(const DenseMatrix& m) { return sum_squares_from(m, 1); }
double norm_tri(const DenseMatrix& m) { return sum_squares_from(m, 0); }

double norm_frobenius(const DenseMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.a) s += std::norm(z);
    return std::sqrt(s);
}

double hermitian_frobenius(const HessGenerators& g) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) s += std::norm(g.d[i]);
    for (std::size_t i = 0; i + 1 < g.n; ++i) s += 2.0 * std::norm(g.beta[i]);
    // Far entries come in conjugate pairs -p_i conj(q_j) / -q_j ... so each
    // |p_i|^2 |q_j|^2 with j > i+1 counts twice.  Suffix sums keep this O(n).
    if (g.n > 2) {
        double qtail = 0.0;
        for (std::size_t i = g.n - 2; i-- > 0;) {
            qtail += std::norm(g.q[i + 2]);
            s += 2.0 * std::norm(g.p[i]) * qtail;
        }
    }
    return std::sqrt(s);
}

}  // namespace colleague
