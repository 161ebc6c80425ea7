#include "colleague/dense_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "colleague/errors.hpp"

namespace colleague {

void balance_inplace(DenseMatrix& m) {
    const std::size_t n = m.n;
    const double radix = 2.0, sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double finv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) m(i, j) *= finv;
                for (std::size_t j = 0; j < n; ++j) m(j, i) *= f;
            }
        }
    }
}

static void hessenberg_reduce(DenseMatrix& h) {
    const std::size_t n = h.n;
    std::vector<Complex> v;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            scale = std::max(scale, std::abs(h(i, k).real()) + std::abs(h(i, k).imag()));
        if (scale == 0.0) continue;

        double ssq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) ssq += std::norm(h(i, k) / scale);
        const double colnorm = scale * std::sqrt(ssq);
        const Complex x1 = h(k + 1, k);
        const Complex phase = (x1 == Complex{}) ? Complex{1.0} : x1 / std::abs(x1);
        const Complex alpha = -phase * colnorm;

        v.assign(n - k - 1, Complex{});
        v[0] = x1 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
        double vnorm2 = 0.0;
        for (const Complex& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;
        const double w = 2.0 / vnorm2;

        // Left: rows k+1..n-1 over columns k..n-1.
        for (std::size_t j = k; j < n; ++j) {
            Complex s{};
            for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
            s *= w;
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= s * v[i];
        }
        // Right: all rows over columns k+1..n-1.
        for (std::size_t i = 0; i < n; ++i) {
            Complex s{};
            for (std::size_t j = 0; j < v.size(); ++j) s += h(i, k + 1 + j) * v[j];
            s *= w;
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= s * std::conj(v[j]);
        }
        h(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Complex{};
    }
}

namespace {
// Rotation zeroing the second component: (f, g) -> (r, 0).
struct Givens {
    Complex c{1.0, 0.0}, s{0.0, 0.0};
};

Givens make_givens(Complex f, Complex g) {
    const double mf = std::abs(f), mg = std::abs(g);
    const double m = std::max(mf, mg);
    if (m == 0.0) return {};
    const double h = m * std::sqrt((mf / m) * (mf / m) + (mg / m) * (mg / m));
    return {f / h, g / h};
}
}  // namespace

static std::pair<Complex, Complex> block_eigs(Complex a, Complex b, Complex c, Complex d) {
    const Complex m = 0.5 * (a + d);
    const Complex det = a * d - b * c;
    const Complex disc = std::sqrt(m * m - det);
    const Complex big = (std::real(std::conj(m) * disc) >= 0.0) ? m + disc : m - disc;
    if (big == Complex{}) return {Complex{}, Complex{}};
    return {big, det / big};
}

std::vector<Complex> dense_eig(const DenseMatrix& m, const OracleOptions& opts) {
    const std::size_t n = m.n;
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const Complex& z : m.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("matrix has non-finite entries");

    DenseMatrix h = m;
    if (opts.balance) balance_inplace(h);
    hessenberg_reduce(h);

    const double tol = opts.tolerance > 0.0 ? opts.tolerance
                                            : std::numeric_limits<double>::epsilon();
    double anorm = 0.0;
    for (const Complex& z : h.a) anorm += std::norm(z);
    anorm = std::sqrt(anorm);

    std::vector<Complex> eig(n);
    std::vector<Givens> rots(n);
    std::size_t hi = n - 1;
    int iters = 0;

    while (true) {
        // Deflate every negligible subdiagonal entry at the bottom of the
        // active matrix, then find the irreducible window [lo, hi].
        std::size_t lo = hi;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            double ref = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (ref == 0.0) ref = anorm;
            if (sub <= tol * ref) {
                h(lo, lo - 1) = Complex{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h(hi, hi);
            if (hi == 0) break;
            --hi;
            iters = 0;
            continue;
        }

        if (iters >= opts.max_iters) {
            std::ostringstream os;
            os << "dense QR failed to deflate rows " << lo << ".." << hi << " after " << iters
               << " sweeps (subdiagonal " << std::abs(h(hi, hi - 1)) << ")";
            throw convergence_error(os.str());
        }

        Complex mu;
        if (iters > 0 && iters % 10 == 0) {
            // Exceptional shift to break symmetric stalls.
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            const auto [m1, m2] =
                block_eigs(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            mu = (std::abs(m1 - h(hi, hi)) <= std::abs(m2 - h(hi, hi))) ? m1 : m2;
        }

        for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
        // QR factor via Givens on the subdiagonal, rows only.
        for (std::size_t i = lo; i < hi; ++i) {
            const Givens g = make_givens(h(i, i), h(i + 1, i));
            rots[i] = g;
            for (std::size_t j = i; j <= hi; ++j) {
                const Complex x = h(i, j), y = h(i + 1, j);
                h(i, j) = std::conj(g.c) * x + std::conj(g.s) * y;
                h(i + 1, j) = -g.s * x + g.c * y;
            }
            h(i + 1, i) = Complex{};
        }
        // Multiply back on the right.  Row by row so the memory walk stays
        // contiguous; column rotations on different rows are independent.
        for (std::size_t r = lo; r <= hi; ++r) {
            const std::size_t start = std::max(lo, r > 0 ? r - 1 : 0);
            for (std::size_t i = start; i < hi; ++i) {
                const Givens& g = rots[i];
                const Complex u = h(r, i), w = h(r, i + 1);
                h(r, i) = u * g.c + w * g.s;
                h(r, i + 1) = -u * std::conj(g.s) + w * std::conj(g.c);
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
        ++iters;
    }
    return eig;
}

// ---- closed-form characteristic polynomial route, n <= 4 ----

static Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

static Complex det3(const DenseMatrix& m, std::size_t r0, std::size_t r1, std::size_t r2) {
    return m(r0, r0) * det2(m(r1, r1), m(r1, r2), m(r2, r1), m(r2, r2)) -
           m(r0, r1) * det2(m(r1, r0), m(r1, r2), m(r2, r0), m(r2, r2)) +
           m(r0, r2) * det2(m(r1, r0), m(r1, r1), m(r2, r0), m(r2, r1));
}

static Complex det4(const DenseMatrix& m) {
    Complex d{};
    double sign = 1.0;
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t cols[3], t = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != c) cols[t++] = j;
        const Complex minor =
            m(1, cols[0]) * det2(m(2, cols[1]), m(2, cols[2]), m(3, cols[1]), m(3, cols[2])) -
            m(1, cols[1]) * det2(m(2, cols[0]), m(2, cols[2]), m(3, cols[0]), m(3, cols[2])) +
            m(1, cols[2]) * det2(m(2, cols[0]), m(2, cols[1]), m(3, cols[0]), m(3, cols[1]));
        d += sign * m(0, c) * minor;
        sign = -sign;
    }
    return d;
}

static void roots_quadratic(Complex b, Complex c, std::vector<Complex>& out) {
    // x^2 + b x + c
    const Complex disc = std::sqrt(b * b - 4.0 * c);
    const Complex big = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                                : -0.5 * (b - disc);
    if (big == Complex{}) {
        out.push_back({});
        out.push_back({});
        return;
    }
    out.push_back(big);
    out.push_back(c / big);
}

static void roots_cubic(Complex b, Complex c, Complex d, std::vector<Complex>& out) {
    // x^3 + b x^2 + c x + d, depressed by x = t - b/3.
    const Complex p = c - b * b / 3.0;
    const Complex q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const Complex shift = -b / 3.0;
    const Complex w = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex m = -q / 2.0 + w;
    if (std::abs(-q / 2.0 - w) > std::abs(m)) m = -q / 2.0 - w;
    if (m == Complex{}) {
        // p and q both vanish: triple root.
        for (int i = 0; i < 3; ++i) out.push_back(shift);
        return;
    }
    const Complex u = std::pow(m, 1.0 / 3.0);
    const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
    Complex uk = u;
    for (int i = 0; i < 3; ++i) {
        out.push_back(uk - p / (3.0 * uk) + shift);
        uk *= omega;
    }
}

static void roots_quartic(Complex b, Complex c, Complex d, Complex e, std::vector<Complex>& out) {
    // x^4 + b x^3 + c x^2 + d x + e, depressed by x = y - b/4.
    const Complex b2 = b * b;
    const Complex p = c - 3.0 * b2 / 8.0;
    const Complex q = d - b * c / 2.0 + b2 * b / 8.0;
    const Complex r = e - b * d / 4.0 + b2 * c / 16.0 - 3.0 * b2 * b2 / 256.0;
    const Complex shift = -b / 4.0;

    std::vector<Complex> ys;
    if (q == Complex{}) {
        // Biquadratic.
        std::vector<Complex> z2;
        roots_quadratic(p, r, z2);
        for (const Complex& z : z2) {
            const Complex y = std::sqrt(z);
            ys.push_back(y);
            ys.push_back(-y);
        }
    } else {
        // Resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2); any root with
        // z != p splits the quartic into two quadratics.
        std::vector<Complex> zs;
        roots_cubic(-p, -4.0 * r, 4.0 * p * r - q * q, zs);
        Complex z = zs[0];
        for (const Complex& cand : zs)
            if (std::abs(cand - p) > std::abs(z - p)) z = cand;
        const Complex s = std::sqrt(z - p);
        const Complex t = q / (2.0 * s);
        roots_quadratic(-s, z / 2.0 + t, ys);
        roots_quadratic(s, z / 2.0 - t, ys);
    }
    for (const Complex& y : ys) out.push_back(y + shift);
}

std::vector<Complex> char_poly_roots_small(const DenseMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0 || n > 4)
        throw std::invalid_argument("closed-form route only covers 1 <= n <= 4");

    // char(x) = x^n - e1 x^(n-1) + e2 x^(n-2) - ..., e_k = sum of k x k
    // principal minors.
    Complex e1{}, e2{}, e3{}, e4{};
    for (std::size_t i = 0; i < n; ++i) e1 += m(i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e2 += det2(m(i, i), m(i, j), m(j, i), m(j, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) e3 += det3(m, i, j, k);
    if (n == 4) e4 = det4(m);

    std::vector<Complex> out;
    switch (n) {
        case 1:
            out.push_back(e1);
            break;
        case 2:
            roots_quadratic(-e1, e2, out);
            break;
        case 3:
            roots_cubic(-e1, e2, -e3, out);
            break;
        default:
            roots_quartic(-e1, e2, -e3, e4, out);
            break;
    }
    return out;
}

}  // namespace colleague
