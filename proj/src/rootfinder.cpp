#include "colleague/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace colleague {

static double coeff_norm2(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

std::pair<double, double> eta(const ChebSeries& s, double xhat) {
    const double resid = std::abs(evaluate(s, xhat));
    const double kap = std::abs(xhat) * std::abs(evaluate(derivative(s), xhat));
    return {resid / std::max(kap, coeff_norm2(s.coeffs)), kap};
}

std::vector<double> extract_real_roots(std::span<const Complex> eigs, double delta) {
    std::vector<Complex> inside;
    for (const Complex& z : eigs) {
        if (z.real() > -1.0 - delta && z.real() < 1.0 + delta && z.imag() > -delta &&
            z.imag() < delta)
            inside.push_back(z);
    }
    std::sort(inside.begin(), inside.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<double> roots(inside.size());
    for (std::size_t i = 0; i < inside.size(); ++i) roots[i] = inside[i].real();
    return roots;
}

static RootReport assemble(const ChebSeries& trimmed, const MonicCoeffs& monic,
                           std::vector<Complex> eigenvalues, double delta) {
    RootReport rep;
    rep.coeff_norm = coeff_norm2(monic.c);
    rep.all_eigenvalues = std::move(eigenvalues);
    for (const Complex& z : rep.all_eigenvalues)
        rep.max_abs_eigenvalue = std::max(rep.max_abs_eigenvalue, std::abs(z));
    rep.real_roots = extract_real_roots(rep.all_eigenvalues, delta);
    rep.n_roots = static_cast<int>(rep.real_roots.size());

    const ChebSeries ds = derivative(trimmed);
    const double anorm = coeff_norm2(trimmed.coeffs);
    rep.eta.resize(rep.real_roots.size());
    rep.kappa.resize(rep.real_roots.size());
    for (std::size_t i = 0; i < rep.real_roots.size(); ++i) {
        const double x = rep.real_roots[i];
        const double kap = std::abs(x) * std::abs(evaluate(ds, x));
        rep.kappa[i] = kap;
        rep.eta[i] = std::abs(evaluate(trimmed, x)) / std::max(kap, anorm);
        rep.max_eta = std::max(rep.max_eta, rep.eta[i]);
    }
    return rep;
}

static ChebSeries trimmed_nonconstant(const ChebSeries& s) {
    ChebSeries t = trim_trailing_zeros(s);
    if (t.degree() < 1)
        throw std::invalid_argument("series is constant after trimming; no roots to find");
    return t;
}

RootReport find_roots(const ChebSeries& s, double delta, const EigOptions& opts) {
    const ChebSeries t = trimmed_nonconstant(s);
    const MonicCoeffs m = monic_normalize(t);
    const HessGenerators g = colleague_generators(m.c);
    EigResult res = eig(g, opts);
    return assemble(t, m, std::move(res.eigenvalues), delta);
}

RootReport find_roots_dense(const ChebSeries& s, double delta, const OracleOptions& opts) {
    const ChebSeries t = trimmed_nonconstant(s);
    const MonicCoeffs m = monic_normalize(t);
    const HessGenerators g = colleague_generators(m.c);
    std::vector<Complex> eigs = dense_eig(reconstruct_sum(g), opts);
    return assemble(t, m, std::move(eigs), delta);
}

}  // namespace colleague
