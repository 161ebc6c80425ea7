#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "colleague/chebyshev.hpp"
#include "colleague/rng.hpp"
#include "colleague/rootfinder.hpp"

namespace colleague {

// Test polynomials used by the experiment and bench commands.  The product
// form ones are never expanded symbolically; they are evaluated at the
// extrema grid and interpolated, so the coefficient vectors carry exactly
// the rounding behavior the experiments are about.

// prod_{i=1..degree} (x - (2i/(degree+1) - 1)), expanded to order n.
ChebSeries wilkinson_series(int degree, int n);

// (x+1/2)(x+1/3)(x+0.61)(x-0.121) (x-(1-1e-3))^{degree-4}, expanded to
// order n.  Requires degree >= 4.
ChebSeries mult_series(int degree, int n);

// sin(2 + 20(x+0.222)^2), expanded to order n.
ChebSeries sin_series(int n);

// Fixed order-8 coefficient vector whose colleague matrix has an entry of
// size ~1e15 in the trailing corner: (-0.1 x6, 1e-10, 1, 1e-15).
ChebSeries yuji_series();

// a_i ~ N(0,1) for i < n, then a_n = ||a_0..n-1|| / coeff_norm so the monic
// coefficient vector has the requested norm.  Consumes 2n rng draws.
ChebSeries random_series(int n, double coeff_norm, Rng& rng);

enum class Solver { structured, dense, dense_nobalance };

const char* solver_name(Solver s);

// Run one solver on one series; dense means balanced dense QR,
// dense_nobalance skips the balancing pass.
RootReport solve_with(Solver solver, const ChebSeries& series, double delta);

struct ExperimentRow {
    std::string experiment;
    int degree = 0;  // polynomial degree; equals n for the non-polynomial inputs
    int n = 0;       // expansion order (colleague matrix dimension)
    Solver solver = Solver::structured;
    double coeff_norm = 0.0;
    int n_roots = 0;
    double max_abs_eigenvalue = 0.0;
    double max_eta = 0.0;
};

// Named experiment suites, one row per (instance, solver).  delta = 0 picks
// each experiment's own default (1e-5 for rand, 1e-3 otherwise).  Identical
// name/seed/delta give identical rows.
std::vector<ExperimentRow> run_experiment(const std::string& name, std::uint64_t seed,
                                          double delta = 0.0);

std::string experiment_csv(std::span<const ExperimentRow> rows);

struct BenchRow {
    int n = 0;
    double structured_seconds = 0.0;  // NaN when the solver was not run
    double dense_seconds = 0.0;
};

// Wall-clock medians over `reps` measurements per solver on a random series
// with ||c|| = 2.  Fast solves are batched internally so sub-millisecond
// timings are still meaningful; the reported figure is seconds per solve.
std::vector<BenchRow> run_bench(std::span<const int> sizes, int reps, std::uint64_t seed,
                                bool time_structured, bool time_dense);

std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace colleague
