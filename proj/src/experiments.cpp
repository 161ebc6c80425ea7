#include "colleague/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "colleague/io.hpp"

namespace colleague {

namespace {

ChebSeries interpolate_function(int n, const auto& f) {
    std::vector<double> x = chebyshev_points(n);
    std::vector<double> samples(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) samples[j] = f(x[j]);
    return interpolate(samples);
}

}  // namespace

ChebSeries wilkinson_series(int degree, int n) {
    if (degree < 1 || n < degree) throw std::invalid_argument("wilkinson_series: need n >= degree >= 1");
    return interpolate_function(n, [degree](double x) {
        double prod = 1.0;
        for (int i = 1; i <= degree; ++i) prod *= x - (2.0 * i / (degree + 1) - 1.0);
        return prod;
    });
}

ChebSeries mult_series(int degree, int n) {
    if (degree < 4 || n < degree) throw std::invalid_argument("mult_series: need n >= degree >= 4");
    return interpolate_function(n, [degree](double x) {
        double prod = (x + 0.5) * (x + 1.0 / 3.0) * (x + 0.61) * (x - 0.121);
        for (int i = 0; i < degree - 4; ++i) prod *= x - (1.0 - 1e-3);
        return prod;
    });
}

ChebSeries sin_series(int n) {
    if (n < 1) throw std::invalid_argument("sin_series: need n >= 1");
    return interpolate_function(n, [](double x) {
        const double t = x + 0.222;
        return std::sin(2.0 + 20.0 * t * t);
    });
}

ChebSeries yuji_series() {
    return ChebSeries{{-0.1, -0.1, -0.1, -0.1, -0.1, -0.1, 1e-10, 1.0, 1e-15}};
}

ChebSeries random_series(int n, double coeff_norm, Rng& rng) {
    if (n < 1 || coeff_norm <= 0.0)
        throw std::invalid_argument("random_series: need n >= 1 and coeff_norm > 0");
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        a[i] = rng.normal();
        ss += a[i] * a[i];
    }
    a[n] = std::sqrt(ss) / coeff_norm;
    return ChebSeries{std::move(a)};
}

const char* solver_name(Solver s) {
    switch (s) {
        case Solver::structured: return "structured";
        case Solver::dense: return "dense";
        case Solver::dense_nobalance: return "dense-nobalance";
    }
    return "?";
}

RootReport solve_with(Solver solver, const ChebSeries& series, double delta) {
    if (solver == Solver::structured) return find_roots(series, delta);
    OracleOptions opts;
    opts.balance = (solver == Solver::dense);
    return find_roots_dense(series, delta, opts);
}

namespace {

constexpr Solver kAllSolvers[] = {Solver::structured, Solver::dense, Solver::dense_nobalance};

ExperimentRow make_row(const std::string& experiment, int degree, int n, Solver solver,
                       const RootReport& rep) {
    ExperimentRow row;
    row.experiment = experiment;
    row.degree = degree;
    row.n = n;
    row.solver = solver;
    row.coeff_norm = rep.coeff_norm;
    row.n_roots = rep.n_roots;
    row.max_abs_eigenvalue = rep.max_abs_eigenvalue;
    row.max_eta = rep.max_eta;
    return row;
}

void run_all_solvers(std::vector<ExperimentRow>& rows, const std::string& experiment, int degree,
                     int n, const ChebSeries& series, double delta) {
    for (Solver s : kAllSolvers)
        rows.push_back(make_row(experiment, degree, n, s, solve_with(s, series, delta)));
}

std::vector<ExperimentRow> run_rand(std::uint64_t seed, double delta) {
    constexpr int n = 30;
    constexpr int instances = 20;
    constexpr double norms[] = {1e0, 1e3, 1e6, 1e9, 1e12, 1e15};
    Rng rng(seed);
    std::vector<ExperimentRow> rows;
    for (double norm : norms)
        for (int k = 0; k < instances; ++k) {
            ChebSeries series = random_series(n, norm, rng);
            run_all_solvers(rows, "rand", n, n, series, delta);
        }
    return rows;
}

std::vector<ExperimentRow> run_wilk(double delta) {
    constexpr std::pair<int, int> cases[] = {{14, 100}, {24, 24}, {24, 25}, {24, 26},
                                             {24, 27},  {24, 28}, {24, 100}, {34, 100},
                                             {44, 100}, {54, 100}};
    std::vector<ExperimentRow> rows;
    for (auto [degree, n] : cases)
        run_all_solvers(rows, "wilk", degree, n, wilkinson_series(degree, n), delta);
    return rows;
}

std::vector<ExperimentRow> run_mult(double delta) {
    constexpr std::pair<int, int> cases[] = {{7, 100}, {8, 8},   {8, 9},   {8, 10},  {8, 11},
                                             {8, 100}, {9, 100}, {10, 100}, {13, 100}};
    std::vector<ExperimentRow> rows;
    for (auto [degree, n] : cases)
        run_all_solvers(rows, "mult", degree, n, mult_series(degree, n), delta);
    return rows;
}

std::vector<ExperimentRow> run_sin(double delta) {
    std::vector<ExperimentRow> rows;
    for (int n : {80, 100}) run_all_solvers(rows, "sin", n, n, sin_series(n), delta);
    return rows;
}

std::vector<ExperimentRow> run_yuji(double delta) {
    std::vector<ExperimentRow> rows;
    run_all_solvers(rows, "yuji", 8, 8, yuji_series(), delta);
    return rows;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const std::string& name, std::uint64_t seed,
                                          double delta) {
    if (name == "rand") return run_rand(seed, delta > 0.0 ? delta : 1e-5);
    const double d = delta > 0.0 ? delta : 1e-3;
    if (name == "wilk") return run_wilk(d);
    if (name == "mult") return run_mult(d);
    if (name == "sin") return run_sin(d);
    if (name == "yuji") return run_yuji(d);
    throw std::invalid_argument("unknown experiment \"" + name +
                                "\" (expected rand, wilk, mult, sin, or yuji)");
}

std::string experiment_csv(std::span<const ExperimentRow> rows) {
    std::string out = "experiment,degree,n,solver,coeff_norm,n_roots,max_abs_eigenvalue,max_eta\n";
    for (const ExperimentRow& r : rows) {
        out += r.experiment;
        out += ',' + std::to_string(r.degree);
        out += ',' + std::to_string(r.n);
        out += ',';
        out += solver_name(r.solver);
        out += ',' + format_double(r.coeff_norm);
        out += ',' + std::to_string(r.n_roots);
        out += ',' + format_double(r.max_abs_eigenvalue);
        out += ',' + format_double(r.max_eta);
        out += '\n';
    }
    return out;
}

namespace {

// Seconds per solve.  Batches repeats until one measurement spans at least a
// few milliseconds, so microsecond solves do not drown in clock noise.
double time_one(const auto& solve) {
    using clock = std::chrono::steady_clock;
    constexpr double kMinSpan = 5e-3;
    int batch = 1;
    for (;;) {
        auto t0 = clock::now();
        for (int i = 0; i < batch; ++i) solve();
        double span = std::chrono::duration<double>(clock::now() - t0).count();
        if (span >= kMinSpan || batch >= (1 << 20)) return span / batch;
        batch = (span <= 0.0) ? batch * 16 : std::min(batch * 16, 1 << 20);
    }
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return (v.size() % 2) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const int> sizes, int reps, std::uint64_t seed,
                                bool time_structured, bool time_dense) {
    if (reps < 3) throw std::invalid_argument("run_bench: need at least 3 repetitions");
    const double nan = std::nan("");
    Rng rng(seed);
    std::vector<BenchRow> rows;
    for (int n : sizes) {
        ChebSeries series = random_series(n, 2.0, rng);
        BenchRow row;
        row.n = n;
        row.structured_seconds = nan;
        row.dense_seconds = nan;
        std::vector<double> samples(static_cast<std::size_t>(reps));
        if (time_structured) {
            for (double& t : samples)
                t = time_one([&] { find_roots(series, 1e-3); });
            row.structured_seconds = median_of(samples);
        }
        if (time_dense) {
            OracleOptions opts;
            opts.balance = true;
            for (double& t : samples)
                t = time_one([&] { find_roots_dense(series, 1e-3, opts); });
            row.dense_seconds = median_of(samples);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    std::string out = "n,structured_seconds,dense_seconds\n";
    for (const BenchRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        if (!std::isnan(r.structured_seconds)) out += format_double(r.structured_seconds);
        out += ',';
        if (!std::isnan(r.dense_seconds)) out += format_double(r.dense_seconds);
        out += '\n';
    }
    return out;
}

}  // namespace colleague
