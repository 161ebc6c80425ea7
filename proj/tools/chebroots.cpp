#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colleague/dense_eig.hpp"
#include "colleague/eig.hpp"
#include "colleague/errors.hpp"
#include "colleague/experiments.hpp"
#include "colleague/io.hpp"
#include "colleague/rootfinder.hpp"

namespace {

using namespace colleague;

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("stdout: write error");
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(output_path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error(output_path + ": write error");
}

Solver parse_solver(const std::string& s) {
    if (s == "structured") return Solver::structured;
    if (s == "dense") return Solver::dense;
    return Solver::dense_nobalance;
}

int run_roots(const std::string& input, const std::string& output, const std::string& solver,
              double delta, double epsilon, int max_iters, const std::string& format) {
    ChebSeries series = read_coefficients(input);
    RootReport rep;
    if (solver == "structured") {
        EigOptions opts;
        if (epsilon > 0.0) opts.epsilon = epsilon;
        if (max_iters > 0) opts.max_iters_per_eigenvalue = max_iters;
        rep = find_roots(series, delta, opts);
    } else {
        OracleOptions opts;
        opts.balance = (solver == "dense");
        if (max_iters > 0) opts.max_iters = max_iters;
        rep = find_roots_dense(series, delta, opts);
    }
    const int n = static_cast<int>(rep.all_eigenvalues.size());
    emit(output, format == "csv" ? report_to_csv(rep) : report_to_json(rep, n));
    return 0;
}

int run_eig(const std::string& input, const std::string& output, const std::string& solver,
            double epsilon, int max_iters, const std::string& format) {
    HessGenerators g = read_generators_json(input);
    std::vector<Complex> eigs;
    if (solver == "structured") {
        EigOptions opts;
        if (epsilon > 0.0) opts.epsilon = epsilon;
        if (max_iters > 0) opts.max_iters_per_eigenvalue = max_iters;
        eigs = eig(g, opts).eigenvalues;
    } else {
        OracleOptions opts;
        opts.balance = (solver == "dense");
        if (max_iters > 0) opts.max_iters = max_iters;
        eigs = dense_eig(reconstruct_sum(g), opts);
    }
    emit(output, format == "csv" ? eigenvalues_to_csv(eigs) : eigenvalues_to_json(eigs));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev rootfinder: roots of a Chebyshev expansion as colleague matrix\n"
                 "eigenvalues, via a backward stable structured QR on the generator\n"
                 "representation, with a dense QR solver for comparison.\n"};
    app.require_subcommand(1);

    const std::vector<std::string> solvers = {"structured", "dense", "dense-nobalance"};

    std::string input, output, format = "json", solver = "structured";
    double delta = 1e-3;
    double epsilon = 0.0;
    int max_iters = 0;
    std::uint64_t seed = 0;

    CLI::App* roots = app.add_subcommand(
        "roots", "Compute the real roots of a polynomial given by Chebyshev coefficients");
    roots->add_option("--input", input, "Coefficient file: one coefficient per line (a_0 first) or JSON {\"coeffs\": [...]}")
        ->required();
    roots->add_option("--solver", solver, "Eigenvalue backend")
        ->transform(CLI::IsMember(solvers))
        ->capture_default_str();
    roots->add_option("--delta", delta, "Half-height of the window around [-1,1] kept as real roots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    roots->add_option("--epsilon", epsilon,
                      "Deflation tolerance override for the structured solver (default: derived from the matrix)")
        ->check(CLI::PositiveNumber);
    roots->add_option("--max-iters", max_iters, "Sweep budget per eigenvalue (default: solver's own)")
        ->check(CLI::Range(1, 100000));
    roots->add_option("--format", format, "Output format")
        ->transform(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    roots->add_option("--output", output, "Output file (default: stdout)");
    roots->footer("CSV columns: root,eta,kappa. JSON adds n, coeff_norm, n_roots, max_eta,\n"
                  "max_abs_eigenvalue and the full eigenvalue list.");

    CLI::App* eigc = app.add_subcommand(
        "eig", "Compute the eigenvalues of a colleague matrix given in generator form");
    eigc->add_option("--input", input,
                     "Generator JSON: {\"n\", \"d\", \"beta\", \"p\", \"q\"}, complex entries as [re, im]")
        ->required();
    eigc->add_option("--solver", solver, "Eigenvalue backend")
        ->transform(CLI::IsMember(solvers))
        ->capture_default_str();
    eigc->add_option("--epsilon", epsilon,
                     "Deflation tolerance override for the structured solver (default: derived from the matrix)")
        ->check(CLI::PositiveNumber);
    eigc->add_option("--max-iters", max_iters, "Sweep budget per eigenvalue (default: solver's own)")
        ->check(CLI::Range(1, 100000));
    eigc->add_option("--format", format, "Output format")
        ->transform(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    eigc->add_option("--output", output, "Output file (default: stdout)");
    eigc->footer("CSV columns: re,im.");

    std::string experiment_name;
    CLI::App* expc = app.add_subcommand("experiment", "Run one of the named experiment suites");
    expc->add_option("name", experiment_name, "Suite to run")
        ->required()
        ->transform(CLI::IsMember({"rand", "wilk", "mult", "sin", "yuji"}));
    expc->add_option("--seed", seed, "Random seed (rand suite only)")->capture_default_str();
    CLI::Option* exp_delta =
        expc->add_option("--delta", delta,
                         "Real-root window override (default: 1e-5 for rand, 1e-3 otherwise)")
            ->check(CLI::PositiveNumber);
    expc->add_option("--output", output, "Output file (default: stdout)");
    expc->footer("Emits CSV with columns\n"
                 "  experiment,degree,n,solver,coeff_norm,n_roots,max_abs_eigenvalue,max_eta\n"
                 "one row per (instance, solver); solvers are structured, dense (balanced)\n"
                 "and dense-nobalance. Identical name, seed and delta give byte-identical\n"
                 "output.");

    std::vector<int> sizes;
    int reps = 3;
    std::string bench_solver = "both";
    CLI::App* benchc =
        app.add_subcommand("bench", "Time the solvers on random expansions with coefficient norm 2");
    benchc->add_option("--sizes", sizes, "Ascending list of matrix sizes, e.g. 500,1000,2000")
        ->required()
        ->delimiter(',');
    benchc->add_option("--reps", reps, "Repetitions per measurement (median is reported)")
        ->check(CLI::Range(3, 1000))
        ->capture_default_str();
    benchc->add_option("--solver", bench_solver, "Which solvers to time")
        ->transform(CLI::IsMember({"both", "structured", "dense"}))
        ->capture_default_str();
    benchc->add_option("--seed", seed, "Random seed for the test matrices")->capture_default_str();
    benchc->add_option("--output", output, "Output file (default: stdout)");
    benchc->footer("Emits CSV with columns n,structured_seconds,dense_seconds; a field is left\n"
                   "empty when that solver was not timed. Timing the dense solver above\n"
                   "n = 1500 or so takes minutes per size.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*roots) return run_roots(input, output, solver, delta, epsilon, max_iters, format);
        if (*eigc) return run_eig(input, output, solver, epsilon, max_iters, format);
        if (*expc) {
            double d = (exp_delta->count() > 0) ? delta : 0.0;
            std::vector<ExperimentRow> rows = run_experiment(experiment_name, seed, d);
            emit(output, experiment_csv(rows));
            return 0;
        }
        if (*benchc) {
            for (std::size_t i = 1; i < sizes.size(); ++i)
                if (sizes[i] <= sizes[i - 1])
                    throw std::invalid_argument("--sizes must be strictly ascending");
            std::vector<BenchRow> rows =
                run_bench(sizes, reps, seed, bench_solver != "dense", bench_solver != "structured");
            emit(output, bench_csv(rows));
            return 0;
        }
    } catch (const convergence_error& e) {
        std::cerr << "chebroots: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chebroots: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
