#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "colleague/io.hpp"
#include "colleague/rng.hpp"
#include "colleague/rootfinder.hpp"

using namespace colleague;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("colleague_io_test_" + name);
}

void spill(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// run the CLI under test; returns the process exit code
int run_cli(const std::string& args) {
    std::string cmd = std::string(CHEBROOTS_BIN) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("shortest round-trip formatting really round-trips") {
    const double cases[] = {0.0,     -0.0,   1.0,     0.1,         1.0 / 3.0,
                            1e300,   5e-324, -2.5e-8, 0x1.fffp+10, 123456789.123456789,
                            -1e-200, 3.14};
    for (double v : cases) {
        std::string s = format_double(v);
        double back = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(ec == std::errc());
        CHECK(ptr == s.data() + s.size());
        // bit-identical, including the sign of zero
        CHECK(std::bit_cast<std::uint64_t>(back) == std::bit_cast<std::uint64_t>(v));
    }
    // spot-check shortness: no exponent noise on small integers
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("generator files round-trip bit for bit") {
    Rng rng(3);
    std::vector<Complex> d(5), beta(4), p(5), q(5);
    for (auto& z : d) z = Complex(rng.normal(), rng.normal());
    for (auto& z : beta) z = Complex(rng.normal(), rng.normal());
    for (auto& z : p) z = Complex(rng.normal() * 1e8, rng.normal());
    for (auto& z : q) z = Complex(rng.normal(), rng.normal() * 1e-12);
    HessGenerators g(std::move(d), std::move(beta), std::move(p), std::move(q));

    fs::path path = temp_file("gen.json");
    write_generators_json(path, g);
    HessGenerators back = read_generators_json(path);
    CHECK(back.n == g.n);
    CHECK(back.d == g.d);
    CHECK(back.beta == g.beta);
    CHECK(back.p == g.p);
    CHECK(back.q == g.q);
    fs::remove(path);
}

TEST_CASE("malformed generator files name the file and the problem") {
    fs::path path = temp_file("bad_gen.json");

    spill(path, "[1, 2, 3]");
    CHECK_THROWS_WITH_AS(read_generators_json(path), doctest::Contains("bad_gen"),
                         std::runtime_error);

    // wrong d length for the declared n
    spill(path, R"({"n": 2, "d": [[1,0]], "beta": [[0,0]], "p": [[0,0],[0,0]],)"
                R"( "q": [[0,0],[0,0]]})");
    CHECK_THROWS_WITH_AS(read_generators_json(path), doctest::Contains("\"d\""),
                         std::runtime_error);

    // non-finite entry
    spill(path, R"({"n": 1, "d": [[1e999,0]], "beta": [], "p": [[0,0]], "q": [[0,0]]})");
    CHECK_THROWS_AS(read_generators_json(path), std::runtime_error);

    CHECK_THROWS_AS(read_generators_json(temp_file("missing_gen.json")), std::runtime_error);
    fs::remove(path);
}

TEST_CASE("coefficient files: text and JSON forms, sniffed by first byte") {
    fs::path path = temp_file("coeffs.txt");

    spill(path, "1.5\n\n-0.25\n3e-2\n");
    ChebSeries s = read_coefficients(path);
    CHECK(s.coeffs == std::vector<double>{1.5, -0.25, 3e-2});

    spill(path, "  {\"coeffs\": [1.5, -0.25, 0.03]}");
    ChebSeries j = read_coefficients(path);
    CHECK(j.coeffs == std::vector<double>{1.5, -0.25, 0.03});

    // writers round-trip bit for bit, including awkward values
    ChebSeries awkward({1.0 / 3.0, 5e-324, -0.0, 1e300});
    write_coefficients_text(path, awkward);
    CHECK(read_coefficients(path).coeffs == awkward.coeffs);
    write_coefficients_json(path, awkward);
    CHECK(read_coefficients(path).coeffs == awkward.coeffs);

    // parse errors carry the line number
    spill(path, "1.0\nnot_a_number\n");
    CHECK_THROWS_WITH_AS(read_coefficients(path), doctest::Contains("line 2"),
                         std::runtime_error);
    spill(path, "1.0\n2.0e\n");
    CHECK_THROWS_AS(read_coefficients(path), std::runtime_error);

    fs::remove(path);
}

TEST_CASE("report serialization carries every diagnostic field") {
    RootReport rep = find_roots(ChebSeries({0.0, 0.0, 1.0}), 1e-3);
    std::string json = report_to_json(rep, 2);
    for (const char* key : {"\"n\"", "\"coeff_norm\"", "\"n_roots\"", "\"max_eta\"",
                            "\"max_abs_eigenvalue\"", "\"roots\"", "\"eta\"", "\"kappa\"",
                            "\"eigenvalues\""})
        CHECK(json.find(key) != std::string::npos);
    CHECK(json.find("\"n_roots\": 2") != std::string::npos);

    std::string csv = report_to_csv(rep);
    CHECK(csv.rfind("root,eta,kappa\n", 0) == 0);
    // header plus one line per accepted root
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    std::string ecsv = eigenvalues_to_csv(rep.all_eigenvalues);
    CHECK(ecsv.rfind("re,im\n", 0) == 0);
    CHECK(std::count(ecsv.begin(), ecsv.end(), '\n') == 3);

    std::string ejson = eigenvalues_to_json(rep.all_eigenvalues);
    CHECK(ejson.find("\"eigenvalues\"") != std::string::npos);
}

TEST_CASE("CLI: the roots subcommand solves a coefficient file") {
    fs::path in = temp_file("cli_coeffs.txt");
    fs::path out = temp_file("cli_report.json");
    // (x - 1/2)(x + 1/4) expanded in the basis
    spill(in, "0.375\n-0.25\n0.5\n");

    CHECK(run_cli("roots --input " + in.string() + " --output " + out.string()) == 0);
    std::string report = slurp(out);
    CHECK(report.find("\"n_roots\": 2") != std::string::npos);
    CHECK(report.find("\"roots\": [") != std::string::npos);
    CHECK(report.find("\"max_eta\": ") != std::string::npos);

    // csv format
    CHECK(run_cli("roots --input " + in.string() + " --format csv --output " +
                  out.string()) == 0);
    CHECK(slurp(out).rfind("root,eta,kappa\n", 0) == 0);

    // dense solver variants accept the same file
    CHECK(run_cli("roots --solver dense --input " + in.string() + " --output " +
                  out.string()) == 0);
    CHECK(run_cli("roots --solver dense-nobalance --input " + in.string() +
                  " --output " + out.string()) == 0);

    fs::remove(in);
    fs::remove(out);
}

TEST_CASE("CLI: usage and runtime failures map to distinct exit codes") {
    // bad invocations: parser errors
    CHECK(run_cli("") == 1);
    CHECK(run_cli("roots") == 1);
    CHECK(run_cli("roots --input nope.txt --solver bogus") == 1);
    CHECK(run_cli("frobnicate") == 1);

    // missing file: runtime error
    CHECK(run_cli("roots --input /nonexistent/coeffs.txt") == 1);

    // unparseable content: runtime error
    fs::path bad = temp_file("cli_bad.txt");
    spill(bad, "1.0\nwat\n");
    CHECK(run_cli("roots --input " + bad.string()) == 1);
    fs::remove(bad);

    // convergence failure is its own code so scripts can tell it apart;
    // one sweep per eigenvalue is not enough for a degree-20 basis polynomial
    fs::path in = temp_file("cli_hard.txt");
    std::string t20;
    for (int i = 0; i < 20; ++i) t20 += "0\n";
    t20 += "1\n";
    spill(in, t20);
    CHECK(run_cli("roots --input " + in.string() + " --max-iters 1") == 2);
    fs::remove(in);

    // help succeeds
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("roots --help") == 0);
}

TEST_CASE("CLI: experiment output is byte-identical across runs") {
    fs::path out1 = temp_file("exp1.csv");
    fs::path out2 = temp_file("exp2.csv");
    CHECK(run_cli("experiment yuji --output " + out1.string()) == 0);
    CHECK(run_cli("experiment yuji --output " + out2.string()) == 0);
    std::string a = slurp(out1);
    CHECK(!a.empty());
    CHECK(a == slurp(out2));
    CHECK(a.rfind("experiment,degree,n,solver,coeff_norm,n_roots,max_abs_eigenvalue,"
                  "max_eta\n", 0) == 0);

    // a different seed changes the random experiment but not its shape
    fs::path out3 = temp_file("exp3.csv");
    CHECK(run_cli("experiment yuji --seed 5 --output " + out3.string()) == 0);
    CHECK(slurp(out3) == a);  // yuji has no random input, seeds are inert

    fs::remove(out1);
    fs::remove(out2);
    fs::remove(out3);
}

TEST_CASE("CLI: eig subcommand reads generator files") {
    Rng rng(11);
    std::vector<Complex> d{1.0, 2.0}, beta{0.5}, p{0.0, 0.0}, q{0.0, 0.0};
    HessGenerators g(std::move(d), std::move(beta), std::move(p), std::move(q));
    fs::path in = temp_file("cli_gen.json");
    fs::path out = temp_file("cli_eigs.json");
    write_generators_json(in, g);

    CHECK(run_cli("eig --input " + in.string() + " --output " + out.string()) == 0);
    std::string eigs = slurp(out);
    CHECK(eigs.find("\"eigenvalues\"") != std::string::npos);

    CHECK(run_cli("eig --input " + in.string() + " --format csv --output " +
                  out.string()) == 0);
    CHECK(slurp(out).rfind("re,im\n", 0) == 0);

    fs::remove(in);
    fs::remove(out);
}
