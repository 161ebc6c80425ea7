#include "colleague/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace colleague {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(path, "read error");
    return buf.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << text;
    out.flush();
    if (!out) fail(path, "write error");
}

Complex complex_from_json(const ordered_json& j, const std::filesystem::path& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "complex values must be two-element arrays [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_vector_from_json(const ordered_json& j, const char* field,
                                              const std::filesystem::path& path) {
    if (!j.contains(field)) fail(path, std::string("missing field \"") + field + "\"");
    const ordered_json& arr = j.at(field);
    if (!arr.is_array()) fail(path, std::string("field \"") + field + "\" must be an array");
    std::vector<Complex> out;
    out.reserve(arr.size());
    for (const ordered_json& entry : arr) out.push_back(complex_from_json(entry, path));
    return out;
}

// JSON we emit is assembled by hand so every number goes through to_chars:
// shortest decimal that parses back to the identical double.  nlohmann is
// kept for the reading side only, where its number handling is exact.

void append_complex(std::string& out, Complex z) {
    out += '[';
    out += format_double(z.real());
    out += ", ";
    out += format_double(z.imag());
    out += ']';
}

void append_complex_array(std::string& out, std::span<const Complex> v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        append_complex(out, v[i]);
    }
    out += ']';
}

void append_double_array(std::string& out, std::span<const double> v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    out += ']';
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, res.ptr);
}

HessGenerators read_generators_json(const std::filesystem::path& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(slurp(path));
    } catch (const nlohmann::json::exception& e) {
        fail(path, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(path, "top level must be an object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        fail(path, "missing integer field \"n\"");
    auto n = j.at("n").get<long long>();
    if (n < 1) fail(path, "\"n\" must be at least 1");
    std::vector<Complex> d = complex_vector_from_json(j, "d", path);
    std::vector<Complex> beta = complex_vector_from_json(j, "beta", path);
    std::vector<Complex> p = complex_vector_from_json(j, "p", path);
    std::vector<Complex> q = complex_vector_from_json(j, "q", path);
    if (d.size() != static_cast<std::size_t>(n))
        fail(path, "\"d\" must have exactly n entries");
    try {
        return HessGenerators(std::move(d), std::move(beta), std::move(p), std::move(q));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

void write_generators_json(const std::filesystem::path& path, const HessGenerators& g) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(g.n) + ",\n";
    out += "  \"d\": ";
    append_complex_array(out, g.d);
    out += ",\n  \"beta\": ";
    append_complex_array(out, g.beta);
    out += ",\n  \"p\": ";
    append_complex_array(out, g.p);
    out += ",\n  \"q\": ";
    append_complex_array(out, g.q);
    out += "\n}\n";
    spill(path, out);
}

ChebSeries read_coefficients(const std::filesystem::path& path) {
    std::string text = slurp(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(path, "file contains no coefficients");

    std::vector<double> coeffs;
    if (text[first] == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            fail(path, std::string("invalid JSON: ") + e.what());
        }
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            fail(path, "expected {\"coeffs\": [...]}");
        for (const ordered_json& entry : j.at("coeffs")) {
            if (!entry.is_number()) fail(path, "coefficients must be numbers");
            coeffs.push_back(entry.get<double>());
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r") + 1;
            const char* s = line.data() + b;
            const char* s_end = line.data() + e;
            double value = 0.0;
            auto res = std::from_chars(s, s_end, value);
            if (res.ec != std::errc{} || res.ptr != s_end)
                fail(path, "line " + std::to_string(lineno) + ": not a number: \"" +
                               std::string(s, s_end) + "\"");
            coeffs.push_back(value);
        }
    }
    if (coeffs.empty()) fail(path, "file contains no coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!std::isfinite(coeffs[i]))
            fail(path, "coefficient a_" + std::to_string(i) + " is not finite");
    return ChebSeries{std::move(coeffs)};
}

void write_coefficients_text(const std::filesystem::path& path, const ChebSeries& s) {
    std::string out;
    for (double c : s.coeffs) {
        out += format_double(c);
        out += '\n';
    }
    spill(path, out);
}

void write_coefficients_json(const std::filesystem::path& path, const ChebSeries& s) {
    std::string out = "{\n  \"coeffs\": ";
    append_double_array(out, s.coeffs);
    out += "\n}\n";
    spill(path, out);
}

std::string report_to_json(const RootReport& rep, int n) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(n) + ",\n";
    out += "  \"coeff_norm\": " + format_double(rep.coeff_norm) + ",\n";
    out += "  \"n_roots\": " + std::to_string(rep.n_roots) + ",\n";
    out += "  \"max_eta\": " + format_double(rep.max_eta) + ",\n";
    out += "  \"max_abs_eigenvalue\": " + format_double(rep.max_abs_eigenvalue) + ",\n";
    out += "  \"roots\": ";
    append_double_array(out, rep.real_roots);
    out += ",\n  \"eta\": ";
    append_double_array(out, rep.eta);
    out += ",\n  \"kappa\": ";
    append_double_array(out, rep.kappa);
    out += ",\n  \"eigenvalues\": ";
    append_complex_array(out, rep.all_eigenvalues);
    out += "\n}\n";
    return out;
}

std::string report_to_csv(const RootReport& rep) {
    std::string out = "root,eta,kappa\n";
    for (std::size_t i = 0; i < rep.real_roots.size(); ++i) {
        out += format_double(rep.real_roots[i]);
        out += ',';
        out += format_double(rep.eta[i]);
        out += ',';
        out += format_double(rep.kappa[i]);
        out += '\n';
    }
    return out;
}

std::string eigenvalues_to_json(std::span<const Complex> eigs) {
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(eigs.size()) + ",\n";
    out += "  \"eigenvalues\": ";
    append_complex_array(out, eigs);
    out += "\n}\n";
    return out;
}

std::string eigenvalues_to_csv(std::span<const Complex> eigs) {
    std::string out = "re,im\n";
    for (Complex z : eigs) {
        out += format_double(z.real());
        out += ',';
        out += format_double(z.imag());
        out += '\n';
    }
    return out;
}

}  // namespace colleague
