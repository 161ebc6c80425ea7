#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "colleague/chebyshev.hpp"
#include "colleague/generators.hpp"
#include "colleague/rootfinder.hpp"

namespace colleague {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Generator sets travel as {"n": ..., "d": [[re, im], ...], "beta": ...,
// "p": ..., "q": ...}.  Readers validate sizes and finiteness.
HessGenerators read_generators_json(const std::filesystem::path& path);
void write_generators_json(const std::filesystem::path& path, const HessGenerators& g);

// Coefficient files are either plain text (one coefficient per line, a_0
// first, blank lines ignored) or JSON {"coeffs": [...]}; the reader sniffs
// the leading '{'.  Writers round-trip bit for bit.
ChebSeries read_coefficients(const std::filesystem::path& path);
void write_coefficients_text(const std::filesystem::path& path, const ChebSeries& s);
void write_coefficients_json(const std::filesystem::path& path, const ChebSeries& s);

// Report serialization used by the CLI.  n is the colleague dimension the
// report was computed at (the expansion order after trimming).
std::string report_to_json(const RootReport& rep, int n);
std::string report_to_csv(const RootReport& rep);

std::string eigenvalues_to_json(std::span<const Complex> eigs);
std::string eigenvalues_to_csv(std::span<const Complex> eigs);

}  // namespace colleague
