#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester::cli {

/// "3,0,3" -> (3, 0, 3).
Inertia3 parse_inertia(const std::string& text);

/// Number, or inf / +inf / -inf.
double parse_real(const std::string& text);

/// "lo:hi:count" (count >= 1 points, endpoints included) or "x0,x1,...".
std::vector<double> parse_grid(const std::string& text);

Pencil load_pencil(const std::filesystem::path& a, const std::filesystem::path& b);

/// Manifest: {"degree": k, "coefficients": ["A0.mtx", ..., "Ak.mtx"]};
/// relative paths are resolved against the manifest's directory.
MatrixPolynomial load_polynomial(const std::filesystem::path& manifest);

/// Writes prefix_A0.mtx ... prefix_Ak.mtx and prefix.json; returns all paths.
std::vector<std::filesystem::path> save_polynomial(const std::filesystem::path& prefix, const MatrixPolynomial& p);

}  // namespace sylvester::cli
