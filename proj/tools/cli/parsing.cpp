#include "parsing.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sylvester/errors.hpp"

namespace sylvester::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

int parse_count(const std::string& text) {
  const std::string s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
  }
  if (v < 0) throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
  return v;
}

}  // namespace

Inertia3 parse_inertia(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("inertia must be written n+,n0,n- (got '" + text + "')");
  return {parse_count(parts[0]), parse_count(parts[1]), parse_count(parts[2])};
}

double parse_real(const std::string& text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "+inf" || s == "Inf" || s == "+Inf") return INFINITY;
  if (s == "-inf" || s == "-Inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || std::isnan(v)) {
    throw std::invalid_argument("expected a real number, got '" + text + "'");
  }
  return v;
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid must be lo:hi:count (got '" + text + "')");
    const double lo = parse_real(parts[0]);
    const double hi = parse_real(parts[1]);
    const int count = parse_count(parts[2]);
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("grid endpoints must be finite");
    if (count < 1) throw std::invalid_argument("grid needs at least one point");
    if (count == 1) return {lo};
    if (!(lo < hi)) throw std::invalid_argument("grid needs lo < hi");
    std::vector<double> grid;
    for (int i = 0; i < count; ++i) grid.push_back(lo + (hi - lo) * i / (count - 1));
    grid.back() = hi;
    return grid;
  }
  std::vector<double> grid;
  for (const auto& p : split(text, ',')) grid.push_back(parse_real(p));
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

Pencil load_pencil(const std::filesystem::path& a, const std::filesystem::path& b) {
  HermitianMatrix ma = load_matrix_market(a);
  HermitianMatrix mb = load_matrix_market(b);
  if (ma.size() != mb.size()) {
    throw InputError("A is " + std::to_string(ma.size()) + "x" + std::to_string(ma.size()) + " but B is " +
                     std::to_string(mb.size()) + "x" + std::to_string(mb.size()));
  }
  return {std::move(ma), std::move(mb)};
}

MatrixPolynomial load_polynomial(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot open polynomial manifest " + manifest.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed manifest " + manifest.string() + ": " + e.what());
  }
  if (!j.contains("coefficients") || !j["coefficients"].is_array()) {
    throw InputError("manifest " + manifest.string() + " lacks a 'coefficients' list");
  }
  const auto base = manifest.parent_path();
  std::vector<HermitianMatrix> coeffs;
  for (const auto& entry : j["coefficients"]) {
    std::filesystem::path p = entry.get<std::string>();
    if (p.is_relative()) p = base / p;
    coeffs.push_back(load_matrix_market(p));
  }
  if (j.contains("degree") && j["degree"].get<int>() + 1 != static_cast<int>(coeffs.size())) {
    throw InputError("manifest degree " + std::to_string(j["degree"].get<int>()) + " does not match " +
                     std::to_string(coeffs.size()) + " coefficient files");
  }
  return MatrixPolynomial(std::move(coeffs));
}

std::vector<std::filesystem::path> save_polynomial(const std::filesystem::path& prefix, const MatrixPolynomial& p) {
  std::vector<std::filesystem::path> written;
  nlohmann::json names = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    std::filesystem::path file = prefix;
    file += "_A" + std::to_string(i) + ".mtx";
    save_matrix_market(file, p.coeff(i));
    names.push_back(file.filename().string());
    written.push_back(file);
  }
  std::filesystem::path manifest = prefix;
  manifest += ".json";
  std::ofstream out(manifest);
  if (!out) throw InputError("cannot write " + manifest.string());
  out << nlohmann::json{{"degree", p.degree()}, {"coefficients", names}}.dump(2) << '\n';
  written.push_back(manifest);
  return written;
}

}  // namespace sylvester::cli
