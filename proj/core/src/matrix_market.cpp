#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sylvester/errors.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Header {
  bool coordinate = false;
  bool complex = false;
};

Header parse_header(const std::string& line) {
  std::istringstream in(line);
  std::string banner, object, format, field, symmetry;
  in >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw InputError("missing %%MatrixMarket banner");
  object = lowercase(object);
  format = lowercase(format);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (object != "matrix") throw InputError("unsupported Matrix Market object '" + object + "'");

  Header h;
  if (format == "coordinate") {
    h.coordinate = true;
  } else if (format != "array") {
    throw InputError("unsupported Matrix Market format '" + format + "'");
  }

  if (field == "complex") {
    h.complex = true;
  } else if (field != "real" && field != "integer" && field != "double") {
    throw InputError("unsupported Matrix Market field '" + field + "'");
  }

  if (symmetry == "general" || symmetry == "skew-symmetric") {
    throw InputError("Matrix Market structure '" + symmetry +
                     "' is not Hermitian; declare symmetric or hermitian");
  }
  if (symmetry != "symmetric" && symmetry != "hermitian") {
    throw InputError("unknown Matrix Market symmetry '" + symmetry + "'");
  }
  if (h.complex && symmetry == "symmetric") {
    throw InputError("complex symmetric (non-Hermitian) matrices are not supported");
  }
  return h;
}

class TokenStream {
 public:
  explicit TokenStream(std::istream& in) : in_(in) {}

  bool next_line(std::string& line) {
    while (std::getline(in_, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '%') continue;
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
};

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw InputError("malformed number '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

Index parse_index(const std::string& token) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("malformed integer '" + token + "'");
  }
  return static_cast<Index>(value);
}

}  // namespace

HermitianMatrix parse_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty Matrix Market input");
  const Header header = parse_header(line);

  TokenStream tokens(in);
  if (!tokens.next_line(line)) throw InputError("missing size line");
  const auto size_tokens = split(line);
  if (size_tokens.size() != (header.coordinate ? 3u : 2u)) throw InputError("malformed size line");
  const Index rows = parse_index(size_tokens[0]);
  const Index cols = parse_index(size_tokens[1]);
  if (rows != cols) throw InputError("matrix is not square");
  if (rows < 1) throw InputError("matrix dimension must be >= 1");
  const Index n = rows;

  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  const std::size_t value_width = header.complex ? 2 : 1;

  auto read_value = [&](const std::vector<std::string>& toks, std::size_t offset) {
    if (toks.size() != offset + value_width) throw InputError("malformed entry line: '" + line + "'");
    const double re = parse_double(toks[offset]);
    const double im = header.complex ? parse_double(toks[offset + 1]) : 0.0;
    return Complex(re, im);
  };

  if (header.coordinate) {
    const Index nnz = parse_index(size_tokens[2]);
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen =
        Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
    for (Index e = 0; e < nnz; ++e) {
      if (!tokens.next_line(line)) throw InputError("fewer coordinate entries than declared");
      const auto toks = split(line);
      if (toks.size() < 2) throw InputError("malformed entry line: '" + line + "'");
      const Index i = parse_index(toks[0]) - 1;
      const Index j = parse_index(toks[1]) - 1;
      if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("coordinate entry out of range");
      const Complex v = read_value(toks, 2);
      if (seen(i, j)) throw InputError("duplicate coordinate entry");
      seen(i, j) = seen(j, i) = true;
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  } else {
    std::vector<Complex> values;
    while (tokens.next_line(line)) values.push_back(read_value(split(line), 0));
    const auto packed = static_cast<std::size_t>(n * (n + 1) / 2);
    const auto full = static_cast<std::size_t>(n * n);
    if (values.size() == packed) {
      std::size_t k = 0;
      for (Index j = 0; j < n; ++j) {
        for (Index i = j; i < n; ++i) {
          m(i, j) = values[k++];
          m(j, i) = std::conj(m(i, j));
        }
      }
    } else if (values.size() == full) {
      std::size_t k = 0;
      for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) m(i, j) = values[k++];
      }
    } else {
      throw InputError("array entry count " + std::to_string(values.size()) + " matches neither " +
                       std::to_string(packed) + " (lower triangle) nor " + std::to_string(full));
    }
  }

  if (header.complex) return HermitianMatrix(std::move(m));
  return HermitianMatrix(RealMatrix(m.real()));
}

HermitianMatrix load_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix_market(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_matrix_market(const HermitianMatrix& m) {
  std::ostringstream out;
  const Index n = m.size();
  char buf[64];
  if (m.is_real()) {
    out << "%%MatrixMarket matrix array real symmetric\n";
  } else {
    out << "%%MatrixMarket matrix array complex hermitian\n";
  }
  out << n << ' ' << n << '\n';
  for (Index j = 0; j < n; ++j) {
    for (Index i = j; i < n; ++i) {
      const Complex v = m(i, j);
      if (m.is_real()) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
      } else {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", v.real(), v.imag());
      }
      out << buf << '\n';
    }
  }
  return out.str();
}

void save_matrix_market(const std::filesystem::path& path, const HermitianMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << format_matrix_market(m);
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace sylvester
