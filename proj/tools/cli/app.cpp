#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "parsing.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/serialize.hpp"

namespace sylvester::cli {

namespace {

struct Globals {
  std::optional<double> tol_rel;
  double tol_abs = 0.0;
  std::uint64_t seed = 0;
  std::string format = "auto";

  [[nodiscard]] Tolerance tolerance() const { return Tolerance{tol_rel, tol_abs}; }
  [[nodiscard]] std::string resolve(const std::string& fallback) const { return format == "auto" ? fallback : format; }
};

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string triple(const Inertia3& in) {
  return "(" + std::to_string(in.n_plus) + "," + std::to_string(in.n_zero) + "," + std::to_string(in.n_minus) + ")";
}

Json jreal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

// Pads to a display width, counting UTF-8 code points rather than bytes.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80;
  return shown >= width ? s : s + std::string(width - shown, ' ');
}

std::string range(const CountRange& r) { return "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]"; }

std::string range(const Bound& b) { return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]"; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- human renderers --------------------------------------------------------

void human_bounds(std::ostream& out, const BoundsReport& r, std::optional<int> sharp) {
  out << "n = " << r.n << "   inertia(A) = " << triple(r.inertia_a) << "   inertia(B) = " << triple(r.inertia_b)
      << '\n';
  out << "N₊₊ = " << r.aux.N_pp << "   N₊₋ = " << r.aux.N_pm << "   δ = " << r.aux.delta << "   (n₊₊ = " << r.aux.n_pp
      << ", n₋₋ = " << r.aux.n_mm << ", n₊₋ = " << r.aux.n_pm << ", n₋₊ = " << r.aux.n_mp << ")\n";
  if (r.rank_used) out << "normal rank r = " << *r.rank_used << '\n';
  auto line = [&](const char* name, const Bound& b) {
    out << pad(name, 5) << " in " << pad(range(b), 9) << "  lower: " << b.lower_source << "   upper: " << b.upper_source << '\n';
  };
  line("n₊", r.n_plus);
  line("n₀", r.n_zero);
  line("n₋", r.n_minus);
  line("n_C", r.n_complex);
  line("n_∞", r.n_infinite);
  line("n_R", r.n_real);
  if (sharp) out << "sharp real lower bound (0, ∞ not eigenvalues): " << *sharp << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

void human_interval(std::ostream& out, const IntervalReport& r) {
  out << "interval (" << num(r.a) << ", " << num(r.b) << ")   normal rank " << r.normal_rank << '\n';
  out << "inertia at a " << triple(r.inertia_a) << "   inertia of bB - A " << triple(r.inertia_b) << '\n';
  out << "inside (a, b)         " << range(r.count_open_interval) << '\n';
  out << "at a                  " << range(r.count_at_a) << (r.a_is_eigenvalue ? "   (a is an eigenvalue)" : "")
      << '\n';
  out << "at b                  " << range(r.count_at_b) << (r.b_is_eigenvalue ? "   (b is an eigenvalue)" : "")
      << '\n';
  out << "outside / infinite    " << range(r.count_outside_or_infinite) << '\n';
  out << "nonreal               " << range(r.count_complex) << '\n';
  out << "closed [a, b] at least " << r.closed_interval_lower << '\n';
  if (r.parity_set) {
    out << "parity set            {";
    for (std::size_t i = 0; i < r.parity_set->size(); ++i) out << (i ? ", " : "") << (*r.parity_set)[i];
    out << "}\n";
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

void human_oracle(std::ostream& out, const OracleReport& r) {
  out << "n = " << r.n << "   normal rank = " << r.normal_rank << "   common kernel = " << r.common_kernel << '\n';
  const auto& q = r.inertia;
  out << "inertia (n₊, n₀, n₋, n_C, n_∞) = (" << q.n_plus << ", " << q.n_zero << ", " << q.n_minus << ", "
      << q.n_complex << ", " << q.n_infinite << ")\n";
  for (const auto& rec : r.records) {
    std::string value = "inf";
    if (rec.value) {
      value = num(rec.value->real());
      if (rec.value->imag() != 0.0) value += (rec.value->imag() > 0 ? " + " : " - ") + num(std::abs(rec.value->imag())) + "i";
    }
    out << "  " << value << "   algebraic " << rec.algebraic_mult << "   geometric " << rec.geometric_mult << "   "
        << to_string(rec.classification) << '\n';
  }
}

// --- input selection --------------------------------------------------------

struct PencilOrPoly {
  std::vector<std::string> files;
  std::string poly;
};

void add_pencil_inputs(CLI::App* sub, PencilOrPoly& in) {
  sub->add_option("files", in.files, "Matrix Market files for A and B")->expected(0, 2);
  sub->add_option("--poly", in.poly, "JSON manifest of a matrix polynomial");
}

enum class InputKind { pencil, poly };

InputKind input_kind(const PencilOrPoly& in, bool allow_poly = true) {
  const bool have_files = !in.files.empty();
  const bool have_poly = !in.poly.empty();
  if (have_files && have_poly) throw std::invalid_argument("give either A B files or --poly, not both");
  if (have_poly) {
    if (!allow_poly) throw std::invalid_argument("--poly is not supported here");
    return InputKind::poly;
  }
  if (in.files.size() != 2) throw std::invalid_argument("expected two Matrix Market files A B");
  return InputKind::pencil;
}

// --- commands ---------------------------------------------------------------

struct InertiaArgs {
  std::string file;
  std::string poly;
  std::string at;
  std::string method = "ldlt";
};

int cmd_inertia(const InertiaArgs& a, const Globals& g, std::ostream& out) {
  if (a.file.empty() == a.poly.empty()) throw std::invalid_argument("give exactly one of a matrix file or --poly");
  std::optional<HermitianMatrix> m;
  if (!a.poly.empty()) {
    if (a.at.empty()) throw std::invalid_argument("--poly needs --at t");
    m = poly_eval(load_polynomial(a.poly), parse_real(a.at));
  } else {
    if (!a.at.empty()) throw std::invalid_argument("--at only applies to --poly");
    m = load_matrix_market(a.file);
  }
  const Inertia3 in = a.method == "eig" ? eigenvalue_inertia(*m, g.tolerance()) : ldlt_inertia(*m, g.tolerance());
  const auto fmt = g.resolve("json");
  if (fmt == "human") {
    out << "n+ = " << in.n_plus << ", n0 = " << in.n_zero << ", n- = " << in.n_minus << '\n';
  } else if (fmt == "csv") {
    out << "n_plus,n_zero,n_minus\n" << in.n_plus << ',' << in.n_zero << ',' << in.n_minus << '\n';
  } else {
    out << Json(in).dump() << '\n';
  }
  return kOk;
}

struct BoundsArgs {
  std::vector<std::string> files;
  std::string ia;
  std::string ib;
  std::string rank;
  bool sharp_real = false;
  bool near_definite = false;
};

int cmd_bounds(const BoundsArgs& a, const Globals& g, std::ostream& out) {
  Inertia3 ia;
  Inertia3 ib;
  std::optional<Pencil> pencil;
  if (!a.files.empty()) {
    if (a.files.size() != 2) throw std::invalid_argument("expected two Matrix Market files A B");
    if (!a.ia.empty() || !a.ib.empty()) throw std::invalid_argument("give either files or --ia/--ib, not both");
    pencil = load_pencil(a.files[0], a.files[1]);
    ia = ldlt_inertia(pencil->a(), g.tolerance());
    ib = ldlt_inertia(pencil->b(), g.tolerance());
  } else {
    if (a.ia.empty() || a.ib.empty()) throw std::invalid_argument("need A B files or both --ia and --ib");
    ia = parse_inertia(a.ia);
    ib = parse_inertia(a.ib);
  }
  const int n = ia.size();
  if (ib.size() != n) throw std::invalid_argument("--ia and --ib describe different dimensions");

  BoundsReport rep;
  if (!a.rank.empty()) {
    if (a.near_definite) throw std::invalid_argument("--rank and --near-definite are exclusive");
    int r = 0;
    if (a.rank == "auto") {
      if (!pencil) throw std::invalid_argument("--rank auto needs matrix files");
      r = normal_rank(*pencil, g.seed, g.tolerance());
    } else {
      r = static_cast<int>(parse_real(a.rank));
      if (std::to_string(r) != a.rank) throw std::invalid_argument("--rank expects an integer or 'auto'");
    }
    rep = pencil_bounds_with_rank(ia, ib, n, r);
  } else if (a.near_definite) {
    rep = near_definite_bounds(ia, ib, n);
  } else {
    rep = pencil_bounds(ia, ib, n);
  }
  if (pencil) rep.tolerance_used = g.tolerance();

  std::optional<int> sharp;
  if (a.sharp_real) sharp = real_lower_sharp(ia, ib);

  const auto fmt = g.resolve("json");
  if (fmt == "human") {
    human_bounds(out, rep, sharp);
  } else if (fmt == "csv") {
    out << "quantity,lower,upper,lower_source,upper_source\n";
    auto row = [&](const char* name, const Bound& b) {
      out << name << ',' << b.lower << ',' << b.upper << ",\"" << b.lower_source << "\",\"" << b.upper_source << "\"\n";
    };
    row("n_plus", rep.n_plus);
    row("n_zero", rep.n_zero);
    row("n_minus", rep.n_minus);
    row("n_complex", rep.n_complex);
    row("n_infinite", rep.n_infinite);
    row("n_real", rep.n_real);
    if (sharp) out << "n_real_sharp," << *sharp << ",,\"|n+(B) - n-(A)| + |n-(A) - n-(B)|\",\n";
  } else {
    Json j = rep;
    if (sharp) {
      j["real_lower_sharp"] = *sharp;
      j["real_lower_sharp_condition"] = "valid when neither 0 nor infinity is an eigenvalue";
    }
    print_json(out, j);
  }
  return kOk;
}

struct CountArgs {
  PencilOrPoly in;
  std::string a;
  std::string b;
  bool parity = false;
  std::optional<int> k;
  bool geometric = false;
  bool hyperbolic = false;
};

int cmd_count(const CountArgs& c, const Globals& g, std::ostream& out) {
  const double a = parse_real(c.a);
  const double b = parse_real(c.b);
  if (!(a < b)) throw std::invalid_argument("--a must be smaller than --b");
  const auto fmt = g.resolve("json");

  if (input_kind(c.in) == InputKind::poly) {
    if (c.parity || c.geometric || c.k) throw std::invalid_argument("--parity/--geometric/--k apply to pencils only");
    const MatrixPolynomial p = load_polynomial(c.in.poly);
    Json j{{"a", jreal(a)}, {"b", jreal(b)}};
    if (c.hyperbolic) {
      j["count"] = hyperbolic_quadratic_count(p, a, b, g.tolerance());
      j["exact"] = true;
    } else {
      j.update(Json(nep_interval_lower(polynomial_slice(p), a, b, g.tolerance())));
    }
    if (fmt == "human") {
      if (c.hyperbolic) {
        out << "exactly " << j["count"].get<int>() << " eigenvalues in (" << num(a) << ", " << num(b) << ")\n";
      } else {
        out << "at least " << j["lower"].get<int>() << " real eigenvalues in (" << num(a) << ", " << num(b) << ")\n"
            << "note: " << j["caveat"].get<std::string>() << '\n';
      }
    } else if (fmt == "csv") {
      out << "a,b,lower,upper\n" << num(a) << ',' << num(b) << ',';
      if (c.hyperbolic) {
        out << j["count"].get<int>() << ',' << j["count"].get<int>() << '\n';
      } else {
        out << j["lower"].get<int>() << ",\n";
      }
    } else {
      print_json(out, j);
    }
    return kOk;
  }

  if (c.hyperbolic) throw std::invalid_argument("--hyperbolic needs --poly");
  const Pencil p = load_pencil(c.in.files[0], c.in.files[1]);
  const IntervalReport rep = interval_bounds(p, a, b, g.tolerance(), g.seed);
  Json j = rep;
  const bool finite = std::isfinite(a) && std::isfinite(b);
  if (c.parity) {
    if (finite) {
      j["parity"] = parity_counts(p, a, b, g.tolerance(), c.k, g.seed);
    } else {
      if (c.k) throw std::invalid_argument("--k override is only supported on finite intervals");
      if (!rep.parity_set) {
        std::string why;
        for (const auto& note : rep.notes) why += "; " + note;
        throw InputError("parity law does not apply here" + why);
      }
      j["parity"] = Json{{"counts", *rep.parity_set}};
    }
  }
  if (c.geometric) {
    if (!finite) throw std::invalid_argument("--geometric needs a finite interval");
    const CountRange gr = geometric_interval_bounds(p, a, b, g.tolerance(), c.k, g.seed);
    j["geometric"] = gr;
  }
  if (fmt == "human") {
    human_interval(out, rep);
    if (j.contains("parity")) out << "parity counts " << j["parity"]["counts"].dump() << '\n';
    if (j.contains("geometric")) out << "geometric count in " << range(j["geometric"].get<CountRange>()) << '\n';
  } else if (fmt == "csv") {
    out << slices_to_csv({rep});
  } else {
    print_json(out, j);
  }
  return kOk;
}

struct SliceArgs {
  PencilOrPoly in;
  std::string grid;
};

int cmd_slice(const SliceArgs& s, const Globals& g, std::ostream& out) {
  const auto grid = parse_grid(s.grid);
  const auto fmt = g.resolve("csv");
  if (input_kind(s.in) == InputKind::poly) {
    if (grid.size() < 2) throw std::invalid_argument("slice grid needs at least two points");
    const auto f = polynomial_slice(load_polynomial(s.in.poly));
    Json rows = Json::array();
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      Json row{{"a", grid[i]}, {"b", grid[i + 1]}};
      row.update(Json(nep_interval_lower(f, grid[i], grid[i + 1], g.tolerance())));
      rows.push_back(row);
    }
    if (fmt == "json") {
      print_json(out, rows);
    } else {
      out << "a,b,lower,upper,parity_set\n";
      for (const auto& row : rows) {
        out << num(row["a"].get<double>()) << ',' << num(row["b"].get<double>()) << ',' << row["lower"].get<int>()
            << ",,\n";
      }
    }
    return kOk;
  }
  const Pencil p = load_pencil(s.in.files[0], s.in.files[1]);
  const auto reports = slice_spectrum(p, grid, g.tolerance(), g.seed);
  if (fmt == "json") {
    print_json(out, Json(reports));
  } else if (fmt == "human") {
    for (const auto& r : reports) {
      human_interval(out, r);
      out << '\n';
    }
  } else {
    out << slices_to_csv(reports);
  }
  return kOk;
}

struct TraceArgs {
  PencilOrPoly in;
  std::string matrix;
  std::string grid;
  bool with_inertia = false;
};

int cmd_trace(const TraceArgs& t, const Globals& g, std::ostream& out) {
  std::optional<HermitianFunctionSlice> f;
  if (!t.matrix.empty()) {
    if (!t.in.files.empty() || !t.in.poly.empty()) throw std::invalid_argument("give one problem to trace");
    const HermitianMatrix m = load_matrix_market(t.matrix);
    f = pencil_slice(Pencil(m, HermitianMatrix::identity(m.size())));
  } else if (input_kind(t.in) == InputKind::poly) {
    f = polynomial_slice(load_polynomial(t.in.poly));
  } else {
    f = pencil_slice(load_pencil(t.in.files[0], t.in.files[1]));
  }
  const auto grid = parse_grid(t.grid);
  const Trace trace = trace_eigenfunctions(*f, grid);
  const auto fmt = g.resolve("csv");
  if (fmt == "json") {
    Json j{{"grid", trace.grid}, {"curves", trace.curves}};
    if (t.with_inertia) {
      Json inertias = Json::array();
      for (double x : grid) inertias.push_back(ldlt_inertia((*f)(x), g.tolerance()));
      j["inertia"] = inertias;
    }
    print_json(out, j);
    return kOk;
  }
  if (!t.with_inertia) {
    out << trace_to_csv(trace);
    return kOk;
  }
  // Same table with the inertia of F(t) appended to every row.
  std::istringstream rows(trace_to_csv(trace));
  std::string line;
  std::getline(rows, line);
  out << line << ",n_plus,n_zero,n_minus\n";
  for (double x : grid) {
    std::getline(rows, line);
    const Inertia3 in = ldlt_inertia((*f)(x), g.tolerance());
    out << line << ',' << in.n_plus << ',' << in.n_zero << ',' << in.n_minus << '\n';
  }
  return kOk;
}

struct WitnessArgs {
  std::string ia;
  std::string ib;
  std::string target;
  std::string out = "witness";
  bool sharp_real = false;
};

int cmd_witness(const WitnessArgs& w, const Globals& g, std::ostream& out) {
  const Inertia3 ia = parse_inertia(w.ia);
  const Inertia3 ib = parse_inertia(w.ib);
  if (ia.size() != ib.size()) throw std::invalid_argument("--ia and --ib describe different dimensions");
  if (w.sharp_real == !w.target.empty()) throw std::invalid_argument("give exactly one of --target or --sharp-real");

  Json j;
  std::optional<Pencil> p;
  if (w.sharp_real) {
    p = sharp_real_witness(ia, ib);
    j["target"] = "real_lower_sharp";
    j["lower_bound"] = real_lower_sharp(ia, ib);
  } else {
    const WitnessTarget target = witness_target_from_string(w.target);
    p = witness_pair(ia, ib, target);
    j["target"] = to_string(target);
    j["lower_bound"] = target_lower_bound(ia, ib, target);
  }
  const std::string a_file = w.out + "_A.mtx";
  const std::string b_file = w.out + "_B.mtx";
  save_matrix_market(a_file, p->a());
  save_matrix_market(b_file, p->b());
  j["a_file"] = a_file;
  j["b_file"] = b_file;
  if (g.resolve("json") == "human") {
    out << "wrote " << a_file << " and " << b_file << " (target " << j["target"].get<std::string>()
        << ", bound " << j["lower_bound"].get<int>() << ")\n";
  } else {
    print_json(out, j);
  }
  return kOk;
}

struct OracleArgs {
  PencilOrPoly in;
  bool symmetric_linearization = false;
};

int cmd_oracle(const OracleArgs& o, const Globals& g, std::ostream& out) {
  OracleReport rep;
  if (input_kind(o.in) == InputKind::poly) {
    const MatrixPolynomial p = load_polynomial(o.in.poly);
    if (o.symmetric_linearization) {
      rep = pencil_oracle(quadratic_symmetric_linearization(p), g.seed, g.tolerance());
    } else {
      rep.n = static_cast<int>(p.size());
      rep.normal_rank = normal_rank(p, g.seed, g.tolerance());
      rep.records = polynomial_eigen_records(p, g.seed, g.tolerance());
      rep.inertia = inertia_of(rep.records);
    }
  } else {
    if (o.symmetric_linearization) throw std::invalid_argument("--symmetric applies to quadratic --poly input");
    rep = pencil_oracle(load_pencil(o.in.files[0], o.in.files[1]), g.seed, g.tolerance());
  }
  const auto fmt = g.resolve("json");
  if (fmt == "human") {
    human_oracle(out, rep);
  } else if (fmt == "csv") {
    out << "re,im,algebraic_mult,geometric_mult,classification\n";
    for (const auto& rec : rep.records) {
      if (rec.value) {
        out << num(rec.value->real()) << ',' << num(rec.value->imag());
      } else {
        out << "inf,";
      }
      out << ',' << rec.algebraic_mult << ',' << rec.geometric_mult << ',' << to_string(rec.classification) << '\n';
    }
  } else {
    print_json(out, rep);
  }
  return kOk;
}

struct GenArgs {
  Index n = 0;
  double beta = 0.3;
  double lambda = 1.0;
  Index k = 0;
  std::string in;
  std::string out;
};

int finish_gen(const std::vector<std::string>& files, std::ostream& out) {
  print_json(out, Json{{"files", files}});
  return kOk;
}

int cmd_gen_random(const GenArgs& a, const Globals& g, std::ostream& out) {
  save_matrix_market(a.out, gen_random_symmetric(a.n, g.seed));
  return finish_gen({a.out}, out);
}

int cmd_gen_spring(const GenArgs& a, const Globals&, std::ostream& out) {
  std::vector<std::string> files;
  for (const auto& p : save_polynomial(a.out, gen_spring_quadratic(a.n, a.beta))) files.push_back(p.string());
  return finish_gen(files, out);
}

int cmd_gen_jordan(const GenArgs& a, const Globals&, std::ostream& out) {
  const Pencil p = gen_jordan_pair(a.n, a.lambda);
  save_matrix_market(a.out + "_A.mtx", p.a());
  save_matrix_market(a.out + "_B.mtx", p.b());
  return finish_gen({a.out + "_A.mtx", a.out + "_B.mtx"}, out);
}

int cmd_gen_shifted(const GenArgs& a, const Globals&, std::ostream& out) {
  save_matrix_market(a.out, gen_shifted_inertia(load_matrix_market(a.in), a.k));
  return finish_gen({a.out}, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inertia bounds and eigenvalue counts for Hermitian pencils and matrix polynomials", "sylvester"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol-rel", g.tol_rel, "Relative zero tolerance (default 1e-12 * n)");
  app.add_option("--tol-abs", g.tol_abs, "Absolute zero floor added to the threshold");
  app.add_option("--seed", g.seed, "Seed for randomized steps (normal rank, generators)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"auto", "json", "csv", "human"}));

  InertiaArgs inertia;
  auto* s_inertia = app.add_subcommand("inertia", "Inertia (n+, n0, n-) of a Hermitian matrix");
  s_inertia->add_option("file", inertia.file, "Matrix Market file");
  s_inertia->add_option("--poly", inertia.poly, "Polynomial manifest; evaluate at --at");
  s_inertia->add_option("--at", inertia.at, "Evaluation point for --poly");
  s_inertia->add_option("--method", inertia.method, "ldlt or eig")->check(CLI::IsMember({"ldlt", "eig"}));

  BoundsArgs bounds;
  auto* s_bounds = app.add_subcommand("bounds", "Bounds on the pencil inertia from the inertias of A and B");
  s_bounds->add_option("files", bounds.files, "Matrix Market files A B")->expected(0, 2);
  s_bounds->add_option("--ia", bounds.ia, "Inertia of A as n+,n0,n-");
  s_bounds->add_option("--ib", bounds.ib, "Inertia of B as n+,n0,n-");
  s_bounds->add_option("--rank", bounds.rank, "Normal rank r (integer) or 'auto'");
  s_bounds->add_flag("--sharp-real", bounds.sharp_real, "Also report the sharp finite-real lower bound");
  s_bounds->add_flag("--near-definite", bounds.near_definite, "Use the nearly-definite-B bounds");

  CountArgs count;
  auto* s_count = app.add_subcommand("count", "Eigenvalue counts in (a, b)");
  add_pencil_inputs(s_count, count.in);
  s_count->add_option("--a", count.a, "Left endpoint (may be -inf)")->required();
  s_count->add_option("--b", count.b, "Right endpoint (may be inf)")->required();
  s_count->add_flag("--parity", count.parity, "Report the admissible counts of the parity law");
  s_count->add_option("--k", count.k, "Override k (B has n - k positive eigenvalues)");
  s_count->add_flag("--geometric", count.geometric, "Report bounds valid for geometric multiplicities");
  s_count->add_flag("--hyperbolic", count.hyperbolic, "Exact count for a hyperbolic quadratic (--poly)");

  SliceArgs slice;
  auto* s_slice = app.add_subcommand("slice", "Counts on every sub-interval of a grid");
  add_pencil_inputs(s_slice, slice.in);
  s_slice->add_option("--grid", slice.grid, "lo:hi:count or x0,x1,...")->required();

  TraceArgs trace;
  auto* s_trace = app.add_subcommand("trace", "Sorted eigenvalues of F(t) along a grid (CSV)");
  add_pencil_inputs(s_trace, trace.in);
  s_trace->add_option("--matrix", trace.matrix, "Trace F(t) = M - tI");
  s_trace->add_option("--grid", trace.grid, "lo:hi:count or x0,x1,...")->required();
  s_trace->add_flag("--with-inertia", trace.with_inertia, "Append the inertia of F(t) to each row");

  WitnessArgs witness;
  auto* s_witness = app.add_subcommand("witness", "Write a pencil attaining a lower bound");
  s_witness->add_option("--ia", witness.ia, "Inertia of A as n+,n0,n-")->required();
  s_witness->add_option("--ib", witness.ib, "Inertia of B as n+,n0,n-")->required();
  s_witness->add_option("--target", witness.target,
                        "plus_lower, minus_lower, zero_lower, infinite_lower, complex_lower or real_lower");
  s_witness->add_flag("--sharp-real", witness.sharp_real, "Attain the sharp finite-real lower bound instead");
  s_witness->add_option("--out", witness.out, "Output prefix (writes PREFIX_A.mtx, PREFIX_B.mtx)");

  OracleArgs oracle;
  auto* s_oracle = app.add_subcommand("oracle", "Eigenvalues with multiplicities of a small regular problem");
  add_pencil_inputs(s_oracle, oracle.in);
  s_oracle->add_flag("--symmetric", oracle.symmetric_linearization,
                     "For a quadratic --poly, use the Hermitian linearization instead of the companion form");

  GenArgs gen;
  auto* s_gen = app.add_subcommand("gen", "Generate test matrices");
  s_gen->require_subcommand(1);
  auto* g_random = s_gen->add_subcommand("random", "X + X^T with X standard normal (uses --seed)");
  g_random->add_option("--n", gen.n, "Dimension")->required();
  g_random->add_option("--out", gen.out, "Output file")->required();
  auto* g_spring = s_gen->add_subcommand("spring", "Damped mass-spring quadratic (writes a manifest)");
  g_spring->add_option("--n", gen.n, "Dimension")->required();
  g_spring->add_option("--beta", gen.beta, "Damping scale");
  g_spring->add_option("--out", gen.out, "Output prefix")->required();
  auto* g_jordan = s_gen->add_subcommand("jordan", "Hermitian pair with one Jordan block");
  g_jordan->add_option("--n", gen.n, "Dimension")->required();
  g_jordan->add_option("--lambda", gen.lambda, "Eigenvalue");
  g_jordan->add_option("--out", gen.out, "Output prefix")->required();
  auto* g_shifted = s_gen->add_subcommand("shifted", "Shift a matrix to have exactly k negative eigenvalues");
  g_shifted->add_option("--in", gen.in, "Input Matrix Market file")->required();
  g_shifted->add_option("--k", gen.k, "Number of negative eigenvalues")->required();
  g_shifted->add_option("--out", gen.out, "Output file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s_inertia->parsed()) return cmd_inertia(inertia, g, out);
    if (s_bounds->parsed()) return cmd_bounds(bounds, g, out);
    if (s_count->parsed()) return cmd_count(count, g, out);
    if (s_slice->parsed()) return cmd_slice(slice, g, out);
    if (s_trace->parsed()) return cmd_trace(trace, g, out);
    if (s_witness->parsed()) return cmd_witness(witness, g, out);
    if (s_oracle->parsed()) return cmd_oracle(oracle, g, out);
    if (g_random->parsed()) return cmd_gen_random(gen, g, out);
    if (g_spring->parsed()) return cmd_gen_spring(gen, g, out);
    if (g_jordan->parsed()) return cmd_gen_jordan(gen, g, out);
    if (g_shifted->parsed()) return cmd_gen_shifted(gen, g, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularPencilError& e) {
    err << "singular pencil: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace sylvester::cli
