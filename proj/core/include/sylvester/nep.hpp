#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

/// F(t) at real t. The evaluator must return Hermitian matrices of size n.
struct HermitianFunctionSlice {
  std::function<HermitianMatrix(double)> evaluate;
  Index n = 0;
  std::string description;

  HermitianMatrix operator()(double t) const;
};

HermitianFunctionSlice polynomial_slice(const MatrixPolynomial& p);
/// F(t) = A - tB.
HermitianFunctionSlice pencil_slice(const Pencil& p);

/// sum t^i A_i by Horner; t = +-inf returns the leading coefficient.
HermitianMatrix poly_eval(const MatrixPolynomial& p, double t);

struct NepLowerResult {
  int lower = 0;
  Inertia3 at_a;
  Inertia3 at_b;
  // max rank of F over the evaluated points
  int rank_baseline = 0;
  std::string caveat;
};

inline const std::string kRankCaveat =
    "rank baseline is the largest rank of F observed at the evaluated points; the true normal rank of F "
    "may be larger, in which case the endpoints could be eigenvalues";

/// |n+(F(a)) - n+(F(b))|, a lower bound on the number of real eigenvalues in
/// (a, b). Extra sample points are only used to establish the rank baseline
/// when an endpoint is singular. Throws InputError if an endpoint is singular
/// beyond that baseline.
NepLowerResult nep_interval_lower(const HermitianFunctionSlice& f, double a, double b, const Tolerance& tol = {},
                                  const std::vector<double>& samples = {});

struct DefiniteCheck {
  bool definite = false;
  // +1 if every (-1)^i P(mu_i) is positive definite, -1 if negative definite
  int sign = 0;
  std::optional<int> not_definite_at;
  std::vector<Inertia3> inertias;  // of P(mu_i)
  // eigenvalues in each (mu_i, mu_{i+1}) when definite (n each)
  std::vector<int> per_interval_count;
  // sign of P(mu_i): alternates when definite
  std::vector<int> sign_characteristic;
};

/// Checks that (-1)^i P(mu_i), i = 0..k, are all definite with one sign.
DefiniteCheck definite_poly_check(const MatrixPolynomial& p, const std::vector<double>& mus,
                                  const Tolerance& tol = {});

/// M = 1 + (||A_1||_2 + ||A_0||_2) / min |eig(A_2)|; P(+-M) < 0 when A_2 < 0.
double hyperbolic_radius(const MatrixPolynomial& p);

/// Exact eigenvalue count in (a, b) for a hyperbolic quadratic with
/// A_2 < 0 < A_0 (a, b may be infinite). Hyperbolicity is checked at
/// -M, 0, M. Throws InputError when the checks fail.
int hyperbolic_quadratic_count(const MatrixPolynomial& p, double a, double b, const Tolerance& tol = {});

struct EndpointLower {
  int positive_lower = 0;
  int negative_lower = 0;
};

/// Positive: |n+(A_0) - n+(A_k)|. Negative: |n+(A_0) - n+(A_k)| for even k,
/// |n+(A_0) - n-(A_k)| for odd k.
EndpointLower poly_endpoint_lower(const MatrixPolynomial& p, const Tolerance& tol = {});

struct Trace {
  std::vector<double> grid;
  std::vector<std::vector<double>> curves;  // curves[i] = ascending eigenvalues of F(grid[i])
};

Trace trace_eigenfunctions(const HermitianFunctionSlice& f, const std::vector<double>& grid);

/// Header t,lambda_1,...,lambda_n then one row per grid point, %.17g.
std::string trace_to_csv(const Trace& t);

}  // namespace sylvester
