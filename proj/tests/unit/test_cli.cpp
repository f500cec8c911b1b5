#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "app.hpp"
#include "families.hpp"
#include "parsing.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/serialize.hpp"

using namespace sylvester;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sylvester");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sylvester_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const HermitianMatrix& m) {
    const auto path = (dir_ / name).string();
    save_matrix_market(path, m);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

HermitianMatrix diag(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return HermitianMatrix(RealMatrix(v.asDiagonal()));
}

}  // namespace

TEST(CliParsing, Inertia) {
  EXPECT_EQ(cli::parse_inertia("3,0,3"), (Inertia3{3, 0, 3}));
  EXPECT_EQ(cli::parse_inertia(" 5, 0 ,1"), (Inertia3{5, 0, 1}));
  EXPECT_THROW(cli::parse_inertia("3,0"), std::invalid_argument);
  EXPECT_THROW(cli::parse_inertia("3,-1,2"), std::invalid_argument);
}

TEST(CliParsing, RealsAndGrids) {
  EXPECT_EQ(cli::parse_real("inf"), INFINITY);
  EXPECT_EQ(cli::parse_real("+inf"), INFINITY);
  EXPECT_EQ(cli::parse_real("-inf"), -INFINITY);
  EXPECT_EQ(cli::parse_real("-0.5"), -0.5);
  EXPECT_THROW(cli::parse_real("x"), std::invalid_argument);
  EXPECT_EQ(cli::parse_grid("0:1:3"), (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(cli::parse_grid("-13,-4"), (std::vector<double>{-13, -4}));
  EXPECT_THROW(cli::parse_grid("0:1"), std::invalid_argument);
}

TEST_F(CliTest, InertiaOfFiles) {
  const auto r = run({"inertia", write("d.mtx", diag({1, -1}))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n_plus\":1,\"n_zero\":0,\"n_minus\":1}\n");
  EXPECT_EQ(run({"inertia", write("z.mtx", HermitianMatrix::zero(3))}).out, "{\"n_plus\":0,\"n_zero\":3,\"n_minus\":0}\n");
  EXPECT_EQ(run({"inertia", "--method", "eig", path("d.mtx")}).out, r.out);
}

TEST_F(CliTest, InertiaOfSpringAtPoint) {
  ASSERT_EQ(run({"gen", "spring", "--n", "7", "--beta", "0.3", "--out", path("sp")}).code, 0);
  const auto r = run({"inertia", "--poly", path("sp.json"), "--at", "-13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).get<Inertia3>(), (Inertia3{7, 0, 0}));
  EXPECT_EQ(Json::parse(run({"inertia", "--poly", path("sp.json"), "--at", "-4"}).out).get<Inertia3>(),
            (Inertia3{3, 0, 4}));
}

TEST_F(CliTest, BoundsFromInertias) {
  const auto r = run({"bounds", "--ia", "3,0,3", "--ib", "5,0,1", "--sharp-real"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("n_minus").at("lower"), 2);
  EXPECT_EQ(j.at("real_lower_sharp"), 4);
  const auto h = run({"--format", "human", "bounds", "--ia", "3,0,3", "--ib", "5,0,1"});
  EXPECT_NE(h.out.find("N₊₊ = 8"), std::string::npos);
  EXPECT_NE(h.out.find("δ = 0"), std::string::npos);
}

TEST_F(CliTest, BoundsRankTightensSingularPencil) {
  RealMatrix a(3, 3), b(3, 3);
  a << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  b << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  const auto fa = write("a.mtx", HermitianMatrix(a));
  const auto fb = write("b.mtx", HermitianMatrix(b));
  const auto plain = Json::parse(run({"bounds", fa, fb}).out);
  const auto ranked = Json::parse(run({"bounds", fa, fb, "--rank", "2"}).out);
  const auto autor = Json::parse(run({"bounds", fa, fb, "--rank", "auto"}).out);
  EXPECT_LT(ranked.at("n_plus").at("upper").get<int>(), plain.at("n_plus").at("upper").get<int>());
  EXPECT_LT(ranked.at("n_minus").at("upper").get<int>(), plain.at("n_minus").at("upper").get<int>());
  EXPECT_EQ(ranked.at("rank_used"), 2);
  EXPECT_EQ(autor.at("rank_used"), 2);
  const auto report = ranked.get<BoundsReport>();
  EXPECT_TRUE(report.contains(Inertia5{}));
}

TEST_F(CliTest, BoundsDefiniteNote) {
  fam::Rng rng(71);
  const auto fa = write("a.mtx", fam::random_shifted(5, rng));
  const auto fb = write("b.mtx", fam::random_with_inertia({5, 0, 0}, rng));
  const auto j = Json::parse(run({"bounds", fa, fb}).out);
  EXPECT_EQ(j.at("n_plus").at("lower"), j.at("n_plus").at("upper"));
  bool noted = false;
  for (const auto& n : j.at("notes")) noted = noted || n.get<std::string>().find("definite: exact") == 0;
  EXPECT_TRUE(noted);
}

TEST_F(CliTest, CountUsageErrors) {
  const auto fa = write("a.mtx", diag({1, 2}));
  const auto fb = write("b.mtx", diag({1, 1}));
  EXPECT_EQ(run({"count", fa, fb, "--a", "1", "--b", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", fa, fb, "--a", "2", "--b", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", fa, fb}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", fa, path("missing.mtx"), "--a", "0", "--b", "1"}).code, cli::kInput);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, CountParityOnUpperHalfLine) {
  fam::Rng rng(72);
  const auto b = fam::random_with_inertia({6, 0, 1}, rng);
  const auto a = fam::random_with_inertia({6, 0, 1}, rng) - 0.5 * b;
  const auto fa = write("a.mtx", a);
  const auto fb = write("b.mtx", b);
  const auto r = run({"count", fa, fb, "--a", "-0.5", "--b", "inf", "--parity"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("parity").at("counts"), Json::array({5, 7}));
  EXPECT_EQ(j.at("b"), "inf");
  EXPECT_EQ(j.get<IntervalReport>().count_open_interval.lower, 5);
}

TEST_F(CliTest, CountOnPolynomial) {
  ASSERT_EQ(run({"gen", "spring", "--n", "7", "--out", path("sp")}).code, 0);
  const auto j = Json::parse(run({"count", "--poly", path("sp.json"), "--a", "-13", "--b", "-4"}).out);
  EXPECT_EQ(j.at("lower"), 4);
  EXPECT_EQ(run({"count", "--poly", path("sp.json"), "--a", "-13", "--b", "-4", "--hyperbolic"}).code, cli::kInput);
}

TEST_F(CliTest, SliceSpringLinearization) {
  const auto lin = quadratic_symmetric_linearization(gen_spring_quadratic(7, 0.3));
  const auto fa = write("a.mtx", lin.a());
  const auto fb = write("b.mtx", lin.b());
  const auto r = run({"slice", fa, fb, "--grid", "-13,-4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "a,b,lower,upper,parity_set");
  EXPECT_NE(r.out.find("\n-13,-4,4,"), std::string::npos);
  const auto wide = run({"slice", fa, fb, "--grid", "-15,0"});
  EXPECT_NE(wide.out.find("\n-15,0,0,"), std::string::npos);
}

TEST_F(CliTest, TraceShapes) {
  const auto fa = write("a.mtx", gen_random_symmetric(4, 2));
  const auto fb = write("b.mtx", HermitianMatrix::identity(4));
  const auto r = run({"trace", fa, fb, "--grid", "0:1:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
  }
  EXPECT_EQ(rows, 3);

  ASSERT_EQ(run({"gen", "jordan", "--n", "6", "--out", path("j")}).code, 0);
  const auto jt = run({"trace", path("j_A.mtx"), path("j_B.mtx"), "--grid", "-2,0.5,3", "--with-inertia"});
  ASSERT_EQ(jt.code, 0) << jt.err;
  std::istringstream jl(jt.out);
  std::getline(jl, line);
  EXPECT_NE(line.find(",n_plus,n_zero,n_minus"), std::string::npos);
  while (std::getline(jl, line)) EXPECT_EQ(line.substr(line.size() - 6), ",3,0,3");
}

TEST_F(CliTest, WitnessThenOracle) {
  const auto w = run({"witness", "--ia", "3,0,3", "--ib", "5,0,1", "--target", "minus_lower", "--out", path("w")});
  ASSERT_EQ(w.code, 0) << w.err;
  const auto r = run({"oracle", path("w_A.mtx"), path("w_B.mtx")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = Json::parse(r.out).get<OracleReport>();
  EXPECT_EQ(rep.inertia.n_minus, 2);
  EXPECT_EQ(run({"witness", "--ia", "1,2,0", "--ib", "1,2,0", "--target", "plus_lower", "--out", path("t")}).code,
            cli::kUsage);
}

TEST_F(CliTest, OracleRefusesSingularPencil) {
  RealMatrix a(3, 3), b(3, 3);
  a << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  b << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  const auto r = run({"oracle", write("a.mtx", HermitianMatrix(a)), write("b.mtx", HermitianMatrix(b))});
  EXPECT_EQ(r.code, cli::kInput);
  EXPECT_NE(r.err.find("bounds --rank"), std::string::npos);
}

TEST_F(CliTest, GenSpringLargeWritesTriple) {
  const auto r = run({"gen", "spring", "--n", "1000", "--beta", "0.3", "--out", path("big")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* suffix : {"_A0.mtx", "_A1.mtx", "_A2.mtx", ".json"}) {
    EXPECT_TRUE(fs::exists(path(std::string("big") + suffix))) << suffix;
  }
  const auto p = cli::load_polynomial(path("big.json"));
  EXPECT_EQ(p.size(), 1000);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(1), gen_spring_quadratic(1000, 0.3).coeff(1));
}

TEST_F(CliTest, GenRandomAndShifted) {
  ASSERT_EQ(run({"--seed", "5", "gen", "random", "--n", "6", "--out", path("r.mtx")}).code, 0);
  EXPECT_EQ(load_matrix_market(path("r.mtx")), gen_random_symmetric(6, 5));
  ASSERT_EQ(run({"gen", "shifted", "--in", path("r.mtx"), "--k", "2", "--out", path("s.mtx")}).code, 0);
  EXPECT_EQ(ldlt_inertia(load_matrix_market(path("s.mtx"))), (Inertia3{4, 0, 2}));
}

TEST_F(CliTest, DeterministicOutput) {
  fam::Rng rng(73);
  const auto fa = write("a.mtx", fam::random_shifted(6, rng));
  const auto fb = write("b.mtx", fam::random_shifted(6, rng));
  for (std::vector<std::string> args :
       {std::vector<std::string>{"oracle", fa, fb}, {"count", fa, fb, "--a", "-1", "--b", "1", "--parity"},
        {"slice", fa, fb, "--grid", "-2:2:5"}, {"bounds", fa, fb, "--rank", "auto"}}) {
    const auto first = run(args);
    const auto second = run(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
  }
}

TEST_F(CliTest, JsonOutputsRoundTrip) {
  fam::Rng rng(74);
  const auto fa = write("a.mtx", fam::random_shifted(5, rng));
  const auto fb = write("b.mtx", fam::random_shifted(5, rng));
  const auto bounds = Json::parse(run({"bounds", fa, fb}).out);
  EXPECT_EQ(Json(bounds.get<BoundsReport>()), bounds);
  const auto count = Json::parse(run({"count", fa, fb, "--a", "-1", "--b", "1"}).out);
  EXPECT_EQ(Json(count.get<IntervalReport>()), count);
  const auto oracle = Json::parse(run({"oracle", fa, fb}).out);
  EXPECT_EQ(Json(oracle.get<OracleReport>()), oracle);
}
