#include <gtest/gtest.h>

#include <algorithm>

#include "nilschouten/algebra_file.hpp"
#include "nilschouten/catalog.hpp"
#include "nilschouten/soliton.hpp"
#include "nilschouten/verification.hpp"
#include "oracles.hpp"

namespace ns = nilschouten;
using ns::AlgebraId;
using ns::Matrix;
using ns::Polynomial;
using ns::Rational;
using ns::Sample;
using ns::Surd;

namespace {

const Polynomial a = Polynomial::variable("alpha");
const Polynomial lambda0 = Polynomial::variable("lambda0");
const Polynomial c = Polynomial::variable("c");

Matrix<Polynomial> diag(std::initializer_list<long> values) {
  Matrix<Polynomial> d(values.size(), values.size());
  std::size_t i = 0;
  for (long v : values) d(i, i) = Polynomial(v), ++i;
  return d;
}

Sample sample(std::string_view text) { return ns::parse_sample_assignments(text); }

oracle::Cube<double> numeric_cube(const ns::MetricLieAlgebra& g, const Sample& s) {
  return oracle::to_cube<double>(g.evaluate(s), [](const Surd& x) { return x.to_double(); });
}

}  // namespace

TEST(DerivationResidual, Examples) {
  auto abelian = ns::get_algebra(AlgebraId::abelian);
  Matrix<Polynomial> any(5, 5);
  any(0, 3) = a;
  any(2, 1) = Polynomial(7);
  for (const auto& r : derivation_residual(abelian, any)) EXPECT_TRUE(ns::is_zero_vector(r.residual));

  auto g = ns::get_algebra(AlgebraId::a3_1_plus_2a1);
  for (const auto& r : derivation_residual(g, diag({1, 1, 0, 0, 2}))) EXPECT_TRUE(ns::is_zero_vector(r.residual));

  for (const auto& r : derivation_residual(g, Matrix<Polynomial>::identity(5))) {
    if (r.i == 0 && r.j == 1) {
      EXPECT_EQ(r.residual, (ns::Vector<Polynomial>{Polynomial(0), Polynomial(0), Polynomial(0), Polynomial(0), -a}));
    } else {
      EXPECT_TRUE(ns::is_zero_vector(r.residual));
    }
  }
  EXPECT_THROW(derivation_residual(g, Matrix<Polynomial>::identity(4)), ns::DimensionMismatch);
}

TEST(ObstructionSystem, Examples) {
  EXPECT_TRUE(obstruction_system(ns::get_algebra(AlgebraId::abelian)).empty());

  auto a31 = obstruction_system(ns::get_algebra(AlgebraId::a3_1_plus_2a1));
  ASSERT_EQ(a31.size(), 1u);
  EXPECT_EQ(a31.generators[0].polynomial, normalize_sign(a * ((Polynomial(3) - lambda0) * a * a + Polynomial(2) * c)));
  EXPECT_TRUE(a31.contains(Polynomial(-5) * a * ((Polynomial(3) - lambda0) * a * a + Polynomial(2) * c)));

  auto a54 = obstruction_system(ns::get_algebra(AlgebraId::a5_4));
  EXPECT_EQ(a54.size(), 4u);
  EXPECT_TRUE(a54.contains(a * Polynomial::variable("beta") * Polynomial::variable("gamma")));
  EXPECT_EQ(obstruction_system(ns::get_algebra(AlgebraId::a5_2)).size(), 6u);
}

TEST(ObstructionSystem, GeneratorsAreNormalizedDistinctAndTraceable) {
  for (auto id : ns::all_algebra_ids()) {
    auto g = ns::get_algebra(id);
    auto system = obstruction_system(g);
    auto candidate = candidate_derivation(g).matrix;
    auto residuals = derivation_residual(g, candidate);
    for (std::size_t x = 0; x < system.size(); ++x) {
      const auto& gen = system.generators[x];
      EXPECT_EQ(normalize_sign(gen.polynomial), gen.polynomial);
      for (std::size_t y = x + 1; y < system.size(); ++y) EXPECT_NE(gen.polynomial, system.generators[y].polynomial);
      ASSERT_FALSE(gen.origins.empty());
      for (const auto& o : gen.origins) {
        auto it = std::find_if(residuals.begin(), residuals.end(),
                               [&](const auto& r) { return r.i == o.i && r.j == o.j; });
        ASSERT_NE(it, residuals.end());
        EXPECT_EQ(normalize_sign(it->residual[o.k]), gen.polynomial);
      }
    }
  }
}

TEST(SymmetricDerivation, Checks) {
  for (auto id : ns::all_algebra_ids())
    EXPECT_TRUE(symmetric_derivation_check(candidate_derivation(ns::get_algebra(id)).matrix));
  Matrix<Polynomial> lone(5, 5);
  lone(0, 1) = Polynomial(1);
  EXPECT_FALSE(symmetric_derivation_check(lone));
  EXPECT_TRUE(symmetric_derivation_check(Matrix<Polynomial>(5, 5)));
}

TEST(Oracle, Examples) {
  auto a54 = ns::get_algebra(AlgebraId::a5_4);
  auto on = numeric_soliton_oracle(a54, sample("alpha=0,beta=1,gamma=1"));
  EXPECT_TRUE(on.feasible());
  EXPECT_EQ(*on.exact_mu, Surd(-2));
  EXPECT_EQ(on.residual_norm, 0.0);
  EXPECT_FALSE(numeric_soliton_oracle(a54, sample("alpha=0,beta=1,gamma=2")).feasible());

  auto flat = numeric_soliton_oracle(ns::get_algebra(AlgebraId::abelian), {});
  EXPECT_TRUE(flat.feasible());
  EXPECT_EQ(*flat.exact_mu, Surd(0));
  EXPECT_TRUE(flat.exact_witness->is_zero());

  auto a56 = ns::get_algebra(AlgebraId::a5_6);
  EXPECT_FALSE(
      numeric_soliton_oracle(a56, sample("alpha=-1,beta=0,delta=0,gamma=1,epsilon=1,sigma=1")).feasible());
}

TEST(Oracle, Errors) {
  auto a54 = ns::get_algebra(AlgebraId::a5_4);
  EXPECT_THROW(numeric_soliton_oracle(a54, sample("alpha=0,beta=-1,gamma=1")), ns::ConstraintViolation);
  EXPECT_THROW(numeric_soliton_oracle(a54, sample("alpha=0,beta=1")), ns::MissingParameter);
  ns::StructureTensor<Polynomial> s(2);
  s.set_bracket(0, 1, {Polynomial(0), Polynomial(1)});
  EXPECT_THROW(numeric_soliton_oracle(ns::MetricLieAlgebra::create(s, {}), {}), ns::NotNilpotentAtSample);
}

TEST(Oracle, WitnessSatisfiesDerivationIdentityIndependently) {
  auto g = ns::get_algebra(AlgebraId::a5_2);
  Sample s = sample("alpha=sqrt(3),beta=0,gamma=2,delta=sqrt(3)");
  auto v = numeric_soliton_oracle(g, s);
  ASSERT_TRUE(v.feasible());
  std::vector<std::vector<double>> d(5, std::vector<double>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) d[i][j] = (*v.witness)(i, j);
  EXPECT_LT(oracle::derivation_defect(numeric_cube(g, s), d), 1e-12);
}

TEST(Oracle, FloatModeAgreesWithExactMode) {
  ns::SampleGenerator gen(99);
  for (auto id : ns::all_algebra_ids()) {
    for (int trial = 0; trial < 10; ++trial) {
      Sample s = trial % 2 ? gen.on_family(id) : gen.admissible(ns::get_algebra(id));
      auto exact = numeric_soliton_oracle(ns::get_algebra(id), s, ns::OracleMode::exact);
      auto approx = numeric_soliton_oracle(ns::get_algebra(id), s, ns::OracleMode::floating);
      EXPECT_EQ(exact.status, approx.status) << to_string(id) << " " << ns::format_sample(s);
      if (exact.feasible()) EXPECT_NEAR(exact.mu, approx.mu, 1e-9);
    }
  }
}

TEST(Oracle, AgreesWithBruteForceGrid) {
  // A5_4 with parameters in tenths: any feasible mu = -2*beta^2 lies on the grid.
  auto g = ns::get_algebra(AlgebraId::a5_4);
  oracle::Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    Rational beta(rng.integer(1, 15), 10);
    Rational gamma = trial % 2 ? beta : Rational(rng.integer(1, 15), 10);
    Rational alpha = trial % 3 ? Rational(0) : Rational(rng.integer(-5, 5), 10);
    Sample s{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
    auto hit = oracle::grid_search(numeric_cube(g, s), -500, 500, 100);
    EXPECT_EQ(numeric_soliton_oracle(g, s).feasible(), hit.defect < 1e-8) << ns::format_sample(s);
  }
}

TEST(SchoutenLike, Examples) {
  auto a51 = ns::get_algebra(AlgebraId::a5_1);
  Sample on = sample("alpha=1,beta=0,gamma=1");
  auto v = numeric_soliton_oracle(a51, on);
  ASSERT_TRUE(v.feasible());
  EXPECT_TRUE(schouten_like_check(a51, on, *v.exact_mu));
  EXPECT_FALSE(schouten_like_check(a51, on, *v.exact_mu + Surd(1)));
  Sample off = sample("alpha=1,beta=1,gamma=1");
  for (long mu = -10; mu <= 10; ++mu) EXPECT_FALSE(schouten_like_check(a51, off, Surd(Rational(mu, 2))));
  EXPECT_TRUE(schouten_like_check(ns::get_algebra(AlgebraId::abelian), {}, Surd(0)));
}

TEST(Nilsoliton, Examples) {
  auto a53 = ns::get_algebra(AlgebraId::a5_3);
  // Squared-parameter syntax: gamma^2 = 3 means gamma = sqrt(3).
  auto on = nilsoliton_check(a53, sample("alpha=2,beta=0,delta=0,gamma^2=3,epsilon^2=3"));
  EXPECT_TRUE(on.feasible());
  EXPECT_TRUE(nilsoliton_check(ns::get_algebra(AlgebraId::a4_1_plus_a1_1), sample("alpha=1,beta=1,gamma=0")).feasible());
  EXPECT_FALSE(nilsoliton_check(ns::get_algebra(AlgebraId::a4_1_plus_a1_1), sample("alpha=1,beta=1,gamma=1")).feasible());
}

TEST(Nilsoliton, MultiplierMatchesOracleAndVanishesSystem) {
  ns::SampleGenerator gen(7);
  for (auto id : ns::all_algebra_ids()) {
    auto g = ns::get_algebra(id);
    auto system = obstruction_system(g);
    for (int trial = 0; trial < 10; ++trial) {
      Sample s = gen.on_family(id);
      auto oracle_v = numeric_soliton_oracle(g, s);
      auto nil = nilsoliton_check(g, system, s);
      ASSERT_EQ(oracle_v.status, nil.status) << to_string(id);
      if (!oracle_v.feasible()) continue;
      EXPECT_EQ(*oracle_v.exact_mu, *nil.exact_mu);
      // With lambda0 = 0 the constant c is the multiplier itself.
      Sample at = s;
      at[std::string(ns::kLambda0)] = Surd(0);
      at[std::string(ns::kSolitonConstant)] = *oracle_v.exact_mu;
      for (const auto& gen_poly : system.generators)
        EXPECT_TRUE(ns::evaluate_as<Surd>(gen_poly.polynomial, at).is_zero()) << to_string(id);
    }
  }
}

TEST(SchoutenSoliton, AnyLambdaGivesSameStatus) {
  ns::SampleGenerator gen(8);
  for (auto id : ns::all_algebra_ids()) {
    auto g = ns::get_algebra(id);
    auto system = obstruction_system(g);
    for (int trial = 0; trial < 6; ++trial) {
      Sample s = trial % 2 ? gen.on_family(id) : gen.admissible(g);
      auto base = numeric_soliton_oracle(g, s);
      for (Rational l : {Rational(-1), Rational(1, 2), Rational(3)}) {
        auto v = schouten_soliton_check(g, system, s, l);
        EXPECT_EQ(v.status, base.status) << to_string(id);
        if (base.feasible()) EXPECT_EQ(*v.exact_mu, *base.exact_mu);
      }
    }
  }
}

TEST(ExceptionalFamily, A5_6AdmitsIsolatedSolitons) {
  // beta = delta = 0, gamma^2 = alpha^2, 3 epsilon^2 = 3 sigma^2 = 2 alpha^2.
  auto g = ns::get_algebra(AlgebraId::a5_6);
  Sample s = sample("alpha=-sqrt(3),beta=0,gamma=sqrt(3),delta=0,epsilon=sqrt(2),sigma=sqrt(2)");
  auto entry = ns::classification_entry(AlgebraId::a5_6);
  for (const auto& p : entry.exceptional_family) EXPECT_TRUE(ns::evaluate_as<Surd>(p, s).is_zero());
  auto v = numeric_soliton_oracle(g, s);
  ASSERT_TRUE(v.feasible());
  EXPECT_EQ(*v.exact_mu, Surd(Rational(-11, 2)));
  EXPECT_TRUE(nilsoliton_check(g, s).feasible());
  // Independent double-precision confirmation of the witness.
  auto cube = numeric_cube(g, s);
  auto hit = oracle::grid_search(cube, -1100, -1100, 200);
  EXPECT_LT(hit.defect, 1e-12);
}
