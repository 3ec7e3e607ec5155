#include "nilschouten/soliton.hpp"

#include <algorithm>
#include <cmath>

namespace nilschouten {

namespace {

Vector<Surd> flatten(const std::vector<PairResidual<Surd>>& residuals) {
  Vector<Surd> out;
  for (const auto& r : residuals) out.insert(out.end(), r.residual.begin(), r.residual.end());
  return out;
}

double norm(const Vector<Surd>& v) {
  double sum = 0;
  for (const auto& x : v) {
    double d = x.to_double();
    sum += d * d;
  }
  return std::sqrt(sum);
}

Surd dot(const Vector<Surd>& a, const Vector<Surd>& b) {
  Surd sum;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) sum += a[k] * b[k];
  return sum;
}

struct AffineSolution {
  bool feasible = false;
  Surd value;
  double residual_norm = 0;
};

/// Solves r0 + x r1 = 0 exactly; falls back to the least-squares x when the
/// system is inconsistent. With r1 = 0 the canonical choice is x = 0.
AffineSolution solve_affine(const Vector<Surd>& r0, const Vector<Surd>& r1) {
  AffineSolution sol;
  auto pivot = std::find_if(r1.begin(), r1.end(), [](const Surd& x) { return !x.is_zero(); });
  if (pivot == r1.end()) {
    sol.feasible = is_zero_vector(r0);
    sol.residual_norm = norm(r0);
    return sol;
  }
  auto k = static_cast<std::size_t>(pivot - r1.begin());
  Surd x = -(r0[k] / r1[k]);
  Vector<Surd> residual(r0.size());
  bool consistent = true;
  for (std::size_t m = 0; m < r0.size() && consistent; ++m) consistent = (r0[m] + x * r1[m]).is_zero();
  if (consistent) {
    sol.feasible = true;
    sol.value = x;
    return sol;
  }
  x = -(dot(r0, r1) / dot(r1, r1));
  for (std::size_t m = 0; m < r0.size(); ++m) residual[m] = r0[m] + x * r1[m];
  sol.value = x;
  sol.residual_norm = norm(residual);
  return sol;
}

void require_nilpotent(const StructureTensor<Surd>& c) {
  if (!nilpotency_step(c)) throw NotNilpotentAtSample("algebra is not nilpotent at the given sample");
}

Matrix<Surd> shifted(const Matrix<Surd>& ric, const Surd& mu) {
  Matrix<Surd> d = ric;
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= mu;
  return d;
}

Matrix<double> to_double(const Matrix<Surd>& m) {
  return m.map([](const Surd& x) { return x.to_double(); });
}

SolitonVerdict floating_oracle(const StructureTensor<Surd>& exact_c) {
  StructureTensor<double> c = exact_c.map([](const Surd& x) { return x.to_double(); });
  const std::size_t n = c.dim();
  Matrix<double> ric = ricci_tensor_nilpotent(c);
  Matrix<double> minus_id = Matrix<double>(n, n) - Matrix<double>::identity(n);
  std::vector<double> r0, r1;
  for (const auto& r : derivation_residual(c, ric)) r0.insert(r0.end(), r.residual.begin(), r.residual.end());
  for (const auto& r : derivation_residual(c, minus_id)) r1.insert(r1.end(), r.residual.begin(), r.residual.end());
  double r01 = 0, r11 = 0;
  for (std::size_t k = 0; k < r0.size(); ++k) {
    r01 += r0[k] * r1[k];
    r11 += r1[k] * r1[k];
  }
  SolitonVerdict v;
  v.mode = OracleMode::floating;
  v.mu = r11 == 0.0 ? 0.0 : -r01 / r11;
  double sq = 0;
  for (std::size_t k = 0; k < r0.size(); ++k) {
    double e = r0[k] + v.mu * r1[k];
    sq += e * e;
  }
  v.residual_norm = std::sqrt(sq);
  if (v.residual_norm <= kFloatFeasibilityTolerance) {
    v.status = SolitonStatus::feasible;
    Matrix<double> d = ric;
    for (std::size_t i = 0; i < n; ++i) d(i, i) -= v.mu;
    v.witness = d;
  }
  return v;
}

}  // namespace

std::vector<PairResidual<Polynomial>> derivation_residual(const MetricLieAlgebra& g, const Matrix<Polynomial>& d) {
  return derivation_residual(g.structure(), d);
}

CandidateDerivation candidate_derivation(const MetricLieAlgebra& g) {
  Matrix<Polynomial> d = ricci_operator(g);
  Polynomial shift =
      Polynomial::variable(std::string(kLambda0)) * trace(d) + Polynomial::variable(std::string(kSolitonConstant));
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= shift;
  return {std::move(d)};
}

bool ObstructionSystem::contains(const Polynomial& p) const {
  if (p.is_zero()) return false;
  Polynomial q = normalize_sign(p);
  return std::any_of(generators.begin(), generators.end(),
                     [&](const ObstructionGenerator& gen) { return gen.polynomial == q; });
}

ObstructionSystem obstruction_system(const MetricLieAlgebra& g) {
  CandidateDerivation d = candidate_derivation(g);
  ObstructionSystem system;
  for (const auto& pair : derivation_residual(g.structure(), d.matrix)) {
    for (std::size_t k = 0; k < pair.residual.size(); ++k) {
      if (pair.residual[k].is_zero()) continue;
      Polynomial q = normalize_sign(pair.residual[k]);
      GeneratorOrigin origin{pair.i, pair.j, k};
      auto it = std::find_if(system.generators.begin(), system.generators.end(),
                             [&](const ObstructionGenerator& gen) { return gen.polynomial == q; });
      if (it == system.generators.end())
        system.generators.push_back({std::move(q), {origin}});
      else
        it->origins.push_back(origin);
    }
  }
  return system;
}

bool symmetric_derivation_check(const Matrix<Polynomial>& d) { return d.is_symmetric(); }

SolitonVerdict numeric_soliton_oracle(const MetricLieAlgebra& g, const Sample& sample, OracleMode mode) {
  g.check_sample(sample);
  StructureTensor<Surd> c = g.evaluate(sample);
  require_nilpotent(c);
  if (mode == OracleMode::floating) return floating_oracle(c);

  const std::size_t n = c.dim();
  Matrix<Surd> ric = ricci_tensor_nilpotent(c);
  Matrix<Surd> minus_id = Matrix<Surd>(n, n) - Matrix<Surd>::identity(n);
  AffineSolution sol = solve_affine(flatten(derivation_residual(c, ric)), flatten(derivation_residual(c, minus_id)));

  SolitonVerdict v;
  v.mode = OracleMode::exact;
  v.exact_mu = sol.value;
  v.mu = sol.value.to_double();
  v.residual_norm = sol.residual_norm;
  if (sol.feasible) {
    v.status = SolitonStatus::feasible;
    v.exact_witness = shifted(ric, sol.value);
    v.witness = to_double(*v.exact_witness);
  }
  return v;
}

bool schouten_like_check(const MetricLieAlgebra& g, const Sample& sample, const Surd& mu) {
  g.check_sample(sample);
  StructureTensor<Surd> c = g.evaluate(sample);
  require_nilpotent(c);
  const std::size_t n = c.dim();
  Matrix<Surd> d = shifted(ricci_tensor_nilpotent(c), mu);

  // Tensor form, with ric evaluated from the symbolic Ricci tensor.
  Matrix<Polynomial> ric = ricci_tensor_nilpotent(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Surd expected = d(i, j) + (i == j ? mu : Surd());
      if (evaluate_as<Surd>(ric(i, j), sample) != expected) return false;
    }
  if (!d.is_symmetric()) return false;
  for (const auto& r : derivation_residual(c, d))
    if (!is_zero_vector(r.residual)) return false;
  return true;
}

SolitonVerdict schouten_soliton_check(const MetricLieAlgebra& g, const ObstructionSystem& system,
                                      const Sample& sample, const Rational& lambda0) {
  g.check_sample(sample);
  StructureTensor<Surd> c = g.evaluate(sample);
  require_nilpotent(c);

  const Assignment fixed{{std::string(kLambda0), lambda0}};
  const std::string c_name(kSolitonConstant);
  Vector<Surd> r0, r1;
  for (const auto& gen : system.generators) {
    Polynomial p = gen.polynomial.substitute(fixed);
    if (p.degree_in(c_name) > 1)
      throw Error("obstruction generator is not affine in c");
    r0.push_back(evaluate_as<Surd>(p.coefficient(c_name, 0), sample));
    r1.push_back(evaluate_as<Surd>(p.coefficient(c_name, 1), sample));
  }
  AffineSolution sol = solve_affine(r0, r1);

  Matrix<Surd> ric = ricci_tensor_nilpotent(c);
  Surd mu = Surd(lambda0) * trace(ric) + sol.value;
  SolitonVerdict v;
  v.mode = OracleMode::exact;
  v.exact_mu = mu;
  v.mu = mu.to_double();
  v.residual_norm = sol.residual_norm;
  if (sol.feasible) {
    v.status = SolitonStatus::feasible;
    v.exact_witness = shifted(ric, mu);
    v.witness = to_double(*v.exact_witness);
  }
  return v;
}

SolitonVerdict schouten_soliton_check(const MetricLieAlgebra& g, const Sample& sample, const Rational& lambda0) {
  return schouten_soliton_check(g, obstruction_system(g), sample, lambda0);
}

SolitonVerdict nilsoliton_check(const MetricLieAlgebra& g, const ObstructionSystem& system, const Sample& sample) {
  return schouten_soliton_check(g, system, sample, Rational(0));
}

SolitonVerdict nilsoliton_check(const MetricLieAlgebra& g, const Sample& sample) {
  return nilsoliton_check(g, obstruction_system(g), sample);
}

}  // namespace nilschouten
