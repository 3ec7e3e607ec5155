#pragma once

#include <optional>
#include <vector>

#include "nilschouten/curvature.hpp"

namespace nilschouten {

/// D[v_i,v_j] - [D v_i, v_j] - [v_i, D v_j] for one basis pair (0-based, i<j).
template <class T>
struct PairResidual {
  std::size_t i, j;
  Vector<T> residual;
};

/// Derivation defect of D on every basis pair; D is a derivation iff every
/// residual vanishes.
template <class T>
std::vector<PairResidual<T>> derivation_residual(const StructureTensor<T>& c, const Matrix<T>& d) {
  const std::size_t n = c.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation candidate must be n x n");
  std::vector<PairResidual<T>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<T> lhs = d * c.bracket_of_basis(i, j);
      Vector<T> first = bracket(c, d.column(i), basis_vector<T>(n, j));
      Vector<T> second = bracket(c, basis_vector<T>(n, i), d.column(j));
      for (std::size_t k = 0; k < n; ++k) lhs[k] = lhs[k] - first[k] - second[k];
      out.push_back({i, j, std::move(lhs)});
    }
  return out;
}

std::vector<PairResidual<Polynomial>> derivation_residual(const MetricLieAlgebra& g, const Matrix<Polynomial>& d);

/// D = Ric - (lambda0 * s + c) Id, over the parameter ring extended by the
/// symbols `lambda0` and `c`.
struct CandidateDerivation {
  Matrix<Polynomial> matrix;
};

CandidateDerivation candidate_derivation(const MetricLieAlgebra& g);

/// Where a generator came from: basis pair (i,j) and output coordinate k, 0-based.
struct GeneratorOrigin {
  std::size_t i, j, k;
  friend bool operator==(const GeneratorOrigin&, const GeneratorOrigin&) = default;
};

struct ObstructionGenerator {
  Polynomial polynomial;  // sign-normalized, nonzero
  std::vector<GeneratorOrigin> origins;
};

/// Polynomials in the structure parameters, `lambda0` and `c` whose common
/// vanishing is equivalent to the candidate derivation being a derivation.
struct ObstructionSystem {
  std::vector<ObstructionGenerator> generators;

  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
  bool contains(const Polynomial& p) const;
};

ObstructionSystem obstruction_system(const MetricLieAlgebra& g);

/// True iff D is symmetric with respect to the (orthonormal) metric.
bool symmetric_derivation_check(const Matrix<Polynomial>& d);

enum class OracleMode { exact, floating };
enum class SolitonStatus { feasible, infeasible };

inline constexpr double kFloatFeasibilityTolerance = 1e-10;

struct SolitonVerdict {
  SolitonStatus status = SolitonStatus::infeasible;
  OracleMode mode = OracleMode::exact;
  /// Exact-mode multiplier: the witness when feasible, otherwise the
  /// least-squares value. Empty in floating mode.
  std::optional<Surd> exact_mu;
  /// Same multiplier as a double (both modes).
  double mu = 0.0;
  /// Ric(sample) - mu Id; set only when feasible.
  std::optional<Matrix<Surd>> exact_witness;
  std::optional<Matrix<double>> witness;
  double residual_norm = 0.0;

  bool feasible() const { return status == SolitonStatus::feasible; }
};

/// Decides whether some real mu makes Ric(sample) - mu Id a derivation. The
/// derivation residual of Ric - mu Id is r0 + mu r1; exact mode solves that
/// overdetermined system in exact arithmetic, floating mode by least squares
/// with tolerance kFloatFeasibilityTolerance on the residual norm.
/// Throws MissingParameter, ConstraintViolation or NotNilpotentAtSample.
SolitonVerdict numeric_soliton_oracle(const MetricLieAlgebra& g, const Sample& sample,
                                      OracleMode mode = OracleMode::exact);

/// Checks the tensor form ric(v_i, v_j) = mu δ_ij + g(D v_i, v_j) with
/// D := Ric - mu Id, plus that D is a symmetric derivation at the sample.
bool schouten_like_check(const MetricLieAlgebra& g, const Sample& sample, const Surd& mu);

/// Algebraic Schouten soliton test for a fixed lambda0, decided from the
/// obstruction system (which is affine in c). The reported mu is
/// lambda0 * s + c.
SolitonVerdict schouten_soliton_check(const MetricLieAlgebra& g, const ObstructionSystem& system,
                                      const Sample& sample, const Rational& lambda0);
SolitonVerdict schouten_soliton_check(const MetricLieAlgebra& g, const Sample& sample, const Rational& lambda0);

/// Nilsoliton test: the lambda0 = 0 case of schouten_soliton_check.
SolitonVerdict nilsoliton_check(const MetricLieAlgebra& g, const ObstructionSystem& system, const Sample& sample);
SolitonVerdict nilsoliton_check(const MetricLieAlgebra& g, const Sample& sample);

}  // namespace nilschouten
