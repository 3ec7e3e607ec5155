#include "nilschouten/curvature.hpp"

namespace nilschouten {

Matrix<Polynomial> ricci_tensor_nilpotent(const MetricLieAlgebra& g) { return ricci_tensor_nilpotent(g.structure()); }

Matrix<Polynomial> ricci_tensor_general(const MetricLieAlgebra& g) { return ricci_tensor_general(g.structure()); }

Matrix<Polynomial> ricci_operator(const MetricLieAlgebra& g) { return ricci_tensor_nilpotent(g); }

Polynomial scalar_curvature(const MetricLieAlgebra& g) { return trace(ricci_operator(g)); }

CurvatureData curvature(const MetricLieAlgebra& g, bool use_general_formula) {
  CurvatureData data;
  data.ricci_tensor = use_general_formula ? ricci_tensor_general(g) : ricci_tensor_nilpotent(g);
  data.ricci_operator = data.ricci_tensor;
  data.scalar = trace(data.ricci_operator);
  return data;
}

}  // namespace nilschouten
