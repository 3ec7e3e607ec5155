#pragma once

#include "nilschouten/lie_algebra.hpp"

namespace nilschouten {

/// Ricci tensor of a nilpotent metric Lie algebra in its orthonormal basis:
///   ric(u,v) = -1/2 tr(ad_u ∘ ad*_v) - 1/4 tr(J_u ∘ J_v).
/// Nilpotency is the caller's responsibility.
template <class T>
Matrix<T> ricci_tensor_nilpotent(const StructureTensor<T>& c) {
  const std::size_t n = c.dim();
  std::vector<Matrix<T>> ad, j;
  for (std::size_t i = 0; i < n; ++i) {
    ad.push_back(ad_matrix(c, basis_vector<T>(n, i)));
    j.push_back(j_operator_matrix(c, basis_vector<T>(n, i)));
  }
  const T half = lift<T>(Rational(-1, 2));
  const T quarter = lift<T>(Rational(-1, 4));
  Matrix<T> ric(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      ric(a, b) = half * trace_of_product(ad[a], ad[b].transpose()) + quarter * trace_of_product(j[a], j[b]);
      ric(b, a) = ric(a, b);
    }
  return ric;
}

/// Four-term formula valid without the nilpotency assumption:
///   ric(u,v) = -1/2 B(u,v) - 1/2 tr(ad_u ∘ ad*_v) - 1/4 tr(J_u ∘ J_v)
///              - 1/2 (<ad_H u, v> + <ad_H v, u>).
/// The sign of the mean-curvature term follows the common convention; it
/// vanishes on nilpotent algebras, so nothing here can test it.
template <class T>
Matrix<T> ricci_tensor_general(const StructureTensor<T>& c) {
  const std::size_t n = c.dim();
  Matrix<T> ric = ricci_tensor_nilpotent(c);
  Matrix<T> killing = killing_form(c);
  Matrix<T> ad_h = ad_matrix(c, mean_curvature_vector(c));
  const T half = lift<T>(Rational(-1, 2));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      ric(a, b) = ric(a, b) + half * killing(a, b) + half * (ad_h(b, a) + ad_h(a, b));
  return ric;
}

struct CurvatureData {
  Matrix<Polynomial> ricci_tensor;
  Matrix<Polynomial> ricci_operator;
  Polynomial scalar;
};

Matrix<Polynomial> ricci_tensor_nilpotent(const MetricLieAlgebra& g);
Matrix<Polynomial> ricci_tensor_general(const MetricLieAlgebra& g);

/// The (1,1) form of the Ricci tensor. In an orthonormal basis
/// ric(u,v) = g(Ric u, v) makes it the same matrix as the (0,2) form.
Matrix<Polynomial> ricci_operator(const MetricLieAlgebra& g);

Polynomial scalar_curvature(const MetricLieAlgebra& g);

CurvatureData curvature(const MetricLieAlgebra& g, bool use_general_formula = false);

}  // namespace nilschouten
