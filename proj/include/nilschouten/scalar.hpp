#pragma once

#include "nilschouten/rational.hpp"

namespace nilschouten {

/// Lifts exact rational constants into the scalar types the templated
/// algorithms run over (Polynomial, Surd, double).
template <class Scalar>
struct ScalarTraits {
  static Scalar from_rational(const Rational& q) { return Scalar(q); }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<double> {
  static double from_rational(const Rational& q) { return q.to_double(); }
  static bool is_zero(double x) { return x == 0.0; }
};

template <class Scalar>
Scalar lift(const Rational& q) {
  return ScalarTraits<Scalar>::from_rational(q);
}

template <class Scalar>
bool is_zero_scalar(const Scalar& x) {
  return ScalarTraits<Scalar>::is_zero(x);
}

}  // namespace nilschouten
