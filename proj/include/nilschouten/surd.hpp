#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "nilschouten/rational.hpp"

namespace nilschouten {

/// Exact real number of the form sum_m q_m * sqrt(m), with rational q_m and
/// distinct squarefree positive integers m. Square roots of distinct
/// squarefree integers are linearly independent over the rationals, so the
/// coefficient map is canonical and equality is exact.
///
/// Sample points whose coordinates are irrational (sqrt(2)*gamma,
/// sqrt(3)/2*alpha) live here; every operation the soliton oracle needs
/// (ring operations, inverses, signs) stays exact.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
  Surd(long q) : Surd(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// The positive square root of a non-negative rational.
  static Surd sqrt(const Rational& q);

  /// Accepts a rational literal, `sqrt(q)`, `-sqrt(q)`, `r*sqrt(q)`, or a sum
  /// of those joined by `+` (the to_string form).
  static Surd parse(std::string_view text);

  /// Radicand -> coefficient; radicand 1 holds the rational part.
  const std::map<BigInt, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational value; throws Error if the number is irrational.
  Rational rational_value() const;

  /// -1, 0 or +1, decided exactly.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  Surd inverse() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs);
  Surd& operator*=(const Surd& rhs) { return *this = *this * rhs; }
  Surd& operator/=(const Surd& rhs) { return *this = *this * rhs.inverse(); }

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b) { return a * b.inverse(); }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  friend std::ostream& operator<<(std::ostream& os, const Surd& x);

 private:
  void add_term(const BigInt& radicand, const Rational& coefficient);

  std::map<BigInt, Rational> terms_;
};

int compare(const Surd& a, const Surd& b);

}  // namespace nilschouten
