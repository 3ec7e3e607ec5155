#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilschouten/errors.hpp"
#include "nilschouten/rational.hpp"
#include "nilschouten/scalar.hpp"

namespace nilschouten {

/// Product of named parameters raised to positive powers. Factors are kept
/// sorted by name and zero exponents are never stored, so structural
/// equality is monomial equality.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent(std::string_view name) const;

  /// The monomial with `name` removed.
  Monomial without(std::string_view name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// `alpha^2*beta`; the unit monomial prints as "1".
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, parameter names compared as byte strings.
/// Returns true when `a` is strictly greater than `b`, so ordered containers
/// keyed with it iterate from the leading term downwards.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients. The term map
/// never holds zero coefficients, which makes the representation canonical.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::string name);
  static Polynomial term(const Rational& coefficient, Monomial monomial);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  /// Leading term under grlex. Throws ZeroPolynomial on zero.
  const TermMap::value_type& leading_term() const;
  std::set<std::string> parameters() const;
  unsigned total_degree() const;
  unsigned degree_in(std::string_view name) const;

  /// Polynomial coefficient of `name^exponent`, i.e. p = sum_e coefficient(name, e) * name^e.
  Polynomial coefficient(std::string_view name, unsigned exponent) const;

  /// Substitutes the given parameters; others stay symbolic.
  Polynomial substitute(const std::map<std::string, Rational, std::less<>>& values) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Terms in descending grlex order joined by " + ", each rendered as
  /// `<coeff>*<name>^<exp>*...`. Unit coefficients are dropped (a -1 becomes
  /// a leading '-'), unit exponents are dropped, zero prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

using Assignment = std::map<std::string, Rational, std::less<>>;

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Evaluates `p` over any scalar ring that rationals lift into.
/// Throws MissingParameter if a parameter of `p` is unassigned.
template <class Scalar, class Map>
Scalar evaluate_as(const Polynomial& p, const Map& assignment) {
  Scalar total = lift<Scalar>(Rational(0));
  for (const auto& [monomial, coefficient] : p.terms()) {
    Scalar value = lift<Scalar>(coefficient);
    for (const auto& [name, exponent] : monomial.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw MissingParameter(name);
      for (unsigned e = 0; e < exponent; ++e) value = value * it->second;
    }
    total = total + value;
  }
  return total;
}

/// Exact rational evaluation.
Rational evaluate(const Polynomial& p, const Assignment& assignment);

/// Rescales `p` by the unique nonzero rational that leaves integer
/// coefficients with gcd 1 and a positive leading coefficient.
/// Throws ZeroPolynomial on zero input.
Polynomial normalize_sign(const Polynomial& p);

/// Parses the polynomial literal grammar: integers, rationals `a/b`,
/// identifiers, `^` with a non-negative integer exponent, `*`, `+`, `-` and
/// parentheses. Throws SyntaxError.
Polynomial parse_polynomial(std::string_view text);

/// True for non-empty ASCII identifiers `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view name);

}  // namespace nilschouten
