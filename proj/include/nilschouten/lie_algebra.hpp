#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilschouten/matrix.hpp"
#include "nilschouten/polynomial.hpp"
#include "nilschouten/surd.hpp"

namespace nilschouten {

enum class SignConstraint { positive, negative, nonzero, free };

std::string_view to_string(SignConstraint s);
/// Parses "positive" | "negative" | "nonzero" | "free".
std::optional<SignConstraint> parse_sign_constraint(std::string_view text);
bool satisfies(SignConstraint s, int sign);

struct ParameterConstraint {
  std::string name;
  SignConstraint relation = SignConstraint::free;
  friend bool operator==(const ParameterConstraint&, const ParameterConstraint&) = default;
};

/// A point in parameter space. Values are exact reals (rationals or sums of
/// rational multiples of square roots).
using Sample = std::map<std::string, Surd, std::less<>>;

Sample to_sample(const Assignment& assignment);

/// Structure constants c(i,j,k) with [v_i, v_j] = sum_k c(i,j,k) v_k.
/// Indices are 0-based. Antisymmetry in (i,j) holds by construction: the
/// only mutator writes both c(i,j,.) and c(j,i,.).
template <class T>
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim, lift<T>(0)) {}

  std::size_t dim() const { return dim_; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [v_i, v_j] = sum_k coords[k] v_k (and [v_j, v_i] = -that). Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vector<T>& coords) {
    if (i >= dim_ || j >= dim_ || coords.size() != dim_) throw DimensionMismatch("bracket index out of range");
    if (i == j) throw Error("[v_i, v_i] is zero by antisymmetry");
    for (std::size_t k = 0; k < dim_; ++k) {
      at(i, j, k) = coords[k];
      at(j, i, k) = lift<T>(0) - coords[k];
    }
  }

  Vector<T> bracket_of_basis(std::size_t i, std::size_t j) const {
    Vector<T> out;
    out.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out.push_back((*this)(i, j, k));
    return out;
  }

  bool is_abelian() const {
    for (const auto& x : data_)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> StructureTensor<decltype(f(std::declval<const T&>()))> {
    StructureTensor<decltype(f(std::declval<const T&>()))> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        Vector<decltype(f(std::declval<const T&>()))> coords;
        for (std::size_t k = 0; k < dim_; ++k) coords.push_back(f((*this)(i, j, k)));
        out.set_bracket(i, j, coords);
      }
    return out;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  T& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

// ---------------------------------------------------------------------------
// Bracket-derived endomorphisms over any scalar ring. Matrices are written in
// the orthonormal basis v_1..v_n, so adjoints are transposes.

template <class T>
Vector<T> bracket(const StructureTensor<T>& c, const Vector<T>& u, const Vector<T>& v) {
  const std::size_t n = c.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("vector length differs from algebra dimension");
  Vector<T> out(n, lift<T>(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_scalar(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || is_zero_scalar(v[j])) continue;
      T uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero_scalar(c(i, j, k))) out[k] = out[k] + uv * c(i, j, k);
    }
  }
  return out;
}

/// Column j holds the coordinates of [u, v_j].
template <class T>
Matrix<T> ad_matrix(const StructureTensor<T>& c, const Vector<T>& u) {
  const std::size_t n = c.dim();
  if (u.size() != n) throw DimensionMismatch("vector length differs from algebra dimension");
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_scalar(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero_scalar(c(i, j, k))) m(k, j) = m(k, j) + u[i] * c(i, j, k);
  }
  return m;
}

template <class T>
Matrix<T> ad_star_matrix(const StructureTensor<T>& c, const Vector<T>& v) {
  return ad_matrix(c, v).transpose();
}

/// J_u v = ad*_v u; column j is ad*_{v_j} u.
template <class T>
Matrix<T> j_operator_matrix(const StructureTensor<T>& c, const Vector<T>& u) {
  const std::size_t n = c.dim();
  if (u.size() != n) throw DimensionMismatch("vector length differs from algebra dimension");
  Matrix<T> m(n, n);
  // (ad*_{v_j} u)_k = sum_l (ad_{v_j})_{lk} u_l = sum_l c(j,k,l) u_l
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (!is_zero_scalar(u[l]) && !is_zero_scalar(c(j, k, l))) m(k, j) = m(k, j) + c(j, k, l) * u[l];
  return m;
}

/// B(v_i, v_j) = tr(ad_{v_i} ∘ ad_{v_j}).
template <class T>
Matrix<T> killing_form(const StructureTensor<T>& c) {
  const std::size_t n = c.dim();
  std::vector<Matrix<T>> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(ad_matrix(c, basis_vector<T>(n, i)));
  Matrix<T> b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = trace_of_product(ad[i], ad[j]);
  return b;
}

/// <H, v_i> = tr(ad_{v_i}).
template <class T>
Vector<T> mean_curvature_vector(const StructureTensor<T>& c) {
  const std::size_t n = c.dim();
  Vector<T> h;
  for (std::size_t i = 0; i < n; ++i) h.push_back(trace(ad_matrix(c, basis_vector<T>(n, i))));
  return h;
}

// ---------------------------------------------------------------------------

/// One failed Jacobi triple (0-based, i<j<k) with its nonzero Jacobiator.
struct JacobiFailure {
  std::size_t i, j, k;
  Vector<Polynomial> residual;
};

/// [[v_i,v_j],v_k] + [[v_j,v_k],v_i] + [[v_k,v_i],v_j] for every i<j<k.
std::vector<JacobiFailure> jacobi_check(const StructureTensor<Polynomial>& c);

class JacobiViolation : public Error {
 public:
  explicit JacobiViolation(std::vector<JacobiFailure> failures);
  const std::vector<JacobiFailure>& failures() const { return failures_; }

 private:
  std::vector<JacobiFailure> failures_;
};

/// Lie algebra with polynomial structure constants in a basis declared
/// orthonormal. Immutable once created; creation enforces the Jacobi identity.
class MetricLieAlgebra {
 public:
  /// Throws JacobiViolation, or Error when a parameter is undeclared, declared
  /// twice, or uses a reserved name (`lambda0`, `c`).
  static MetricLieAlgebra create(StructureTensor<Polynomial> structure, std::vector<ParameterConstraint> constraints,
                                 std::string label = {});

  std::size_t dim() const { return structure_.dim(); }
  const StructureTensor<Polynomial>& structure() const { return structure_; }
  const std::vector<ParameterConstraint>& constraints() const { return constraints_; }
  const std::string& label() const { return label_; }
  std::vector<std::string> parameters() const;
  std::optional<SignConstraint> constraint_of(std::string_view name) const;

  /// Throws MissingParameter or ConstraintViolation.
  void check_sample(const Sample& sample) const;
  StructureTensor<Surd> evaluate(const Sample& sample) const;

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.structure_ == b.structure_ && a.constraints_ == b.constraints_;
  }

 private:
  MetricLieAlgebra() = default;

  StructureTensor<Polynomial> structure_;
  std::vector<ParameterConstraint> constraints_;
  std::string label_;
};

inline constexpr std::string_view kLambda0 = "lambda0";
inline constexpr std::string_view kSolitonConstant = "c";

Vector<Polynomial> bracket(const MetricLieAlgebra& g, const Vector<Polynomial>& u, const Vector<Polynomial>& v);
Matrix<Polynomial> ad_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& u);
Matrix<Polynomial> ad_star_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& v);
Matrix<Polynomial> j_operator_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& u);
Matrix<Polynomial> killing_form(const MetricLieAlgebra& g);
Vector<Polynomial> mean_curvature_vector(const MetricLieAlgebra& g);

/// Length of the lower central series at a sample point: the largest k with
/// g^k != 0 where g^1 = g and g^{k+1} = [g, g^k]. std::nullopt when the
/// series stalls at a nonzero subspace. Throws MissingParameter or
/// ConstraintViolation for inadmissible samples.
std::optional<unsigned> nilpotency_step(const MetricLieAlgebra& g, const Sample& sample);
std::optional<unsigned> nilpotency_step(const StructureTensor<Surd>& c);

/// Rank of a list of row vectors over the exact real field.
std::size_t rank(const std::vector<Vector<Surd>>& rows);

}  // namespace nilschouten
