#include "nilschouten/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nilschouten {

std::string_view to_string(SignConstraint s) {
  switch (s) {
    case SignConstraint::positive: return "positive";
    case SignConstraint::negative: return "negative";
    case SignConstraint::nonzero: return "nonzero";
    case SignConstraint::free: return "free";
  }
  return "free";
}

std::optional<SignConstraint> parse_sign_constraint(std::string_view text) {
  if (text == "positive") return SignConstraint::positive;
  if (text == "negative") return SignConstraint::negative;
  if (text == "nonzero") return SignConstraint::nonzero;
  if (text == "free") return SignConstraint::free;
  return std::nullopt;
}

bool satisfies(SignConstraint s, int sign) {
  switch (s) {
    case SignConstraint::positive: return sign > 0;
    case SignConstraint::negative: return sign < 0;
    case SignConstraint::nonzero: return sign != 0;
    case SignConstraint::free: return true;
  }
  return false;
}

Sample to_sample(const Assignment& assignment) {
  Sample s;
  for (const auto& [name, value] : assignment) s.emplace(name, Surd(value));
  return s;
}

// ------------------------------------------------------------------ Jacobi

std::vector<JacobiFailure> jacobi_check(const StructureTensor<Polynomial>& c) {
  const std::size_t n = c.dim();
  std::vector<JacobiFailure> failures;
  auto e = [n](std::size_t i) { return basis_vector<Polynomial>(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector<Polynomial> a = bracket(c, c.bracket_of_basis(i, j), e(k));
        Vector<Polynomial> b = bracket(c, c.bracket_of_basis(j, k), e(i));
        Vector<Polynomial> d = bracket(c, c.bracket_of_basis(k, i), e(j));
        Vector<Polynomial> sum(n);
        for (std::size_t m = 0; m < n; ++m) sum[m] = a[m] + b[m] + d[m];
        if (!is_zero_vector(sum)) failures.push_back({i, j, k, std::move(sum)});
      }
  return failures;
}

namespace {

std::string describe(const std::vector<JacobiFailure>& failures) {
  std::ostringstream os;
  os << "Jacobi identity fails for " << failures.size() << " triple(s):";
  for (const auto& f : failures) {
    os << " (" << f.i + 1 << "," << f.j + 1 << "," << f.k + 1 << ") residual [";
    for (std::size_t m = 0; m < f.residual.size(); ++m) os << (m ? ", " : "") << f.residual[m];
    os << "]";
  }
  return os.str();
}

}  // namespace

JacobiViolation::JacobiViolation(std::vector<JacobiFailure> failures)
    : Error(describe(failures)), failures_(std::move(failures)) {}

// -------------------------------------------------------- MetricLieAlgebra

MetricLieAlgebra MetricLieAlgebra::create(StructureTensor<Polynomial> structure,
                                          std::vector<ParameterConstraint> constraints, std::string label) {
  if (structure.dim() == 0) throw Error("algebra dimension must be positive");
  std::set<std::string> declared;
  for (const auto& pc : constraints) {
    if (!is_identifier(pc.name)) throw Error("invalid parameter name '" + pc.name + "'");
    if (pc.name == kLambda0 || pc.name == kSolitonConstant)
      throw Error("parameter name '" + pc.name + "' is reserved");
    if (!declared.insert(pc.name).second) throw Error("parameter '" + pc.name + "' declared twice");
  }
  const std::size_t n = structure.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& name : structure(i, j, k).parameters())
          if (!declared.count(name)) throw Error("parameter '" + name + "' is used but not declared");
  auto failures = jacobi_check(structure);
  if (!failures.empty()) throw JacobiViolation(std::move(failures));
  MetricLieAlgebra g;
  g.structure_ = std::move(structure);
  g.constraints_ = std::move(constraints);
  g.label_ = std::move(label);
  return g;
}

std::vector<std::string> MetricLieAlgebra::parameters() const {
  std::vector<std::string> names;
  for (const auto& pc : constraints_) names.push_back(pc.name);
  return names;
}

std::optional<SignConstraint> MetricLieAlgebra::constraint_of(std::string_view name) const {
  for (const auto& pc : constraints_)
    if (pc.name == name) return pc.relation;
  return std::nullopt;
}

void MetricLieAlgebra::check_sample(const Sample& sample) const {
  for (const auto& pc : constraints_) {
    auto it = sample.find(pc.name);
    if (it == sample.end()) throw MissingParameter(pc.name);
    if (!satisfies(pc.relation, it->second.sign()))
      throw ConstraintViolation("parameter '" + pc.name + "' = " + it->second.to_string() + " violates constraint '" +
                                std::string(to_string(pc.relation)) + "'");
  }
}

StructureTensor<Surd> MetricLieAlgebra::evaluate(const Sample& sample) const {
  return structure_.map([&](const Polynomial& p) { return evaluate_as<Surd>(p, sample); });
}

Vector<Polynomial> bracket(const MetricLieAlgebra& g, const Vector<Polynomial>& u, const Vector<Polynomial>& v) {
  return bracket(g.structure(), u, v);
}
Matrix<Polynomial> ad_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& u) {
  return ad_matrix(g.structure(), u);
}
Matrix<Polynomial> ad_star_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& v) {
  return ad_star_matrix(g.structure(), v);
}
Matrix<Polynomial> j_operator_matrix(const MetricLieAlgebra& g, const Vector<Polynomial>& u) {
  return j_operator_matrix(g.structure(), u);
}
Matrix<Polynomial> killing_form(const MetricLieAlgebra& g) { return killing_form(g.structure()); }
Vector<Polynomial> mean_curvature_vector(const MetricLieAlgebra& g) { return mean_curvature_vector(g.structure()); }

// --------------------------------------------------------------- nilpotency

namespace {

/// Row-reduces in place and returns the nonzero echelon rows.
std::vector<Vector<Surd>> echelon_basis(std::vector<Vector<Surd>> rows) {
  std::vector<Vector<Surd>> basis;
  if (rows.empty()) return basis;
  const std::size_t n = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row), rows.end(),
                              [col](const Vector<Surd>& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row), pivot);
    Surd inv = rows[pivot_row][col].inverse();
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Surd factor = rows[r][col];
      for (std::size_t m = col; m < n; ++m) rows[r][m] -= factor * rows[pivot_row][m];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

}  // namespace

std::size_t rank(const std::vector<Vector<Surd>>& rows) { return echelon_basis(rows).size(); }

std::optional<unsigned> nilpotency_step(const StructureTensor<Surd>& c) {
  const std::size_t n = c.dim();
  std::vector<Vector<Surd>> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(basis_vector<Surd>(n, i));
  unsigned step = 1;
  while (true) {
    std::vector<Vector<Surd>> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& w : current) next.push_back(bracket(c, basis_vector<Surd>(n, i), w));
    next = echelon_basis(std::move(next));
    if (next.empty()) return step;
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
    ++step;
  }
}

std::optional<unsigned> nilpotency_step(const MetricLieAlgebra& g, const Sample& sample) {
  g.check_sample(sample);
  return nilpotency_step(g.evaluate(sample));
}

}  // namespace nilschouten
