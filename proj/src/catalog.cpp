#include "nilschouten/catalog.hpp"

#include <algorithm>
#include <array>

namespace nilschouten {

namespace {

struct Bracket {
  std::size_t i, j;  // 1-based
  std::vector<std::pair<std::size_t, const char*>> terms;  // (k, parameter)
};

MetricLieAlgebra build(std::string label, std::vector<ParameterConstraint> params, const std::vector<Bracket>& brackets) {
  constexpr std::size_t n = 5;
  StructureTensor<Polynomial> c(n);
  for (const auto& b : brackets) {
    Vector<Polynomial> coords(n);
    for (const auto& [k, name] : b.terms) coords[k - 1] += Polynomial::variable(name);
    c.set_bracket(b.i - 1, b.j - 1, coords);
  }
  return MetricLieAlgebra::create(std::move(c), std::move(params), std::move(label));
}

constexpr auto pos = SignConstraint::positive;
constexpr auto neg = SignConstraint::negative;
constexpr auto any = SignConstraint::free;

Polynomial var(const char* name) { return Polynomial::variable(name); }

struct IdName {
  AlgebraId id;
  std::string_view name;
};

constexpr std::array<IdName, 10> kIds{{
    {AlgebraId::abelian, "5A1"},
    {AlgebraId::a5_4, "A5_4"},
    {AlgebraId::a3_1_plus_2a1, "A3_1+2A1"},
    {AlgebraId::a4_1_plus_a1_1, "A4_1+A1_case1"},
    {AlgebraId::a4_1_plus_a1_2, "A4_1+A1_case2"},
    {AlgebraId::a5_6, "A5_6"},
    {AlgebraId::a5_5, "A5_5"},
    {AlgebraId::a5_3, "A5_3"},
    {AlgebraId::a5_1, "A5_1"},
    {AlgebraId::a5_2, "A5_2"},
}};

}  // namespace

std::string_view to_string(AlgebraId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  return "?";
}

AlgebraId parse_algebra_id(std::string_view text) {
  for (const auto& e : kIds)
    if (e.name == text) return e.id;
  throw UnknownAlgebra(std::string(text));
}

const std::vector<AlgebraId>& all_algebra_ids() {
  static const std::vector<AlgebraId> ids = [] {
    std::vector<AlgebraId> v;
    for (const auto& e : kIds) v.push_back(e.id);
    return v;
  }();
  return ids;
}

MetricLieAlgebra get_algebra(AlgebraId id) {
  std::string label(to_string(id));
  switch (id) {
    case AlgebraId::abelian:
      return build(label, {}, {});
    case AlgebraId::a5_4:
      return build(label, {{"alpha", any}, {"beta", pos}, {"gamma", pos}},
                   {{1, 3, {{5, "alpha"}}}, {1, 4, {{5, "beta"}}}, {2, 3, {{5, "gamma"}}}});
    case AlgebraId::a3_1_plus_2a1:
      return build(label, {{"alpha", pos}}, {{1, 2, {{5, "alpha"}}}});
    case AlgebraId::a4_1_plus_a1_1:
      return build(label, {{"alpha", pos}, {"beta", pos}, {"gamma", any}},
                   {{1, 2, {{3, "alpha"}, {5, "gamma"}}}, {1, 3, {{5, "beta"}}}});
    case AlgebraId::a4_1_plus_a1_2:
      return build(label, {{"alpha", pos}, {"beta", pos}, {"gamma", any}},
                   {{1, 2, {{3, "alpha"}, {4, "gamma"}}}, {1, 3, {{5, "beta"}}}});
    case AlgebraId::a5_6:
      return build(label,
                   {{"alpha", neg}, {"beta", any}, {"gamma", pos}, {"delta", any}, {"epsilon", pos}, {"sigma", pos}},
                   {{1, 2, {{3, "alpha"}, {4, "beta"}}},
                    {1, 3, {{4, "gamma"}, {5, "delta"}}},
                    {1, 4, {{5, "epsilon"}}},
                    {2, 3, {{5, "sigma"}}}});
    case AlgebraId::a5_5:
      return build(label, {{"alpha", pos}, {"beta", any}, {"gamma", pos}, {"delta", any}, {"epsilon", pos}},
                   {{1, 2, {{4, "alpha"}, {5, "beta"}}},
                    {1, 3, {{5, "gamma"}}},
                    {2, 3, {{5, "delta"}}},
                    {2, 4, {{5, "epsilon"}}}});
    case AlgebraId::a5_3:
      return build(label, {{"alpha", pos}, {"beta", any}, {"gamma", pos}, {"delta", any}, {"epsilon", pos}},
                   {{1, 2, {{3, "alpha"}, {4, "beta"}}}, {1, 3, {{4, "gamma"}, {5, "delta"}}}, {2, 3, {{5, "epsilon"}}}});
    case AlgebraId::a5_1:
      return build(label, {{"alpha", pos}, {"beta", any}, {"gamma", pos}},
                   {{1, 2, {{4, "alpha"}, {5, "beta"}}}, {1, 3, {{5, "gamma"}}}});
    case AlgebraId::a5_2:
      return build(label, {{"alpha", pos}, {"beta", any}, {"gamma", pos}, {"delta", pos}},
                   {{1, 2, {{3, "alpha"}, {4, "beta"}}}, {1, 3, {{4, "gamma"}}}, {1, 4, {{5, "delta"}}}});
  }
  throw UnknownAlgebra(label);
}

MetricLieAlgebra get_algebra(std::string_view id) { return get_algebra(parse_algebra_id(id)); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::always: return "always";
    case Verdict::never: return "never";
    case Verdict::family: return "family";
  }
  return "?";
}

ClassificationEntry classification_entry(AlgebraId id) {
  const Polynomial a = var("alpha"), b = var("beta"), g = var("gamma"), d = var("delta"), e = var("epsilon"),
                   s = var("sigma");
  switch (id) {
    case AlgebraId::abelian:
    case AlgebraId::a3_1_plus_2a1:
      return {id, Verdict::always, {}, {}};
    case AlgebraId::a5_4:
      return {id, Verdict::family, {a, b - g}, {}};
    case AlgebraId::a4_1_plus_a1_1:
    case AlgebraId::a4_1_plus_a1_2:
      return {id, Verdict::family, {g, a - b}, {}};
    case AlgebraId::a5_6:
      // beta = delta = 0, gamma^2 = alpha^2, 3 epsilon^2 = 3 sigma^2 = 2 alpha^2
      return {id, Verdict::never, {}, {b, d, g * g - a * a, 3 * e * e - 2 * a * a, 3 * s * s - 2 * a * a}};
    case AlgebraId::a5_5:
      // alpha = epsilon = sqrt(2) gamma
      return {id, Verdict::family, {b, d, a * a - 2 * g * g, e * e - 2 * g * g, a - e}, {}};
    case AlgebraId::a5_3:
      // gamma = epsilon = sqrt(3)/2 alpha
      return {id, Verdict::family, {b, d, 4 * g * g - 3 * a * a, 4 * e * e - 3 * a * a, g - e}, {}};
    case AlgebraId::a5_1:
      return {id, Verdict::family, {b, a - g}, {}};
    case AlgebraId::a5_2:
      // alpha = delta = sqrt(3)/2 gamma
      return {id, Verdict::family, {b, 4 * a * a - 3 * g * g, 4 * d * d - 3 * g * g, a - d}, {}};
  }
  throw UnknownAlgebra(std::string(to_string(id)));
}

std::vector<ClassificationEntry> classification_table() {
  std::vector<ClassificationEntry> table;
  for (AlgebraId id : all_algebra_ids()) table.push_back(classification_entry(id));
  return table;
}

bool on_family(const ClassificationEntry& entry, const Sample& sample) {
  return std::all_of(entry.family_constraints.begin(), entry.family_constraints.end(),
                     [&](const Polynomial& p) { return evaluate_as<Surd>(p, sample).is_zero(); });
}

}  // namespace nilschouten
