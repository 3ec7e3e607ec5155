#pragma once

#include <string_view>
#include <vector>

#include "nilschouten/lie_algebra.hpp"

namespace nilschouten {

/// The ten normal forms of inner products on five-dimensional nilpotent Lie
/// algebras. The two A4_1+A1 forms are separate entries.
enum class AlgebraId {
  abelian,         // 5A1
  a5_4,            // A5_4
  a3_1_plus_2a1,   // A3_1+2A1
  a4_1_plus_a1_1,  // A4_1+A1, first case
  a4_1_plus_a1_2,  // A4_1+A1, second case
  a5_6,
  a5_5,
  a5_3,
  a5_1,
  a5_2,
};

/// Serialized ids: 5A1, A5_4, A3_1+2A1, A4_1+A1_case1, A4_1+A1_case2, A5_6,
/// A5_5, A5_3, A5_1, A5_2.
std::string_view to_string(AlgebraId id);
/// Throws UnknownAlgebra.
AlgebraId parse_algebra_id(std::string_view text);
const std::vector<AlgebraId>& all_algebra_ids();

MetricLieAlgebra get_algebra(AlgebraId id);
MetricLieAlgebra get_algebra(std::string_view id);

enum class Verdict { always, never, family };
std::string_view to_string(Verdict v);

/// Which admissible inner products are Schouten-like metrics (equivalently
/// algebraic Schouten solitons, equivalently nilsolitons).
struct ClassificationEntry {
  AlgebraId id;
  Verdict verdict;
  /// Polynomial equations p = 0 cutting out the soliton family; irrational
  /// ratios are written on squares (alpha^2 - 2 gamma^2) together with a
  /// linear equation fixing equal parameters.
  std::vector<Polynomial> family_constraints;
  /// For `never` entries: a measure-zero family where the oracle does find
  /// solitons even though generic admissible samples are never feasible.
  std::vector<Polynomial> exceptional_family;
};

std::vector<ClassificationEntry> classification_table();
ClassificationEntry classification_entry(AlgebraId id);

/// True when every family constraint vanishes at the sample.
bool on_family(const ClassificationEntry& entry, const Sample& sample);

}  // namespace nilschouten
