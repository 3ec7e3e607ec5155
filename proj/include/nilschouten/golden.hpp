#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nilschouten/catalog.hpp"
#include "nilschouten/soliton.hpp"

namespace nilschouten {

/// A correction to a transcribed table: the printed value and the value the
/// computation produces instead.
struct RicciErratum {
  std::size_t row, col;  // 0-based
  Polynomial printed, recomputed;
};

/// Transcribed Ricci tensor: ric = scale * rows.
struct RicciGolden {
  std::string algebra;
  Rational scale;
  Matrix<Polynomial> rows;
  std::vector<RicciErratum> errata;

  /// scale * rows with every erratum applied.
  Matrix<Polynomial> corrected() const;
};

struct SystemErratum {
  Polynomial printed, recomputed;
};

struct SystemGolden {
  std::string algebra;
  std::vector<Polynomial> equations;
  std::vector<SystemErratum> errata;

  /// Equations with errata applied, sign-normalized.
  std::vector<Polynomial> corrected() const;
};

RicciGolden parse_ricci_golden(std::string_view text);
SystemGolden parse_system_golden(std::string_view text);
RicciGolden load_ricci_golden(const std::filesystem::path& file);
SystemGolden load_system_golden(const std::filesystem::path& file);

struct GoldenComparison {
  bool match = false;
  std::size_t errata = 0;
  /// Human readable mismatch descriptions, empty on match.
  std::vector<std::string> problems;
};

/// Matches when the corrected table equals the computed Ricci tensor and
/// every erratum is needed (the printed cell differs from the computation).
GoldenComparison compare_ricci(const RicciGolden& golden, const Matrix<Polynomial>& computed);

/// Set comparison of sign-normalized generators, with the same erratum rule.
GoldenComparison compare_system(const SystemGolden& golden, const ObstructionSystem& computed);

/// Directory holding ricci/ and systems/; overridable at run time with the
/// NILSCHOUTEN_GOLDEN_DIR environment variable.
std::filesystem::path default_golden_dir();

}  // namespace nilschouten
