#pragma once

#include <cstdint>
#include <optional>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nilschouten/catalog.hpp"
#include "nilschouten/golden.hpp"
#include "nilschouten/soliton.hpp"

namespace nilschouten {

/// Seeded source of admissible parameter samples. Uses the raw engine output
/// (no standard distributions) so sequences are identical on every platform.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// num/den with num in 1..24, den in 1..8.
  Rational positive_rational();
  /// k/10 with k in 1..20, so in [1/10, 2].
  Rational perturbation();
  /// A value satisfying the constraint; free parameters are zero one time in ten.
  Surd value(SignConstraint constraint);

  /// Every parameter drawn independently from its constraint.
  Sample admissible(const MetricLieAlgebra& g);
  /// A sample on the soliton family of `id` (admissible() for always/never).
  Sample on_family(AlgebraId id);
  /// Moves one family coordinate of `on` by at least 1/10, keeping the sign
  /// constraints; the result lies off the family.
  Sample off_family(AlgebraId id, const Sample& on);

 private:
  std::mt19937_64 engine_;
};

struct Counterexample {
  Sample sample;
  bool expected_feasible;
  SolitonStatus oracle;
  std::string note;
};

struct EntryReport {
  AlgebraId id;
  Verdict verdict;
  OracleMode mode;
  std::size_t on_total = 0, on_passed = 0;
  std::size_t off_total = 0, off_passed = 0;
  /// Samples where nilsoliton_check and the oracle disagreed.
  std::size_t nilsoliton_disagreements = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const {
    return on_passed == on_total && off_passed == off_total && nilsoliton_disagreements == 0;
  }
};

/// Draws `on_family_samples` samples expected feasible and `off_family_samples`
/// samples expected infeasible (for always/never entries every sample gets the
/// entry's verdict). Deterministic in (id, counts, seed, mode). Throws Error if
/// both counts are zero.
EntryReport verify_entry(AlgebraId id, std::size_t on_family_samples, std::size_t off_family_samples,
                         std::uint64_t seed, OracleMode mode = OracleMode::exact);

struct PaperReport {
  std::vector<EntryReport> entries;  // empty when samples == 0
  std::size_t ricci_total = 0, ricci_matched = 0;
  std::size_t systems_total = 0, systems_matched = 0;
  /// One "<PASS|FAIL> <kind> <id> <detail>" line per assertion, stable order.
  std::vector<std::string> porcelain;
  std::vector<std::string> problems;

  bool passed() const;
  std::string summary() const;
};

/// Full reproduction: golden Ricci matrices and systems, then (if samples > 0)
/// verify_entry for every catalog entry. `never` entries use 2 * samples
/// off-family draws and no on-family draws; `always` entries use 2 * samples
/// on-family draws.
PaperReport verify_paper(std::uint64_t seed, std::size_t samples, const std::filesystem::path& golden_dir,
                         OracleMode mode = OracleMode::exact);

}  // namespace nilschouten
