#include "nilschouten/verification.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "nilschouten/algebra_file.hpp"

namespace nilschouten {

long SampleGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational SampleGenerator::positive_rational() {
  long num = uniform(1, 24);
  long den = uniform(1, 8);
  return Rational(num, den);
}

Rational SampleGenerator::perturbation() { return Rational(uniform(1, 20), 10); }

Surd SampleGenerator::value(SignConstraint constraint) {
  switch (constraint) {
    case SignConstraint::positive:
      return positive_rational();
    case SignConstraint::negative:
      return -positive_rational();
    case SignConstraint::nonzero:
      return uniform(0, 1) ? positive_rational() : -positive_rational();
    case SignConstraint::free:
      if (uniform(0, 9) == 0) return Surd();
      return uniform(0, 1) ? positive_rational() : -positive_rational();
  }
  return Surd();
}

Sample SampleGenerator::admissible(const MetricLieAlgebra& g) {
  Sample s;
  for (const auto& p : g.constraints()) s[p.name] = value(p.relation);
  return s;
}

Sample SampleGenerator::on_family(AlgebraId id) {
  const Surd zero;
  switch (id) {
    case AlgebraId::a5_4: {
      Surd r = positive_rational();
      return {{"alpha", zero}, {"beta", r}, {"gamma", r}};
    }
    case AlgebraId::a4_1_plus_a1_1:
    case AlgebraId::a4_1_plus_a1_2: {
      Surd r = positive_rational();
      return {{"alpha", r}, {"beta", r}, {"gamma", zero}};
    }
    case AlgebraId::a5_5: {
      Rational r = positive_rational();
      Surd root2 = Surd(r) * Surd::sqrt(Rational(2));
      return {{"alpha", root2}, {"beta", zero}, {"gamma", r}, {"delta", zero}, {"epsilon", root2}};
    }
    case AlgebraId::a5_3: {
      Rational r = positive_rational();
      Surd root3 = Surd(r / Rational(2)) * Surd::sqrt(Rational(3));
      return {{"alpha", r}, {"beta", zero}, {"gamma", root3}, {"delta", zero}, {"epsilon", root3}};
    }
    case AlgebraId::a5_1: {
      Surd r = positive_rational();
      return {{"alpha", r}, {"beta", zero}, {"gamma", r}};
    }
    case AlgebraId::a5_2: {
      Rational r = positive_rational();
      Surd root3 = Surd(r / Rational(2)) * Surd::sqrt(Rational(3));
      return {{"alpha", root3}, {"beta", zero}, {"gamma", r}, {"delta", root3}};
    }
    default:
      return admissible(get_algebra(id));
  }
}

Sample SampleGenerator::off_family(AlgebraId id, const Sample& on) {
  const MetricLieAlgebra g = get_algebra(id);
  const auto& params = g.constraints();
  if (params.empty()) return on;
  const auto& p = params[static_cast<std::size_t>(uniform(0, static_cast<long>(params.size()) - 1))];
  Surd d = perturbation();
  Sample out = on;
  switch (p.relation) {
    case SignConstraint::positive:
      out[p.name] = out[p.name] + d;
      break;
    case SignConstraint::negative:
      out[p.name] = out[p.name] - d;
      break;
    case SignConstraint::nonzero:
    case SignConstraint::free:
      out[p.name] = uniform(0, 1) ? out[p.name] + d : out[p.name] - d;
      if (p.relation == SignConstraint::nonzero && out[p.name].sign() == 0) out[p.name] = on.at(p.name) + d;
      break;
  }
  return out;
}

namespace {

struct Job {
  Sample sample;
  bool expected_feasible;
};

struct Outcome {
  bool pass;
  bool nilsoliton_agrees;
  SolitonStatus status;
  std::string note;
};

Outcome run_job(const MetricLieAlgebra& g, const ObstructionSystem& system, const ClassificationEntry& entry,
                const Job& job, OracleMode mode) {
  SolitonVerdict v = numeric_soliton_oracle(g, job.sample, mode);
  Outcome out{v.feasible() == job.expected_feasible, true, v.status, {}};
  if (v.feasible() && mode == OracleMode::exact && v.residual_norm != 0.0) {
    out.pass = false;
    out.note = "nonzero exact residual";
  }
  if (!out.pass && out.note.empty()) out.note = job.expected_feasible ? "expected feasible" : "expected infeasible";
  if (entry.verdict == Verdict::family && on_family(entry, job.sample) != job.expected_feasible) {
    out.pass = false;
    out.note = "sample generator placed the sample on the wrong side of the family";
  }
  out.nilsoliton_agrees = nilsoliton_check(g, system, job.sample).status == v.status;
  return out;
}

}  // namespace

EntryReport verify_entry(AlgebraId id, std::size_t on_family_samples, std::size_t off_family_samples,
                         std::uint64_t seed, OracleMode mode) {
  if (on_family_samples + off_family_samples == 0) throw Error("verify_entry needs at least one sample");
  const MetricLieAlgebra g = get_algebra(id);
  const ClassificationEntry entry = classification_entry(id);
  const ObstructionSystem system = obstruction_system(g);

  // Draw every sample up front so the sequence does not depend on scheduling.
  SampleGenerator gen(seed);
  std::vector<Job> jobs;
  const bool fixed = entry.verdict != Verdict::family;
  const bool fixed_feasible = entry.verdict == Verdict::always;
  for (std::size_t i = 0; i < on_family_samples; ++i)
    jobs.push_back({gen.on_family(id), fixed ? fixed_feasible : true});
  for (std::size_t i = 0; i < off_family_samples; ++i) {
    if (fixed) {
      jobs.push_back({gen.admissible(g), fixed_feasible});
    } else {
      Sample on = gen.on_family(id);
      jobs.push_back({gen.off_family(id, on), false});
    }
  }

  // Outcomes land in their job's slot, so the report does not depend on
  // which worker finished first.
  std::vector<std::optional<Outcome>> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) outcomes[i] = run_job(g, system, entry, jobs[i], mode);
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  EntryReport report{id, entry.verdict, mode, 0, 0, 0, 0, 0, {}};
  report.on_total = on_family_samples;
  report.off_total = off_family_samples;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Outcome& o = *outcomes[i];
    const bool on_side = i < on_family_samples;
    if (o.pass) (on_side ? report.on_passed : report.off_passed)++;
    if (!o.nilsoliton_agrees) report.nilsoliton_disagreements++;
    if (!o.pass || !o.nilsoliton_agrees)
      report.counterexamples.push_back(
          {jobs[i].sample, jobs[i].expected_feasible, o.status, o.pass ? "nilsoliton check disagrees" : o.note});
  }
  return report;
}

bool PaperReport::passed() const {
  if (ricci_matched != ricci_total || systems_matched != systems_total || !problems.empty()) return false;
  for (const auto& e : entries)
    if (!e.passed()) return false;
  return true;
}

std::string PaperReport::summary() const {
  std::ostringstream os;
  if (entries.empty()) {
    os << "classification skipped (--samples 0)";
  } else {
    std::size_t ok = 0;
    for (const auto& e : entries) ok += e.passed() ? 1 : 0;
    os << ok << "/" << entries.size() << " classification entries verified";
  }
  os << "; " << ricci_matched << "/" << ricci_total << " Ricci golden matrices match; " << systems_matched << "/"
     << systems_total << " printed systems match";
  return os.str();
}

PaperReport verify_paper(std::uint64_t seed, std::size_t samples, const std::filesystem::path& golden_dir,
                         OracleMode mode) {
  PaperReport report;
  auto record = [&](bool ok, const std::string& kind, std::string_view id, const std::string& detail,
                    const std::vector<std::string>& problems) {
    report.porcelain.push_back(std::string(ok ? "PASS " : "FAIL ") + kind + " " + std::string(id) + " " + detail);
    for (const auto& p : problems) report.problems.push_back(kind + " " + std::string(id) + ": " + p);
  };

  for (AlgebraId id : all_algebra_ids()) {
    const std::string name(to_string(id));
    const MetricLieAlgebra g = get_algebra(id);
    ++report.ricci_total;
    try {
      GoldenComparison cmp = compare_ricci(load_ricci_golden(golden_dir / "ricci" / (name + ".txt")),
                                           ricci_tensor_nilpotent(g));
      if (cmp.match) ++report.ricci_matched;
      record(cmp.match, "ricci", name, "errata=" + std::to_string(cmp.errata), cmp.problems);
    } catch (const Error& e) {
      record(false, "ricci", name, "unreadable", {e.what()});
    }

    const auto system_file = golden_dir / "systems" / (name + ".txt");
    if (!std::filesystem::exists(system_file)) continue;
    ++report.systems_total;
    try {
      GoldenComparison cmp = compare_system(load_system_golden(system_file), obstruction_system(g));
      if (cmp.match) ++report.systems_matched;
      record(cmp.match, "system", name, "errata=" + std::to_string(cmp.errata), cmp.problems);
    } catch (const Error& e) {
      record(false, "system", name, "unreadable", {e.what()});
    }
  }

  if (samples == 0) return report;
  for (AlgebraId id : all_algebra_ids()) {
    const Verdict verdict = classification_entry(id).verdict;
    std::size_t on = samples, off = samples;
    if (verdict == Verdict::always) on = 2 * samples, off = 0;
    if (verdict == Verdict::never) on = 0, off = 2 * samples;
    // Per-entry seeds keep each entry's draws independent of the others.
    EntryReport e = verify_entry(id, on, off, seed * 1000003ULL + static_cast<std::uint64_t>(id), mode);
    std::ostringstream detail;
    detail << to_string(verdict) << " on=" << e.on_passed << "/" << e.on_total << " off=" << e.off_passed << "/"
           << e.off_total << " nilsoliton_disagreements=" << e.nilsoliton_disagreements;
    std::vector<std::string> problems;
    for (const auto& c : e.counterexamples) problems.push_back(c.note + " at " + format_sample(c.sample));
    record(e.passed(), "classify", to_string(id), detail.str(), problems);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace nilschouten
