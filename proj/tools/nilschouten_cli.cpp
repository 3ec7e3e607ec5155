// Command-line front end: Ricci tensors, obstruction systems, soliton checks
// and the full classification reproduction.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilschouten/algebra_file.hpp"
#include "nilschouten/catalog.hpp"
#include "nilschouten/curvature.hpp"
#include "nilschouten/golden.hpp"
#include "nilschouten/soliton.hpp"
#include "nilschouten/verification.hpp"

namespace ns = nilschouten;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct SourceOptions {
  std::string builtin;
  std::string file;
  std::string sample;
  bool porcelain = false;
};

struct Source {
  ns::MetricLieAlgebra algebra;
  ns::Sample sample;
  bool builtin;
};

void add_source_options(CLI::App* cmd, SourceOptions& opts, bool with_sample) {
  auto* b = cmd->add_option("--builtin", opts.builtin, "catalog algebra id (5A1, A5_4, A3_1+2A1, ...)");
  auto* f = cmd->add_option("--file", opts.file, "algebra definition file")->check(CLI::ExistingFile);
  b->excludes(f);
  if (with_sample) cmd->add_option("--sample", opts.sample, "parameter values, e.g. alpha=1,beta=sqrt(2),gamma^2=3");
  cmd->add_flag("--porcelain", opts.porcelain, "stable line-oriented output");
}

Source load_source(const SourceOptions& opts) {
  if (opts.builtin.empty() && opts.file.empty()) throw ns::Error("one of --builtin or --file is required");
  Source src{opts.builtin.empty() ? ns::get_algebra("5A1") : ns::get_algebra(opts.builtin), {}, !opts.builtin.empty()};
  if (!opts.file.empty()) {
    std::ifstream in(opts.file);
    if (!in) throw ns::Error("cannot open " + opts.file);
    std::ostringstream text;
    text << in.rdbuf();
    ns::AlgebraFile parsed = ns::parse_algebra_file(text.str());
    src.algebra = std::move(parsed.algebra);
    src.sample = std::move(parsed.sample);
  }
  for (auto& [name, value] : ns::parse_sample_assignments(opts.sample)) src.sample[name] = value;
  return src;
}

// The nilpotent Ricci formula is only valid on nilpotent algebras. Catalog
// entries are nilpotent by construction; user files are checked at the sample.
void warn_nilpotency(const Source& src, bool have_sample) {
  if (src.builtin) return;
  if (!have_sample) {
    std::cerr << "warning: nilpotency not verified (no sample given); the nilpotent Ricci formula assumes it\n";
    return;
  }
  if (!ns::nilpotency_step(src.algebra, src.sample))
    std::cerr << "warning: algebra is not nilpotent at the given sample\n";
}

template <class T, class Fmt>
void print_matrix(const ns::Matrix<T>& m, bool porcelain, const std::string& tag, Fmt fmt) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (porcelain) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::cout << tag << " " << i + 1 << " " << j + 1 << " " << fmt(m(i, j)) << "\n";
    } else {
      std::cout << "  [";
      for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? ", " : "") << fmt(m(i, j));
      std::cout << "]\n";
    }
  }
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

int cmd_ricci(const SourceOptions& opts, bool general) {
  Source src = load_source(opts);
  const bool sampled = !opts.sample.empty() || !src.sample.empty();
  warn_nilpotency(src, sampled);
  if (sampled) {
    src.algebra.check_sample(src.sample);
    ns::StructureTensor<ns::Surd> c = src.algebra.evaluate(src.sample);
    ns::Matrix<ns::Surd> ric = general ? ns::ricci_tensor_general(c) : ns::ricci_tensor_nilpotent(c);
    if (!opts.porcelain) std::cout << "Ricci operator at " << ns::format_sample(src.sample) << ":\n";
    print_matrix(ric, opts.porcelain, "ric", [](const ns::Surd& s) { return s.to_string(); });
    std::cout << (opts.porcelain ? "scalar " : "scalar curvature: ") << ns::trace(ric).to_string() << "\n";
    return 0;
  }
  ns::CurvatureData data = ns::curvature(src.algebra, general);
  if (!opts.porcelain) std::cout << "Ricci operator:\n";
  print_matrix(data.ricci_operator, opts.porcelain, "ric", [](const ns::Polynomial& p) { return p.to_string(); });
  std::cout << (opts.porcelain ? "scalar " : "scalar curvature: ") << data.scalar.to_string() << "\n";
  return 0;
}

int cmd_system(const SourceOptions& opts) {
  Source src = load_source(opts);
  ns::ObstructionSystem system = ns::obstruction_system(src.algebra);
  if (system.empty()) {
    std::cout << "empty system\n";
    return 0;
  }
  if (!opts.porcelain) std::cout << system.size() << " generators (each = 0):\n";
  for (const auto& gen : system.generators) {
    std::string origins;
    for (const auto& o : gen.origins) {
      if (!origins.empty()) origins += opts.porcelain ? ";" : ", ";
      origins += opts.porcelain ? std::to_string(o.i + 1) + "," + std::to_string(o.j + 1) + "," + std::to_string(o.k + 1)
                                : "[e" + std::to_string(o.i + 1) + ",e" + std::to_string(o.j + 1) + "]_" +
                                      std::to_string(o.k + 1);
    }
    if (opts.porcelain)
      std::cout << "gen " << gen.polynomial.to_string() << " | " << origins << "\n";
    else
      std::cout << "  " << gen.polynomial.to_string() << "    from " << origins << "\n";
  }
  return 0;
}

int cmd_check(const SourceOptions& opts, bool use_float) {
  Source src = load_source(opts);
  warn_nilpotency(src, true);
  ns::SolitonVerdict v =
      ns::numeric_soliton_oracle(src.algebra, src.sample, use_float ? ns::OracleMode::floating : ns::OracleMode::exact);
  const std::string status = v.feasible() ? "feasible" : "infeasible";
  const std::string mu = v.exact_mu ? v.exact_mu->to_string() : fmt_double(v.mu);
  if (opts.porcelain) {
    std::cout << "status " << status << "\nmu " << mu << "\nresidual " << fmt_double(v.residual_norm) << "\n";
  } else {
    std::cout << status << "\n";
    std::cout << (v.feasible() ? "mu = " : "least-squares mu = ") << mu << "\n";
    std::cout << "residual = " << fmt_double(v.residual_norm) << "\n";
  }
  if (v.exact_witness) {
    if (!opts.porcelain) std::cout << "D = Ric - mu Id:\n";
    print_matrix(*v.exact_witness, opts.porcelain, "D", [](const ns::Surd& s) { return s.to_string(); });
  } else if (v.witness) {
    if (!opts.porcelain) std::cout << "D = Ric - mu Id:\n";
    print_matrix(*v.witness, opts.porcelain, "D", fmt_double);
  }
  return v.feasible() ? kExitFeasible : kExitInfeasible;
}

int cmd_verify_paper(std::uint64_t seed, std::size_t samples, const std::string& golden_dir, bool use_float,
                     bool porcelain) {
  const auto start = std::chrono::steady_clock::now();
  ns::PaperReport report = ns::verify_paper(seed, samples, golden_dir.empty() ? ns::default_golden_dir() : std::filesystem::path(golden_dir),
                                            use_float ? ns::OracleMode::floating : ns::OracleMode::exact);
  for (const auto& line : report.porcelain) std::cout << line << "\n";
  for (const auto& p : report.problems) std::cout << "mismatch " << p << "\n";
  std::cout << report.summary() << "\n";
  if (!porcelain) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << (report.passed() ? "all assertions passed" : "FAILED") << " in " << std::fixed << std::setprecision(2) << elapsed.count()
              << " s\n";
  }
  return report.passed() ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ricci curvature, Schouten-like metrics and nilsolitons on nilpotent metric Lie algebras"};
  app.require_subcommand(1);

  SourceOptions ricci_opts, system_opts, check_opts;
  bool general = false, check_float = false, verify_float = false, verify_porcelain = false;
  std::uint64_t seed = 7;
  std::size_t samples = 50;
  std::string golden_dir, print_id;

  auto* ricci = app.add_subcommand("ricci", "Ricci operator and scalar curvature");
  add_source_options(ricci, ricci_opts, true);
  ricci->add_flag("--general", general, "use the four-term formula valid on any Lie algebra");

  auto* system = app.add_subcommand("system", "obstruction system for Schouten solitons");
  add_source_options(system, system_opts, false);

  auto* check = app.add_subcommand("check", "decide whether Ric - mu Id is a derivation for some mu");
  add_source_options(check, check_opts, true);
  check->add_flag("--float", check_float, "floating-point least squares instead of exact arithmetic");

  auto* verify = app.add_subcommand("verify-paper", "golden comparisons and randomized classification check");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--samples", samples, "samples per side and entry (0: golden files only)")->capture_default_str();
  verify->add_option("--golden-dir", golden_dir, "directory with ricci/ and systems/")->check(CLI::ExistingDirectory);
  verify->add_flag("--float", verify_float, "floating-point oracle");
  verify->add_flag("--porcelain", verify_porcelain, "omit timing");

  auto* print = app.add_subcommand("print-builtin", "print a catalog algebra in the definition-file format");
  print->add_option("id", print_id, "catalog algebra id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*ricci) return cmd_ricci(ricci_opts, general);
    if (*system) return cmd_system(system_opts);
    if (*check) return cmd_check(check_opts, check_float);
    if (*verify) return cmd_verify_paper(seed, samples, golden_dir, verify_float, verify_porcelain);
    if (*print) {
      std::cout << ns::print_algebra_file(ns::get_algebra(print_id));
      return 0;
    }
  } catch (const ns::JacobiViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& f : e.failures())
      std::cerr << "  Jacobi fails on (" << f.i + 1 << "," << f.j + 1 << "," << f.k + 1 << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
