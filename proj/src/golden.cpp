#include "nilschouten/golden.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nilschouten {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto space = line.find(' ');
    std::string_view keyword = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    fn(line_no, keyword, rest);
  }
}

Polynomial parse_at(std::string_view text, int line) {
  try {
    return parse_polynomial(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.what(), line);
  }
}

std::pair<Polynomial, Polynomial> parse_arrow(std::string_view text, int line) {
  auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw SyntaxError("expected '<printed> -> <recomputed>'", line);
  return {parse_at(text.substr(0, arrow), line), parse_at(text.substr(arrow + 2), line)};
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Matrix<Polynomial> RicciGolden::corrected() const {
  Matrix<Polynomial> m = rows;
  for (const auto& e : errata) m(e.row, e.col) = e.recomputed;
  return m.map([&](const Polynomial& p) { return p * scale; });
}

std::vector<Polynomial> SystemGolden::corrected() const {
  std::vector<Polynomial> out;
  for (Polynomial p : equations) {
    for (const auto& e : errata)
      if (normalize_sign(e.printed) == normalize_sign(p)) p = e.recomputed;
    out.push_back(normalize_sign(p));
  }
  return out;
}

RicciGolden parse_ricci_golden(std::string_view text) {
  RicciGolden g{{}, Rational(1), Matrix<Polynomial>(0, 0), {}};
  std::vector<std::vector<Polynomial>> rows;
  for_each_line(text, [&](int line, std::string_view keyword, std::string_view rest) {
    if (keyword == "algebra") {
      g.algebra = std::string(rest);
    } else if (keyword == "scale") {
      g.scale = Rational::parse(rest);
    } else if (keyword == "row") {
      std::vector<Polynomial> row;
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        row.push_back(parse_at(rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), line));
        start = comma == std::string_view::npos ? rest.size() + 1 : comma + 1;
      }
      if (!rows.empty() && row.size() != rows.front().size()) throw SyntaxError("ragged row", line);
      rows.push_back(std::move(row));
    } else if (keyword == "erratum") {
      auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw SyntaxError("expected 'erratum <i> <j> : ...'", line);
      std::istringstream idx{std::string(rest.substr(0, colon))};
      std::size_t i = 0, j = 0;
      if (!(idx >> i >> j) || i == 0 || j == 0) throw SyntaxError("bad erratum indices", line);
      auto [printed, recomputed] = parse_arrow(rest.substr(colon + 1), line);
      g.errata.push_back({i - 1, j - 1, printed, recomputed});
    } else {
      throw SyntaxError("unknown directive '" + std::string(keyword) + "'", line);
    }
  });
  const std::size_t n = rows.size();
  if (n == 0 || rows.front().size() != n) throw SyntaxError("ricci table must be square");
  g.rows = Matrix<Polynomial>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.rows(i, j) = rows[i][j];
  for (const auto& e : g.errata) {
    if (e.row >= n || e.col >= n) throw SyntaxError("erratum index out of range");
    if (g.rows(e.row, e.col) != e.printed)
      throw SyntaxError("erratum printed value does not match the table entry");
  }
  return g;
}

SystemGolden parse_system_golden(std::string_view text) {
  SystemGolden g;
  for_each_line(text, [&](int line, std::string_view keyword, std::string_view rest) {
    if (keyword == "algebra") {
      g.algebra = std::string(rest);
    } else if (keyword == "eq") {
      g.equations.push_back(parse_at(rest, line));
    } else if (keyword == "erratum") {
      auto [printed, recomputed] = parse_arrow(rest, line);
      bool listed = std::any_of(g.equations.begin(), g.equations.end(),
                                [&](const Polynomial& p) { return p == printed; });
      if (!listed) throw SyntaxError("erratum refers to an equation that is not listed", line);
      g.errata.push_back({printed, recomputed});
    } else {
      throw SyntaxError("unknown directive '" + std::string(keyword) + "'", line);
    }
  });
  return g;
}

RicciGolden load_ricci_golden(const std::filesystem::path& file) { return parse_ricci_golden(read_file(file)); }
SystemGolden load_system_golden(const std::filesystem::path& file) { return parse_system_golden(read_file(file)); }

GoldenComparison compare_ricci(const RicciGolden& golden, const Matrix<Polynomial>& computed) {
  GoldenComparison out;
  out.errata = golden.errata.size();
  if (computed.rows() != golden.rows.rows() || computed.cols() != golden.rows.cols()) {
    out.problems.push_back("dimension mismatch");
    return out;
  }
  Matrix<Polynomial> expected = golden.corrected();
  for (std::size_t i = 0; i < computed.rows(); ++i)
    for (std::size_t j = 0; j < computed.cols(); ++j)
      if (expected(i, j) != computed(i, j))
        out.problems.push_back("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): table " +
                               expected(i, j).to_string() + ", computed " + computed(i, j).to_string());
  for (const auto& e : golden.errata)
    if (e.printed * golden.scale == computed(e.row, e.col))
      out.problems.push_back("erratum at (" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) +
                             ") is unnecessary");
  out.match = out.problems.empty();
  return out;
}

GoldenComparison compare_system(const SystemGolden& golden, const ObstructionSystem& computed) {
  GoldenComparison out;
  out.errata = golden.errata.size();
  std::vector<Polynomial> expected = golden.corrected();
  for (const auto& p : expected)
    if (!computed.contains(p)) out.problems.push_back("not generated: " + p.to_string());
  for (const auto& gen : computed.generators)
    if (std::find(expected.begin(), expected.end(), gen.polynomial) == expected.end())
      out.problems.push_back("missing from table: " + gen.polynomial.to_string());
  for (const auto& e : golden.errata)
    if (computed.contains(normalize_sign(e.printed)))
      out.problems.push_back("erratum is unnecessary: " + e.printed.to_string());
  out.match = out.problems.empty();
  return out;
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("NILSCHOUTEN_GOLDEN_DIR"); env && *env) return env;
#ifdef NILSCHOUTEN_DEFAULT_GOLDEN_DIR
  return NILSCHOUTEN_DEFAULT_GOLDEN_DIR;
#else
  return "data/golden";
#endif
}

}  // namespace nilschouten
