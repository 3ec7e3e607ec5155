#include "nilschouten/algebra_file.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace nilschouten {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  while (true) {
    s = trim(s);
    if (s.empty()) return words;
    auto end = s.find_first_of(" \t");
    words.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return words;
    s.remove_prefix(end);
  }
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

/// e<k> with 1 <= k; returns k.
std::optional<std::size_t> basis_symbol(std::string_view name) {
  if (name.size() < 2 || name.front() != 'e') return std::nullopt;
  auto k = parse_index(name.substr(1));
  if (!k || *k == 0 || name[1] == '0') return std::nullopt;
  return k;
}

Surd parse_value(std::string_view text, int line) {
  try {
    return Surd::parse(trim(text));
  } catch (const Error& e) {
    throw SyntaxError(e.what(), line);
  }
}

struct PendingBracket {
  std::size_t i, j;
  Vector<Polynomial> coords;
  int line;
};

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  std::optional<std::size_t> dim;
  std::string label;
  std::vector<ParameterConstraint> params;
  std::vector<PendingBracket> brackets;
  Sample sample;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    std::string_view line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    auto words = split_words(line);
    std::string_view keyword = words.front();

    if (keyword == "label") {
      label = std::string(trim(line.substr(5)));
    } else if (keyword == "dim") {
      if (dim) throw SyntaxError("duplicate 'dim'", line_no);
      if (words.size() != 2) throw SyntaxError("expected 'dim <n>'", line_no);
      dim = parse_index(words[1]);
      if (!dim || *dim == 0) throw SyntaxError("dimension must be a positive integer", line_no);
    } else if (keyword == "param") {
      if (words.size() != 3) throw SyntaxError("expected 'param <name> <positive|negative|nonzero|free>'", line_no);
      std::string name(words[1]);
      if (!is_identifier(name) || basis_symbol(name) || name == kLambda0 || name == kSolitonConstant)
        throw SyntaxError("invalid or reserved parameter name '" + name + "'", line_no);
      auto relation = parse_sign_constraint(words[2]);
      if (!relation) throw SyntaxError("unknown constraint '" + std::string(words[2]) + "'", line_no);
      for (const auto& p : params)
        if (p.name == name) throw SyntaxError("parameter '" + name + "' declared twice", line_no);
      params.push_back({name, *relation});
    } else if (keyword == "bracket") {
      if (!dim) throw SyntaxError("'dim' must precede brackets", line_no);
      auto colon = line.find(':');
      if (colon == std::string_view::npos) throw SyntaxError("expected ':' in bracket line", line_no);
      auto head = split_words(line.substr(0, colon));
      if (head.size() != 3) throw SyntaxError("expected 'bracket <i> <j> : ...'", line_no);
      auto i = parse_index(head[1]);
      auto j = parse_index(head[2]);
      if (!i || !j || *i == 0 || *j == 0 || *i > *dim || *j > *dim)
        throw SyntaxError("bracket indices must lie in 1.." + std::to_string(*dim), line_no);
      if (*i >= *j) throw SyntaxError("bracket indices must satisfy i < j", line_no);
      for (const auto& b : brackets)
        if (b.i == *i - 1 && b.j == *j - 1)
          throw DuplicateBracket("line " + std::to_string(line_no) + ": bracket " + std::to_string(*i) + " " +
                                 std::to_string(*j) + " already defined on line " + std::to_string(b.line));
      Polynomial rhs;
      try {
        rhs = parse_polynomial(line.substr(colon + 1));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.what(), line_no);
      }
      Vector<Polynomial> coords(*dim);
      for (const auto& [monomial, coefficient] : rhs.terms()) {
        std::optional<std::size_t> k;
        unsigned basis_factors = 0;
        for (const auto& [name, e] : monomial.factors()) {
          if (auto idx = basis_symbol(name)) {
            basis_factors += e;
            k = idx;
          }
        }
        if (basis_factors != 1) throw SyntaxError("bracket value must be linear in e1..e" + std::to_string(*dim), line_no);
        if (*k > *dim) throw SyntaxError("basis vector e" + std::to_string(*k) + " out of range", line_no);
        coords[*k - 1] += Polynomial::term(coefficient, monomial.without("e" + std::to_string(*k)));
      }
      brackets.push_back({*i - 1, *j - 1, std::move(coords), line_no});
    } else if (keyword == "sample") {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected 'sample <name> = <value>'", line_no);
      auto lhs = split_words(line.substr(0, eq));
      if (lhs.size() != 2 || !is_identifier(lhs[1])) throw SyntaxError("expected 'sample <name> = <value>'", line_no);
      std::string name(lhs[1]);
      if (sample.count(name)) throw SyntaxError("duplicate sample value for '" + name + "'", line_no);
      sample.emplace(name, parse_value(line.substr(eq + 1), line_no));
    } else {
      throw SyntaxError("unknown directive '" + std::string(keyword) + "'", line_no);
    }
  }
  if (!dim) throw SyntaxError("missing 'dim' line");

  std::map<std::string, bool, std::less<>> declared;
  for (const auto& p : params) declared[p.name] = true;
  StructureTensor<Polynomial> c(*dim);
  for (const auto& b : brackets) {
    for (const auto& coord : b.coords)
      for (const auto& name : coord.parameters())
        if (!declared.count(name)) throw SyntaxError("undeclared parameter '" + name + "'", b.line);
    c.set_bracket(b.i, b.j, b.coords);
  }
  for (const auto& [name, value] : sample)
    if (!declared.count(name)) throw SyntaxError("sample for undeclared parameter '" + name + "'");

  return {MetricLieAlgebra::create(std::move(c), std::move(params), std::move(label)), std::move(sample)};
}

std::string print_algebra_file(const MetricLieAlgebra& algebra, const Sample& sample) {
  std::ostringstream os;
  if (!algebra.label().empty()) os << "label " << algebra.label() << "\n";
  const std::size_t n = algebra.dim();
  os << "dim " << n << "\n";
  for (const auto& p : algebra.constraints()) os << "param " << p.name << " " << to_string(p.relation) << "\n";
  const auto& c = algebra.structure();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        const Polynomial& coef = c(i, j, k);
        if (coef.is_zero()) continue;
        std::string basis = "e" + std::to_string(k + 1);
        std::string term;
        if (coef == Polynomial(1))
          term = basis;
        else if (coef == Polynomial(-1))
          term = "-" + basis;
        else if (coef.terms().size() == 1)
          term = coef.to_string() + "*" + basis;
        else
          term = "(" + coef.to_string() + ")*" + basis;
        if (!rhs.empty()) rhs += " + ";
        rhs += term;
      }
      if (!rhs.empty()) os << "bracket " << i + 1 << " " << j + 1 << " : " << rhs << "\n";
    }
  for (const auto& [name, value] : sample) os << "sample " << name << " = " << value.to_string() << "\n";
  return os.str();
}

std::string print_algebra_file(const AlgebraFile& file) { return print_algebra_file(file.algebra, file.sample); }

Sample parse_sample_assignments(std::string_view text) {
  Sample sample;
  text = trim(text);
  if (text.empty()) return sample;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("expected name=value in sample '" + std::string(item) + "'");
    std::string_view name = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    bool squared = false;
    if (name.size() > 2 && name.substr(name.size() - 2) == "^2") {
      squared = true;
      name.remove_suffix(2);
    }
    if (!is_identifier(name)) throw SyntaxError("invalid parameter name '" + std::string(name) + "' in sample");
    Surd v;
    if (squared) {
      Rational q = Rational::parse(value);
      if (q.sign() < 0) throw SyntaxError("squared value must be non-negative for '" + std::string(name) + "'");
      v = Surd::sqrt(q);
    } else {
      v = Surd::parse(value);
    }
    if (!sample.emplace(std::string(name), v).second)
      throw SyntaxError("duplicate sample value for '" + std::string(name) + "'");
  }
  return sample;
}

std::string format_sample(const Sample& sample) {
  std::string out;
  for (const auto& [name, value] : sample) {
    if (!out.empty()) out += ",";
    out += name + "=" + value.to_string();
  }
  return out;
}

}  // namespace nilschouten
