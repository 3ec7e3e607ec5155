#include "nilschouten/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace nilschouten {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string name, unsigned exponent) {
  if (!is_identifier(name)) throw SyntaxError("invalid parameter name '" + name + "'");
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial m;
  for (const auto& f : factors_)
    if (f.first != name) m.factors_.push_back(f);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : factors_) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  for (; i != fa.end() && j != fb.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first;  // a carries the earlier variable
    if (i->second != j->second) return i->second > j->second;
  }
  return i != fa.end() && j == fb.end();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::string name) { return term(Rational(1), Monomial::variable(std::move(name))); }

Polynomial Polynomial::term(const Rational& coefficient, Monomial monomial) {
  Polynomial p;
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(monomial), coefficient);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return *terms_.begin();
}

std::set<std::string> Polynomial::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) names.insert(f.first);
  return names;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned Polynomial::degree_in(std::string_view name) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
  return d;
}

Polynomial Polynomial::coefficient(std::string_view name, unsigned exponent) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(name) == exponent) out.add_term(m.without(name), c);
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rational, std::less<>>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coefficient = c;
    Monomial rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end())
        rest = rest * Monomial::variable(name, e);
      else
        coefficient *= pow(it->second, e);
    }
    out.add_term(rest, coefficient);
  }
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m.is_one()) {
      out += c.to_string();
    } else if (c == Rational(1)) {
      out += m.to_string();
    } else if (c == Rational(-1)) {
      out += "-" + m.to_string();
    } else {
      out += c.to_string() + "*" + m.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational evaluate(const Polynomial& p, const Assignment& assignment) { return evaluate_as<Rational>(p, assignment); }

Polynomial normalize_sign(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    BigInt n = c.numerator();
    BigInt d = c.denominator();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading_term().second.sign() < 0) scale = -scale;
  return p * Polynomial(scale);
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char ch : name) {
    auto u = static_cast<unsigned char>(ch);
    if (u >= 0x80 || !(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

// ------------------------------------------------------------------ parser

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial sum = product();
    while (true) {
      if (accept('+'))
        sum += product();
      else if (accept('-'))
        sum -= product();
      else
        return sum;
    }
  }

  Polynomial product() {
    Polynomial p = power();
    while (accept('*')) p *= power();
    return p;
  }

  Polynomial power() {
    if (accept('-')) return -power();
    if (accept('+')) return power();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::string digits = take_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 6) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string literal = take_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = take_digits();
        if (den.empty()) fail("expected denominator");
        literal += "/" + den;
      }
      return Polynomial(Rational::parse(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string take_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace nilschouten
