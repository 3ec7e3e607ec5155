#include "nilschouten/surd.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <vector>

#include "nilschouten/errors.hpp"

namespace nilschouten {

namespace {

// Above this bound trial division would be too slow; sample radicands are
// small integers in practice.
const BigInt kMaxRadicand("1000000000000000000", 10);

/// Splits n > 0 as square^2 * squarefree.
std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
  if (n > kMaxRadicand) throw Error("radicand too large for exact square-root arithmetic: " + n.get_str());
  BigInt square = 1;
  BigInt free = 1;
  for (BigInt p = 2; p * p <= n; ++p) {
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) square *= p;
    if (count % 2 == 1) free *= p;
  }
  free *= n;  // remaining factor is 1 or a prime
  return {square, free};
}

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> primes;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

/// Galois conjugate flipping the sign of sqrt(p).
Surd conjugate(const Surd& x, const BigInt& p) {
  Surd out;
  for (const auto& [m, q] : x.terms()) {
    Surd term = Surd::sqrt(Rational(m)) * Surd(q);
    if (m % p == 0) term = -term;
    out += term;
  }
  return out;
}

}  // namespace

Surd::Surd(const Rational& q) {
  if (!q.is_zero()) terms_.emplace(BigInt(1), q);
}

Surd Surd::sqrt(const Rational& q) {
  if (q.sign() < 0) throw Error("square root of a negative number: " + q.to_string());
  if (q.is_zero()) return {};
  // sqrt(a/b) = sqrt(a*b)/b
  BigInt den = q.denominator();
  auto [square, free] = squarefree_split(q.numerator() * den);
  Surd out;
  out.terms_.emplace(free, Rational(square, den));
  return out;
}

namespace {

std::string_view trim_spaces(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Surd parse_term(std::string_view text) {
  auto pos = text.find("sqrt(");
  if (pos == std::string_view::npos) return Surd(Rational::parse(text));
  if (text.back() != ')') throw SyntaxError("malformed surd literal '" + std::string(text) + "'");
  std::string_view prefix = text.substr(0, pos);
  std::string_view radicand = text.substr(pos + 5, text.size() - pos - 6);
  Rational factor(1);
  if (prefix == "-") {
    factor = Rational(-1);
  } else if (!prefix.empty()) {
    if (prefix.back() != '*') throw SyntaxError("malformed surd literal '" + std::string(text) + "'");
    factor = Rational::parse(prefix.substr(0, prefix.size() - 1));
  }
  Rational r = Rational::parse(radicand);
  if (r.sign() < 0) throw SyntaxError("negative radicand in '" + std::string(text) + "'");
  return Surd(factor) * Surd::sqrt(r);
}

}  // namespace

Surd Surd::parse(std::string_view text) {
  text = trim_spaces(text);
  if (text.empty()) throw SyntaxError("empty number");
  // Sums of terms, as printed by to_string: "1/2 + -3*sqrt(2)".
  Surd total;
  std::size_t start = 0;
  while (true) {
    auto plus = text.find('+', start);
    std::string_view piece = trim_spaces(text.substr(start, plus == std::string_view::npos ? plus : plus - start));
    if (piece.empty()) throw SyntaxError("malformed surd literal '" + std::string(text) + "'");
    total += parse_term(piece);
    if (plus == std::string_view::npos) return total;
    start = plus + 1;
  }
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Rational Surd::rational_value() const {
  if (!is_rational()) throw Error("value " + to_string() + " is irrational");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return terms_.begin()->second.sign();
  // A nonzero algebraic number: refine precision until the magnitude clears
  // the accumulated rounding bound.
  for (unsigned bits = 128; bits <= (1u << 16); bits *= 2) {
    mpf_class total(0, bits);
    for (const auto& [m, q] : terms_) {
      mpf_class root(0, bits);
      mpf_class radicand(m, bits);
      mpf_sqrt(root.get_mpf_t(), radicand.get_mpf_t());
      mpf_class coeff(q.numerator(), bits);
      coeff /= mpf_class(q.denominator(), bits);
      total += coeff * root;
    }
    mpf_class bound(1, bits);
    mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), bits / 2);
    if (abs(total) > bound) return sgn(total);
  }
  throw Error("could not decide sign of " + to_string());
}

double Surd::to_double() const {
  double total = 0;
  for (const auto& [m, q] : terms_) total += q.to_double() * std::sqrt(m.get_d());
  return total;
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, q] : terms_) {
    if (!out.empty()) out += " + ";
    if (m == 1) {
      out += q.to_string();
    } else {
      std::string root = "sqrt(" + m.get_str() + ")";
      if (q == Rational(1))
        out += root;
      else if (q == Rational(-1))
        out += "-" + root;
      else
        out += q.to_string() + "*" + root;
    }
  }
  return out;
}

void Surd::add_term(const BigInt& radicand, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& [m, q] : out.terms_) q = -q;
  return out;
}

Surd& Surd::operator+=(const Surd& rhs) {
  for (const auto& [m, q] : rhs.terms_) add_term(m, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
  for (const auto& [m, q] : rhs.terms_) add_term(m, -q);
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      // sqrt(ma)*sqrt(mb) = g*sqrt(ma*mb/g^2) with g = gcd(ma, mb); both squarefree
      BigInt g;
      mpz_gcd(g.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
      BigInt m = (ma / g) * (mb / g);
      out.add_term(m, qa * qb * Rational(g));
    }
  }
  return out;
}

Surd Surd::inverse() const {
  if (is_zero()) throw Error("division by zero");
  std::set<BigInt> primes;
  for (const auto& [m, q] : terms_)
    for (const auto& p : prime_factors(m)) primes.insert(p);
  // Multiplying by the conjugate in one prime removes that prime from every
  // radicand; after all primes the running product is rational.
  Surd numerator(1);
  Surd running = *this;
  for (const auto& p : primes) {
    Surd c = conjugate(running, p);
    running *= c;
    numerator *= c;
  }
  Rational denominator = running.rational_value();
  return numerator * Surd(Rational(1) / denominator);
}

int compare(const Surd& a, const Surd& b) { return (a - b).sign(); }

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.to_string(); }

}  // namespace nilschouten
