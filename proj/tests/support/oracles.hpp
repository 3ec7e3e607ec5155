#pragma once

// Reference computations that share no code path with the library: plain
// nested loops over raw structure constants, written from the textbook
// formulas rather than through ad/J matrices.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nilschouten/lie_algebra.hpp"

namespace oracle {

using nilschouten::Polynomial;
using nilschouten::Rational;

template <class T>
using Cube = std::vector<std::vector<std::vector<T>>>;

template <class T, class Tensor>
Cube<T> to_cube(const Tensor& c, auto convert) {
  const std::size_t n = c.dim();
  Cube<T> out(n, std::vector<std::vector<T>>(n, std::vector<T>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j][k] = convert(c(i, j, k));
  return out;
}

/// ric(x,y) = -1/2 sum_{i,k} c_{xi}^k c_{yi}^k + 1/4 sum_{i,j} c_{ij}^x c_{ij}^y,
/// valid for nilpotent algebras in an orthonormal basis.
template <class T>
std::vector<std::vector<T>> ricci(const Cube<T>& c, T half, T quarter) {
  const std::size_t n = c.size();
  std::vector<std::vector<T>> r(n, std::vector<T>(n, T(0)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      T first(0), second(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          first = first + c[x][i][k] * c[y][i][k];
          second = second + c[i][k][x] * c[i][k][y];
        }
      r[x][y] = T(0) - half * first + quarter * second;
    }
  return r;
}

/// Sum of squares of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] over all pairs,
/// for a square matrix d acting on column vectors.
inline double derivation_defect(const Cube<double>& c, const std::vector<std::vector<double>>& d) {
  const std::size_t n = c.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
          lhs += d[k][m] * c[i][j][m];
          rhs += d[m][i] * c[m][j][k] + d[m][j] * c[i][m][k];
        }
        total += (lhs - rhs) * (lhs - rhs);
      }
  return std::sqrt(total);
}

/// Brute-force search for mu on a grid: the smallest derivation defect of
/// Ric - mu Id over mu = k / denominator, k in [lo, hi].
struct GridHit {
  double mu;
  double defect;
};

inline GridHit grid_search(const Cube<double>& c, long lo, long hi, long denominator) {
  auto ric = ricci<double>(c, 0.5, 0.25);
  GridHit best{0.0, INFINITY};
  for (long k = lo; k <= hi; ++k) {
    const double mu = static_cast<double>(k) / static_cast<double>(denominator);
    auto d = ric;
    for (std::size_t i = 0; i < d.size(); ++i) d[i][i] -= mu;
    const double defect = derivation_defect(c, d);
    if (defect < best.defect) best = {mu, defect};
  }
  return best;
}

/// Small deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long bound = 9) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    return Rational(num, den);
  }
  Rational positive(long bound = 9) { return Rational(integer(1, bound), integer(1, bound)); }

  /// Random polynomial in up to three of the given names.
  Polynomial polynomial(const std::vector<std::string>& names, int terms = 4, unsigned max_exp = 3) {
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
      Polynomial m(rational());
      for (const auto& name : names) {
        const auto e = static_cast<unsigned>(integer(0, max_exp));
        for (unsigned k = 0; k < e; ++k) m *= Polynomial::variable(name);
      }
      p += m;
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
