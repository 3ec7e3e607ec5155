#pragma once

#include <string>
#include <string_view>

#include "nilschouten/lie_algebra.hpp"

namespace nilschouten {

/// Plain-text algebra definition. Line oriented, '#' starts a comment:
///
///   label <text>                                  (optional)
///   dim <n>
///   param <name> <positive|negative|nonzero|free>
///   bracket <i> <j> : <poly>*e<k> [+ <poly>*e<k> ...]   (1 <= i < j <= n)
///   sample <name> = <value>                       (optional)
///
/// Omitted bracket pairs are zero. <poly> uses the polynomial literal grammar;
/// any expression that expands to a combination linear in e1..en is accepted,
/// e.g. `(alpha - beta)*e3 + gamma*e5`. Sample values are rationals or
/// `[r*]sqrt(q)`.
struct AlgebraFile {
  MetricLieAlgebra algebra;
  Sample sample;

  friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
    return a.algebra == b.algebra && a.sample == b.sample;
  }
};

/// Throws SyntaxError (with line number), DuplicateBracket or JacobiViolation.
AlgebraFile parse_algebra_file(std::string_view text);

/// Canonical text form; parse_algebra_file(print_algebra_file(f)) == f.
std::string print_algebra_file(const MetricLieAlgebra& algebra, const Sample& sample = {});
std::string print_algebra_file(const AlgebraFile& file);

/// Comma-separated `name=value` list. Values as in the file format; in
/// addition `name^2=q` assigns the positive square root of q.
Sample parse_sample_assignments(std::string_view text);

/// `name=value` pairs joined by ',' in name order.
std::string format_sample(const Sample& sample);

}  // namespace nilschouten
