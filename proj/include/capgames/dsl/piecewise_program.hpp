#pragma once

#include <string>
#include <vector>

#include "capgames/rational.hpp"

namespace capgames::dsl {

/// A piecewise-constant line assignment:
///   if (x < t1) { return c0; } else { ... return ck; }
/// Thresholds are strictly increasing; constants are line indices.
struct PiecewiseProgram {
  std::vector<Rational> thresholds;  // strictly increasing
  std::vector<int> constants;        // size == thresholds.size() + 1

  int if_count() const { return static_cast<int>(thresholds.size()); }

  friend bool operator==(const PiecewiseProgram& a, const PiecewiseProgram& b) {
    return a.thresholds == b.thresholds && a.constants == b.constants;
  }
};

/// Parser for the grammar above. Thresholds accepted as "p/q" or decimal
/// literals, compared exactly; non-increasing thresholds are a ParseError.
PiecewiseProgram parse_piecewise_program(const std::string& text);

/// Canonical pretty-printer; parse(emit(p)) == p.
std::string emit_piecewise_program(const PiecewiseProgram& program);

/// Evaluates the function at one point.
int evaluate_piecewise(const PiecewiseProgram& program, const Rational& x);

/// Maps each resource x-coordinate (strictly increasing) to its line.
/// Throws DomainError when a constant is outside 0..lines-1.
std::vector<int> evaluate_piecewise_at(const PiecewiseProgram& program,
                                       const std::vector<Rational>& xs, int lines);

/// Smallest program inducing the given per-point assignment: one if per
/// value change, thresholds placed at the midpoint cut. At most
/// (#ifs of any producing program) segments after this canonicalization.
PiecewiseProgram minimal_piecewise_program(const std::vector<int>& assignment,
                                           const std::vector<Rational>& xs);

}  // namespace capgames::dsl
