#include "capgames/dsl/piecewise_program.hpp"

#include "capgames/errors.hpp"
#include "dsl_cursor.hpp"

namespace capgames::dsl {

namespace {

using detail::Cursor;

int parse_line_constant(Cursor& cur) {
  std::string text = cur.number();
  int value = 0;
  bool ok = !text.empty() && text.size() <= 6;
  for (char c : text) {
    if (c < '0' || c > '9') {
      ok = false;
      break;
    }
    value = value * 10 + (c - '0');
  }
  if (!ok) cur.fail("line constant must be a non-negative integer");
  return value;
}

}  // namespace

PiecewiseProgram parse_piecewise_program(const std::string& text) {
  Cursor cur(text);
  PiecewiseProgram program;
  while (true) {
    if (cur.try_consume("if")) {
      cur.expect("(");
      cur.expect("x");
      cur.expect("<");
      std::string lit = cur.number();
      auto t = parse_rational(lit);
      if (!t) cur.fail("malformed threshold '" + lit + "'");
      if (!program.thresholds.empty() && !(program.thresholds.back() < *t)) {
        cur.fail("thresholds must be strictly increasing");
      }
      program.thresholds.push_back(*t);
      cur.expect(")");
      cur.expect("{");
      cur.expect("return");
      program.constants.push_back(parse_line_constant(cur));
      cur.expect(";");
      cur.expect("}");
      cur.expect("else");
      cur.expect("{");
      continue;
    }
    cur.expect("return");
    program.constants.push_back(parse_line_constant(cur));
    cur.expect(";");
    break;
  }
  for (size_t i = 0; i < program.thresholds.size(); ++i) cur.expect("}");
  if (!cur.at_end()) cur.fail("trailing input after program");
  return program;
}

std::string emit_piecewise_program(const PiecewiseProgram& program) {
  std::string out;
  for (size_t i = 0; i < program.thresholds.size(); ++i) {
    out += "if (x < " + format_rational(program.thresholds[i]) + ") { return " +
           std::to_string(program.constants[i]) + "; } else { ";
  }
  out += "return " + std::to_string(program.constants.back()) + ";";
  for (size_t i = 0; i < program.thresholds.size(); ++i) out += " }";
  out += "\n";
  return out;
}

int evaluate_piecewise(const PiecewiseProgram& program, const Rational& x) {
  for (size_t i = 0; i < program.thresholds.size(); ++i) {
    if (x < program.thresholds[i]) return program.constants[i];
  }
  return program.constants.back();
}

std::vector<int> evaluate_piecewise_at(const PiecewiseProgram& program,
                                       const std::vector<Rational>& xs, int lines) {
  for (int c : program.constants) {
    if (c >= lines) {
      throw DomainError("line constant " + std::to_string(c) + " out of range 0.." +
                        std::to_string(lines - 1));
    }
  }
  std::vector<int> assignment;
  assignment.reserve(xs.size());
  for (const Rational& x : xs) assignment.push_back(evaluate_piecewise(program, x));
  return assignment;
}

PiecewiseProgram minimal_piecewise_program(const std::vector<int>& assignment,
                                           const std::vector<Rational>& xs) {
  if (assignment.size() != xs.size() || assignment.empty()) {
    throw DomainError("assignment and coordinates must have equal nonzero length");
  }
  PiecewiseProgram program;
  for (size_t i = 0; i + 1 < assignment.size(); ++i) {
    if (assignment[i] != assignment[i + 1]) {
      program.thresholds.push_back((xs[i] + xs[i + 1]) / 2);
      program.constants.push_back(assignment[i]);
    }
  }
  program.constants.push_back(assignment.back());
  return program;
}

}  // namespace capgames::dsl
