#pragma once

#include <string>
#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::dsl {

/// One "if (u == guard) { return target; }" case. The program tail is always
/// the default-action return.
struct PathCase {
  std::string guard;
  std::string target;

  friend bool operator==(const PathCase& a, const PathCase& b) = default;
};

/// A path program: an if-chain over the current vertex ending in
/// "return DA(u);". Guards are distinct; order is irrelevant semantically.
struct PathProgram {
  std::vector<PathCase> cases;

  friend bool operator==(const PathProgram& a, const PathProgram& b) {
    return a.cases == b.cases;
  }
};

/// Program size under the capability metric: the number of if-cases.
inline int program_size(const PathProgram& program) {
  return static_cast<int>(program.cases.size());
}

/// Recursive-descent parser for the concrete syntax
///   if (u == X) { return Y; } else { ... return DA(u); }
/// Whitespace-insensitive. Vertex names are checked at compile time, not
/// here. Throws ParseError with position; duplicate guards are rejected.
PathProgram parse_path_program(const std::string& text);

/// Canonical pretty-printer (cases sorted by guard). parse(emit(p)) == p.
std::string emit_path_program(const PathProgram& program);

/// Runs the program from the game's source: c0 = s, c_{k+1} = f_p(c_k) until
/// the sink. Throws DomainError on a revisited vertex ("cycle in program
/// path"), a guard returning a non-adjacent vertex ("illegal transition"),
/// an unknown vertex name, or a missing default action.
dnc::PathStrategy compile_path_program(const dnc::DncGame& game, const PathProgram& program);

/// Same, starting from an arbitrary vertex (the path then runs start..t).
dnc::PathStrategy compile_path_program_from(const dnc::DncGame& game, const PathProgram& program,
                                            int start);

/// Smallest program for a path: one case per unit-weight edge on it.
/// program_size(minimal_path_program(p)) equals the weighted length of p.
PathProgram minimal_path_program(const dnc::DncGame& game, const dnc::PathStrategy& path);

}  // namespace capgames::dsl
