#include "capgames/dsl/path_program.hpp"

#include <algorithm>
#include <set>

#include "capgames/errors.hpp"
#include "dsl_cursor.hpp"

namespace capgames::dsl {

namespace {

using detail::Cursor;

void parse_tail(Cursor& cur) {
  cur.expect("return");
  if (cur.try_consume("DA")) {
    cur.expect("(");
    cur.expect("u");
    cur.expect(")");
    cur.expect(";");
    return;
  }
  cur.fail("expected 'DA(u);'");
}

void parse_program(Cursor& cur, PathProgram& program) {
  if (cur.try_consume("if")) {
    cur.expect("(");
    cur.expect("u");
    cur.expect("==");
    PathCase c;
    c.guard = cur.word();
    cur.expect(")");
    cur.expect("{");
    cur.expect("return");
    c.target = cur.word();
    cur.expect(";");
    cur.expect("}");
    program.cases.push_back(std::move(c));
    cur.expect("else");
    cur.expect("{");
    parse_program(cur, program);
    cur.expect("}");
    return;
  }
  parse_tail(cur);
}

}  // namespace

PathProgram parse_path_program(const std::string& text) {
  Cursor cur(text);
  PathProgram program;
  parse_program(cur, program);
  if (!cur.at_end()) cur.fail("trailing input after program");
  std::set<std::string> guards;
  for (const PathCase& c : program.cases) {
    if (!guards.insert(c.guard).second) {
      throw ParseError("duplicate guard '" + c.guard + "'", 1, 1);
    }
  }
  return program;
}

std::string emit_path_program(const PathProgram& program) {
  std::vector<PathCase> cases = program.cases;
  std::sort(cases.begin(), cases.end(),
            [](const PathCase& a, const PathCase& b) { return a.guard < b.guard; });
  std::string out;
  for (const PathCase& c : cases) {
    out += "if (u == " + c.guard + ") { return " + c.target + "; } else { ";
  }
  out += "return DA(u);";
  for (size_t i = 0; i < cases.size(); ++i) out += " }";
  out += "\n";
  return out;
}

dnc::PathStrategy compile_path_program_from(const dnc::DncGame& game, const PathProgram& program,
                                            int start) {
  // Guard table, vertex-indexed.
  std::vector<int> target(game.vertex_count(), -1);
  for (const PathCase& c : program.cases) {
    int g = game.vertex_index(c.guard);
    if (g < 0) throw DomainError("unknown vertex '" + c.guard + "' in program guard");
    int t = game.vertex_index(c.target);
    if (t < 0) throw DomainError("unknown vertex '" + c.target + "' in program return");
    target[g] = t;
  }
  std::vector<int> default_to(game.vertex_count(), -1);
  for (const dnc::Edge& e : game.edges) {
    if (e.weight == 0) default_to[e.from] = e.to;
  }

  dnc::PathStrategy path;
  std::vector<bool> visited(game.vertex_count(), false);
  int v = start;
  path.vertices.push_back(v);
  visited[v] = true;
  while (v != game.sink) {
    int next = target[v];
    if (next >= 0) {
      if (game.edge_index(v, next) < 0) {
        throw DomainError("illegal transition: no edge " + game.id_of(v) + "->" +
                          game.id_of(next));
      }
    } else {
      next = default_to[v];
      if (next < 0) {
        throw DomainError("no default action at vertex " + game.id_of(v));
      }
    }
    if (visited[next]) {
      throw DomainError("cycle in program path at vertex " + game.id_of(next));
    }
    visited[next] = true;
    path.vertices.push_back(next);
    v = next;
  }
  return path;
}

dnc::PathStrategy compile_path_program(const dnc::DncGame& game, const PathProgram& program) {
  return compile_path_program_from(game, program, game.source);
}

PathProgram minimal_path_program(const dnc::DncGame& game, const dnc::PathStrategy& path) {
  PathProgram program;
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    int e = game.edge_index(path.vertices[i], path.vertices[i + 1]);
    if (e < 0) throw DomainError("not a path in this game");
    if (game.edges[e].weight == 1) {
      program.cases.push_back(
          PathCase{game.id_of(path.vertices[i]), game.id_of(path.vertices[i + 1])});
    }
  }
  std::sort(program.cases.begin(), program.cases.end(),
            [](const PathCase& a, const PathCase& b) { return a.guard < b.guard; });
  return program;
}

}  // namespace capgames::dsl
