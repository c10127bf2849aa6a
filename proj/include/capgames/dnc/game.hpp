#pragma once

#include <map>
#include <string>
#include <vector>

#include "capgames/rational.hpp"

namespace capgames::dnc {

enum class Variant { Dnc, DncDa, DncDaS };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// Per-edge delay table, indexed by load x = 1..n. Must be non-decreasing
/// and at least as long as the game's player count.
struct DelayTable {
  std::vector<Rational> values;

  DelayTable() = default;
  explicit DelayTable(std::vector<Rational> v) : values(std::move(v)) {}

  /// d(x) for a 1-based load. The caller guarantees 1 <= x <= size.
  const Rational& at(int load) const { return values.at(static_cast<size_t>(load) - 1); }
  int size() const { return static_cast<int>(values.size()); }
  bool non_decreasing() const;

  friend bool operator==(const DelayTable& a, const DelayTable& b) { return a.values == b.values; }
};

/// Constant table of a given length.
DelayTable constant_table(int length, const Rational& value);

struct Edge {
  int from = -1;
  int to = -1;
  int weight = 1;  // 0 or 1; plain DNC uses 1 everywhere
  DelayTable delay;
};

/// Distance-bounded network congestion game. Vertices are referred to by
/// dense indices; ids keep the external names. Immutable once built.
struct DncGame {
  Variant variant = Variant::Dnc;
  std::vector<std::string> vertex_ids;  // sorted, index == position
  std::vector<Edge> edges;              // sorted by (from, to)
  int source = -1;
  int sink = -1;
  int bound = 0;
  int players = 1;

  // Derived, filled in by the builder.
  std::vector<std::vector<int>> out_edges;  // edge indices, sorted by target

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int vertex_index(const std::string& id) const;        // -1 when absent
  int edge_index(int from, int to) const;               // -1 when absent
  const std::string& id_of(int vertex) const { return vertex_ids.at(vertex); }
};

/// Collects vertices/edges by id, then produces a finalized DncGame with
/// sorted ids and adjacency. Not a validator; see validate_game.
class DncGameBuilder {
 public:
  explicit DncGameBuilder(Variant variant) : variant_(variant) {}

  DncGameBuilder& add_vertex(const std::string& id);
  DncGameBuilder& add_edge(const std::string& from, const std::string& to, int weight,
                           DelayTable delay);
  DncGameBuilder& source(const std::string& id);
  DncGameBuilder& sink(const std::string& id);
  DncGameBuilder& bound(int b);
  DncGameBuilder& players(int n);

  DncGame build() const;

 private:
  struct RawEdge {
    std::string from, to;
    int weight;
    DelayTable delay;
  };
  Variant variant_;
  std::vector<std::string> vertices_;
  std::vector<RawEdge> edges_;
  std::string source_, sink_;
  int bound_ = 0;
  int players_ = 1;
};

/// A player strategy: a simple s-t path within the weight bound.
struct PathStrategy {
  std::vector<int> vertices;

  friend bool operator==(const PathStrategy& a, const PathStrategy& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const PathStrategy& a, const PathStrategy& b) {
    return a.vertices < b.vertices;
  }
};

/// One strategy per player.
struct Profile {
  std::vector<PathStrategy> strategies;
};

std::string path_to_string(const DncGame& game, const PathStrategy& path);

enum class IssueCode {
  MissingDefaultAction,
  MultipleDefaultActions,
  ZeroWeightCycle,
  NegativeDelayCycle,
  NonMonotoneDelayTable,
  WeightedSourceEdge,
  SelfLoop,
  DuplicateEdge,
  BadWeight,
  TableTooShort,
  UnsharedDelayTable,
  NegativeSharedDelay,
  BadSourceSink,
  BadParameter,
};

std::string issue_code_name(IssueCode code);

struct ValidationIssue {
  IssueCode code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(IssueCode code) const;
  std::string to_string() const;
};

/// Checks every variant invariant: default-action structure, zero-weight
/// acyclicity (topological sort), the negative-delay-cycle condition under
/// d_e(1) weights (Bellman-Ford relaxation), table monotonicity and length,
/// and the DncDaS shared non-negative table.
ValidationReport validate_game(const DncGame& game);

/// Throws DomainError when validate_game reports any issue.
void require_valid(const DncGame& game);

}  // namespace capgames::dnc
