#include <algorithm>
#include <queue>

#include "capgames/dnc/game.hpp"

namespace capgames::dnc {

namespace {

void check_structure(const DncGame& game, ValidationReport& report) {
  if (game.source < 0 || game.sink < 0) {
    report.issues.push_back({IssueCode::BadSourceSink, "source or sink vertex missing"});
  } else if (game.source == game.sink) {
    report.issues.push_back({IssueCode::BadSourceSink, "source equals sink"});
  }
  if (game.players < 1) {
    report.issues.push_back({IssueCode::BadParameter, "player count must be positive"});
  }
  if (game.bound < 0) {
    report.issues.push_back({IssueCode::BadParameter, "distance bound must be non-negative"});
  }

  for (size_t i = 0; i < game.edges.size(); ++i) {
    const Edge& e = game.edges[i];
    const std::string label = game.id_of(e.from) + "->" + game.id_of(e.to);
    if (e.from == e.to) {
      report.issues.push_back({IssueCode::SelfLoop, "self-loop at " + game.id_of(e.from)});
    }
    if (i > 0 && game.edges[i - 1].from == e.from && game.edges[i - 1].to == e.to) {
      report.issues.push_back({IssueCode::DuplicateEdge, "duplicate edge " + label});
    }
    if (e.weight != 0 && e.weight != 1) {
      report.issues.push_back({IssueCode::BadWeight, "edge " + label + " has weight outside {0,1}"});
    }
    if (game.variant == Variant::Dnc && e.weight != 1) {
      report.issues.push_back({IssueCode::BadWeight, "DNC edge " + label + " must have unit weight"});
    }
    if (!e.delay.non_decreasing()) {
      report.issues.push_back(
          {IssueCode::NonMonotoneDelayTable, "delay table on " + label + " is decreasing"});
    }
    if (e.delay.size() < game.players) {
      report.issues.push_back({IssueCode::TableTooShort,
                               "delay table on " + label + " shorter than player count"});
    }
  }
}

void check_default_actions(const DncGame& game, ValidationReport& report) {
  for (int v = 0; v < game.vertex_count(); ++v) {
    if (v == game.source || v == game.sink) continue;
    int zero_out = 0;
    for (int e : game.out_edges[v]) {
      if (game.edges[e].weight == 0) ++zero_out;
    }
    if (zero_out == 0) {
      report.issues.push_back(
          {IssueCode::MissingDefaultAction, "vertex " + game.id_of(v) + " has no default action"});
    } else if (zero_out > 1) {
      report.issues.push_back({IssueCode::MultipleDefaultActions,
                               "vertex " + game.id_of(v) + " has multiple default actions"});
    }
  }
  if (game.source >= 0) {
    for (int e : game.out_edges[game.source]) {
      if (game.edges[e].weight == 0) {
        report.issues.push_back({IssueCode::WeightedSourceEdge,
                                 "source edge to " + game.id_of(game.edges[e].to) +
                                     " must have unit weight"});
      }
    }
  }
}

// Kahn's algorithm restricted to zero-weight edges.
void check_zero_weight_acyclic(const DncGame& game, ValidationReport& report) {
  std::vector<int> indeg(game.vertex_count(), 0);
  for (const Edge& e : game.edges) {
    if (e.weight == 0) ++indeg[e.to];
  }
  std::queue<int> ready;
  for (int v = 0; v < game.vertex_count(); ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++seen;
    for (int e : game.out_edges[v]) {
      if (game.edges[e].weight != 0) continue;
      if (--indeg[game.edges[e].to] == 0) ready.push(game.edges[e].to);
    }
  }
  if (seen != game.vertex_count()) {
    report.issues.push_back(
        {IssueCode::ZeroWeightCycle, "the zero-weight subgraph contains a cycle"});
  }
}

// Bellman-Ford relaxation with weights d_e(1) from a virtual source attached
// to every vertex; an |V|-th improving pass certifies a negative cycle.
void check_negative_delay_cycle(const DncGame& game, ValidationReport& report) {
  const int n = game.vertex_count();
  std::vector<Rational> dist(n, Rational(0));
  bool changed = true;
  for (int pass = 0; pass < n && changed; ++pass) {
    changed = false;
    for (const Edge& e : game.edges) {
      if (e.delay.size() == 0) continue;
      Rational cand = dist[e.from] + e.delay.at(1);
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
  }
  if (changed) {
    report.issues.push_back(
        {IssueCode::NegativeDelayCycle, "a cycle has negative total delay at load 1"});
  }
}

void check_shared_table(const DncGame& game, ValidationReport& report) {
  if (game.edges.empty()) return;
  const DelayTable& first = game.edges.front().delay;
  for (const Edge& e : game.edges) {
    if (!(e.delay == first)) {
      report.issues.push_back(
          {IssueCode::UnsharedDelayTable, "DncDaS requires one shared delay table"});
      break;
    }
  }
  for (const Rational& v : first.values) {
    if (v < 0) {
      report.issues.push_back(
          {IssueCode::NegativeSharedDelay, "DncDaS shared delay table must be non-negative"});
      break;
    }
  }
}

}  // namespace

ValidationReport validate_game(const DncGame& game) {
  ValidationReport report;
  check_structure(game, report);
  if (game.variant != Variant::Dnc) {
    check_default_actions(game, report);
    check_zero_weight_acyclic(game, report);
  }
  check_negative_delay_cycle(game, report);
  if (game.variant == Variant::DncDaS) {
    check_shared_table(game, report);
  }
  return report;
}

}  // namespace capgames::dnc
