#include "capgames/dnc/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "capgames/errors.hpp"

namespace capgames::dnc {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Dnc: return "dnc";
    case Variant::DncDa: return "dncda";
    case Variant::DncDaS: return "dncdas";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "dnc") return Variant::Dnc;
  if (name == "dncda") return Variant::DncDa;
  if (name == "dncdas") return Variant::DncDaS;
  throw DomainError("unknown game variant: '" + name + "'");
}

bool DelayTable::non_decreasing() const {
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) return false;
  }
  return true;
}

DelayTable constant_table(int length, const Rational& value) {
  return DelayTable(std::vector<Rational>(static_cast<size_t>(length), value));
}

int DncGame::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id);
  if (it == vertex_ids.end() || *it != id) return -1;
  return static_cast<int>(it - vertex_ids.begin());
}

int DncGame::edge_index(int from, int to) const {
  for (int e : out_edges.at(from)) {
    if (edges[e].to == to) return e;
  }
  return -1;
}

DncGameBuilder& DncGameBuilder::add_vertex(const std::string& id) {
  vertices_.push_back(id);
  return *this;
}

DncGameBuilder& DncGameBuilder::add_edge(const std::string& from, const std::string& to, int weight,
                                         DelayTable delay) {
  vertices_.push_back(from);
  vertices_.push_back(to);
  edges_.push_back(RawEdge{from, to, weight, std::move(delay)});
  return *this;
}

DncGameBuilder& DncGameBuilder::source(const std::string& id) {
  source_ = id;
  vertices_.push_back(id);
  return *this;
}

DncGameBuilder& DncGameBuilder::sink(const std::string& id) {
  sink_ = id;
  vertices_.push_back(id);
  return *this;
}

DncGameBuilder& DncGameBuilder::bound(int b) {
  bound_ = b;
  return *this;
}

DncGameBuilder& DncGameBuilder::players(int n) {
  players_ = n;
  return *this;
}

DncGame DncGameBuilder::build() const {
  DncGame game;
  game.variant = variant_;
  game.bound = bound_;
  game.players = players_;

  game.vertex_ids = vertices_;
  std::sort(game.vertex_ids.begin(), game.vertex_ids.end());
  game.vertex_ids.erase(std::unique(game.vertex_ids.begin(), game.vertex_ids.end()),
                        game.vertex_ids.end());

  game.source = game.vertex_index(source_);
  game.sink = game.vertex_index(sink_);

  for (const RawEdge& raw : edges_) {
    Edge e;
    e.from = game.vertex_index(raw.from);
    e.to = game.vertex_index(raw.to);
    e.weight = raw.weight;
    e.delay = raw.delay;
    game.edges.push_back(std::move(e));
  }
  std::sort(game.edges.begin(), game.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });

  game.out_edges.assign(game.vertex_ids.size(), {});
  for (int i = 0; i < game.edge_count(); ++i) {
    game.out_edges[game.edges[i].from].push_back(i);
  }
  return game;
}

std::string path_to_string(const DncGame& game, const PathStrategy& path) {
  std::string out = "(";
  for (size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += ",";
    out += game.id_of(path.vertices[i]);
  }
  out += ")";
  return out;
}

std::string issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::MissingDefaultAction: return "missing_default_action";
    case IssueCode::MultipleDefaultActions: return "multiple_default_actions";
    case IssueCode::ZeroWeightCycle: return "zero_weight_cycle";
    case IssueCode::NegativeDelayCycle: return "negative_delay_cycle";
    case IssueCode::NonMonotoneDelayTable: return "non_monotone_delay_table";
    case IssueCode::WeightedSourceEdge: return "weighted_source_edge";
    case IssueCode::SelfLoop: return "self_loop";
    case IssueCode::DuplicateEdge: return "duplicate_edge";
    case IssueCode::BadWeight: return "bad_weight";
    case IssueCode::TableTooShort: return "table_too_short";
    case IssueCode::UnsharedDelayTable: return "unshared_delay_table";
    case IssueCode::NegativeSharedDelay: return "negative_shared_delay";
    case IssueCode::BadSourceSink: return "bad_source_sink";
    case IssueCode::BadParameter: return "bad_parameter";
  }
  return "?";
}

bool ValidationReport::has(IssueCode code) const {
  for (const auto& issue : issues) {
    if (issue.code == code) return true;
  }
  return false;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string out;
  for (const auto& issue : issues) {
    out += issue_code_name(issue.code) + ": " + issue.message + "\n";
  }
  return out;
}

void require_valid(const DncGame& game) {
  ValidationReport report = validate_game(game);
  if (!report.ok()) throw DomainError("invalid game:\n" + report.to_string());
}

}  // namespace capgames::dnc
