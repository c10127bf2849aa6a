#include "capgames/dnc/json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capgames::dnc {

using nlohmann::json;

namespace {

std::string id_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("vertex id must be a string or integer");
}

}  // namespace

std::string game_to_json(const DncGame& game) {
  json j;
  j["variant"] = variant_name(game.variant);
  j["vertices"] = game.vertex_ids;
  json edges = json::array();
  for (const Edge& e : game.edges) {
    json je;
    je["from"] = game.id_of(e.from);
    je["to"] = game.id_of(e.to);
    je["weight"] = e.weight;
    json delay = json::array();
    for (const Rational& v : e.delay.values) delay.push_back(format_rational(v));
    je["delay"] = delay;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  j["source"] = game.id_of(game.source);
  j["sink"] = game.id_of(game.sink);
  j["bound"] = game.bound;
  j["players"] = game.players;
  return j.dump(2) + "\n";
}

DncGame game_from_json(const std::string& text) {
  json j = json::parse(text);
  DncGameBuilder builder(variant_from_name(j.at("variant").get<std::string>()));
  for (const json& v : j.at("vertices")) builder.add_vertex(id_from_json(v));
  for (const json& je : j.at("edges")) {
    std::vector<Rational> delay;
    for (const json& d : je.at("delay")) {
      delay.push_back(parse_rational_or_throw(d.is_string() ? d.get<std::string>()
                                                            : d.dump()));
    }
    builder.add_edge(id_from_json(je.at("from")), id_from_json(je.at("to")),
                     je.at("weight").get<int>(), DelayTable(std::move(delay)));
  }
  builder.source(id_from_json(j.at("source")));
  builder.sink(id_from_json(j.at("sink")));
  builder.bound(j.at("bound").get<int>());
  builder.players(j.at("players").get<int>());
  return builder.build();
}

DncGame load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return game_from_json(buffer.str());
}

void save_game_file(const DncGame& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << game_to_json(game);
}

}  // namespace capgames::dnc
