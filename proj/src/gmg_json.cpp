#include "capgames/gmg/json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace capgames::gmg {

using nlohmann::json;

std::string layout_to_json(const GmgLayout& layout) {
  json j;
  j["K"] = layout.lines;
  j["players"] = layout.players;
  j["bound"] = layout.bound;
  json gold = json::array(), mine = json::array();
  for (const Rational& v : layout.gold_payoff) gold.push_back(format_rational(v));
  for (const Rational& v : layout.mine_payoff) mine.push_back(format_rational(v));
  j["gold_payoff"] = std::move(gold);
  j["mine_payoff"] = std::move(mine);
  json resources = json::array();
  for (const Resource& r : layout.resources) {
    json jr;
    jr["x"] = format_rational(r.x);
    jr["line"] = r.line;
    jr["kind"] = r.kind == ResourceKind::Gold ? "gold" : "mine";
    resources.push_back(std::move(jr));
  }
  j["resources"] = std::move(resources);
  return j.dump(2) + "\n";
}

GmgLayout layout_from_json(const std::string& text) {
  json j = json::parse(text);
  GmgLayout layout;
  layout.lines = j.at("K").get<int>();
  layout.players = j.at("players").get<int>();
  layout.bound = j.at("bound").get<int>();
  for (const json& v : j.at("gold_payoff")) {
    layout.gold_payoff.push_back(parse_rational_or_throw(v.is_string() ? v.get<std::string>()
                                                                       : v.dump()));
  }
  for (const json& v : j.at("mine_payoff")) {
    layout.mine_payoff.push_back(parse_rational_or_throw(v.is_string() ? v.get<std::string>()
                                                                       : v.dump()));
  }
  for (const json& jr : j.at("resources")) {
    Resource r;
    const json& x = jr.at("x");
    r.x = parse_rational_or_throw(x.is_string() ? x.get<std::string>() : x.dump());
    r.line = jr.at("line").get<int>();
    std::string kind = jr.at("kind").get<std::string>();
    if (kind == "gold") {
      r.kind = ResourceKind::Gold;
    } else if (kind == "mine") {
      r.kind = ResourceKind::Mine;
    } else {
      throw std::invalid_argument("unknown resource kind: '" + kind + "'");
    }
    layout.resources.push_back(std::move(r));
  }
  return finalize_layout(std::move(layout));
}

GmgLayout load_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return layout_from_json(buffer.str());
}

void save_layout_file(const GmgLayout& layout, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << layout_to_json(layout);
}

}  // namespace capgames::gmg
