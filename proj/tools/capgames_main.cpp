#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capgames/aog/aog.hpp"
#include "capgames/dnc/enumerate.hpp"
#include "capgames/dnc/evaluate.hpp"
#include "capgames/dnc/json.hpp"
#include "capgames/dsl/path_program.hpp"
#include "capgames/dsl/piecewise_program.hpp"
#include "capgames/errors.hpp"
#include "capgames/gen/counterexamples.hpp"
#include "capgames/gen/gmg_counterexamples.hpp"
#include "capgames/gen/partition3.hpp"
#include "capgames/gen/threshold.hpp"
#include "capgames/gmg/json.hpp"
#include "capgames/props/properties.hpp"
#include "capgames/solve/dynamics.hpp"
#include "capgames/solve/enumerate_pnes.hpp"
#include "capgames/solve/view.hpp"

namespace {

using namespace capgames;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << content;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Rational> parse_table(const std::string& csv) {
  std::vector<Rational> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    values.push_back(parse_rational_or_throw(item));
  }
  if (values.empty()) throw std::invalid_argument("empty table");
  return values;
}

std::pair<int, int> parse_levels(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int single = std::stoi(text);
    return {single, single};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct CommonOpts {
  std::string out_path;
  std::uint64_t budget = 0;
  int workers = 0;
};

// Either a DNC-family game or a GMG layout, depending on the JSON shape.
struct LoadedInstance {
  bool is_gmg = false;
  dnc::DncGame game;
  gmg::GmgLayout layout;
};

LoadedInstance load_instance(const std::string& path) {
  std::string text = read_input(path);
  LoadedInstance inst;
  if (text.find("\"variant\"") != std::string::npos) {
    inst.game = dnc::game_from_json(text);
  } else {
    inst.is_gmg = true;
    inst.layout = gmg::layout_from_json(text);
  }
  return inst;
}

int cmd_validate(const std::string& input) {
  LoadedInstance inst = load_instance(input);
  dnc::ValidationReport report =
      inst.is_gmg ? gmg::validate_layout(inst.layout) : dnc::validate_game(inst.game);
  if (report.ok()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cerr << report.to_string();
  return kExitDomain;
}

int cmd_enumerate(const std::string& input, const CommonOpts& common, int level,
                  bool list_strategies, bool centralized) {
  LoadedInstance inst = load_instance(input);
  solve::EnumerateOptions opts;
  opts.budget = common.budget;
  opts.workers = common.workers;
  opts.centralized = centralized;

  std::string out;
  if (inst.is_gmg) {
    gmg::require_valid(inst.layout);
    int b = level > 0 ? level : inst.layout.bound;
    auto strategies = gmg::enumerate_strategies(inst.layout, b);
    if (list_strategies) {
      for (const auto& s : strategies) {
        std::string row;
        for (size_t i = 0; i < s.line.size(); ++i) {
          row += (i ? " " : "") + std::to_string(s.line[i]);
        }
        out += row + "\n";
      }
    } else {
      auto set = solve::enumerate_pnes(solve::make_view(inst.layout, strategies), opts);
      out += "pne_count," + std::to_string(set.count) + "\n";
      out += "bestw," + format_rational(set.bestw) + "\n";
      out += "worstw," + format_rational(set.worstw) + "\n";
      if (set.centralized) out += "centralized_best," + format_rational(*set.centralized) + "\n";
    }
  } else {
    dnc::require_valid(inst.game);
    if (level > 0) inst.game.bound = level;
    auto strategies = dnc::enumerate_strategies(inst.game);
    if (list_strategies) {
      for (const auto& path : strategies) out += dnc::path_to_string(inst.game, path) + "\n";
    } else {
      auto set = solve::enumerate_pnes(solve::make_view(inst.game, strategies), opts);
      out += "pne_count," + std::to_string(set.count) + "\n";
      out += "bestw," + format_rational(set.bestw) + "\n";
      out += "worstw," + format_rational(set.worstw) + "\n";
      if (set.centralized) out += "centralized_best," + format_rational(*set.centralized) + "\n";
    }
  }
  write_output(common.out_path, out);
  return kExitOk;
}

int cmd_solve(const std::string& input, const CommonOpts& common, const std::string& pivot,
              const std::string& trace_path, int level) {
  LoadedInstance inst = load_instance(input);
  solve::DynamicsOptions opts;
  opts.rule = solve::pivot_rule_from_name(pivot);

  solve::FiniteGameView view;
  if (inst.is_gmg) {
    gmg::require_valid(inst.layout);
    int b = level > 0 ? level : inst.layout.bound;
    view = solve::make_view(inst.layout, gmg::enumerate_strategies(inst.layout, b));
  } else {
    dnc::require_valid(inst.game);
    if (level > 0) inst.game.bound = level;
    view = solve::make_view(inst.game, dnc::enumerate_strategies(inst.game));
  }
  solve::DynamicsResult result = solve::best_response_dynamics(view, opts);
  std::string out = "steps," + std::to_string(result.trace.size()) + "\n";
  out += "welfare," + format_rational(view.profile_welfare(result.profile)) + "\n";
  std::string profile;
  for (size_t i = 0; i < result.profile.size(); ++i) {
    profile += (i ? " " : "") + std::to_string(result.profile[i]);
  }
  out += "profile," + profile + "\n";
  write_output(common.out_path, out);
  if (!trace_path.empty()) write_output(trace_path, solve::trace_to_csv(result.trace));
  return kExitOk;
}

int cmd_sweep(const std::string& input, const CommonOpts& common, const std::string& levels,
              bool centralized) {
  LoadedInstance inst = load_instance(input);
  props::SweepOptions opts;
  opts.budget = common.budget;
  opts.workers = common.workers;
  opts.centralized = centralized;
  if (!levels.empty()) {
    auto [lo, hi] = parse_levels(levels);
    opts.level_min = lo;
    opts.level_max = hi;
  }
  props::SweepResult result =
      inst.is_gmg ? props::sweep(inst.layout, opts) : props::sweep(inst.game, opts);
  write_output(common.out_path, props::sweep_to_csv(result));
  return kExitOk;
}

int cmd_aog(const CommonOpts& common, int m, const std::string& rho_text,
            const std::string& mu_text, const std::string& levels, bool brute_force,
            bool witnesses) {
  aog::AogParams params{m, parse_rational_or_throw(rho_text), parse_rational_or_throw(mu_text)};
  aog::require_valid(params);

  if (witnesses) {
    aog::WitnessPair pair = aog::necessary_condition_witnesses(params.rho, params.mu);
    aog::AogParams wp{pair.m, params.rho, params.mu};
    gmg::GmgLayout layout = aog::build_layout(wp);
    std::string out = "M," + std::to_string(pair.m) + "\n";
    out += "welfare_first," + format_rational(gmg::social_welfare(layout, pair.first)) + "\n";
    out += "welfare_second," + format_rational(gmg::social_welfare(layout, pair.second)) + "\n";
    write_output(common.out_path, out);
    return kExitOk;
  }

  int lo = 1, hi = 2 * m + 3;
  if (!levels.empty()) {
    auto [a, b] = parse_levels(levels);
    lo = a;
    hi = b;
  }
  gmg::GmgLayout layout = aog::build_layout(params);
  std::string out = "b,w_eq_closed,w_eq_bruteforce,w_best,poa\n";
  for (int b = lo; b <= hi; ++b) {
    std::string eq_bf = "NA";
    if (brute_force) {
      solve::EnumerateOptions opts;
      opts.budget = common.budget;
      opts.workers = common.workers;
      auto set =
          solve::enumerate_pnes(solve::make_view(layout, gmg::enumerate_strategies(layout, b)), opts);
      eq_bf = format_rational(set.worstw);
    }
    Rational w_eq = aog::w_eq_closed_form(params, b);
    std::string poa_text = "NA";
    if (w_eq > 0) poa_text = format_rational(aog::poa(params, b));
    out += std::to_string(b) + "," + format_rational(w_eq) + "," + eq_bf + "," +
           format_rational(aog::w_best_closed_form(params, b)) + "," + poa_text + "\n";
  }
  write_output(common.out_path, out);
  return kExitOk;
}

int cmd_parse_program(const std::string& input, const CommonOpts& common,
                      const std::string& grammar, const std::string& game_path,
                      const std::string& layout_path) {
  std::string text = read_input(input);
  std::string out;
  if (grammar == "path") {
    dsl::PathProgram program = dsl::parse_path_program(text);
    out += dsl::emit_path_program(program);
    if (!game_path.empty()) {
      dnc::DncGame game = dnc::load_game_file(game_path);
      dnc::require_valid(game);
      out += "path," + dnc::path_to_string(game, dsl::compile_path_program(game, program)) + "\n";
    }
  } else if (grammar == "piecewise") {
    dsl::PiecewiseProgram program = dsl::parse_piecewise_program(text);
    out += dsl::emit_piecewise_program(program);
    if (!layout_path.empty()) {
      gmg::GmgLayout layout = gmg::load_layout_file(layout_path);
      gmg::require_valid(layout);
      std::vector<Rational> xs;
      for (const auto& r : layout.resources) xs.push_back(r.x);
      std::vector<int> assignment = dsl::evaluate_piecewise_at(program, xs, layout.lines);
      std::string row;
      for (size_t i = 0; i < assignment.size(); ++i) {
        row += (i ? " " : "") + std::to_string(assignment[i]);
      }
      out += "assignment," + row + "\n";
    }
  } else {
    throw std::invalid_argument("grammar must be 'path' or 'piecewise'");
  }
  write_output(common.out_path, out);
  return kExitOk;
}

gen::ThresholdGame threshold_from_json(const std::string& text);

int cmd_construct(const CLI::App& app, const CommonOpts& common) {
  const CLI::App* sub = app.get_subcommands().front();
  std::string kind = sub->get_name();
  std::string out;

  auto opt_str = [&](const std::string& name) { return sub->get_option(name)->as<std::string>(); };
  auto opt_int = [&](const std::string& name) { return sub->get_option(name)->as<int>(); };

  if (kind == "threshold") {
    int n = opt_int("--n");
    gen::ThresholdGame tg;
    std::string tables = opt_str("--tables");
    if (tables.empty()) {
      std::vector<Rational> pair_values, self_values;
      for (int x = 1; x <= n; ++x) pair_values.push_back(Rational(x));
      for (int x = 1; x <= n; ++x) self_values.push_back(Rational(x) + Rational(n, 2));
      tg = gen::uniform_threshold_game(n, dnc::DelayTable(pair_values),
                                       dnc::DelayTable(self_values));
    } else {
      tg = threshold_from_json(read_input(tables));
    }
    out = dnc::game_to_json(gen::threshold_to_dnc(tg).game);
  } else if (kind == "partition3-best" || kind == "partition3-worst") {
    gen::Partition3Instance inst;
    for (const Rational& v : parse_table(opt_str("--set"))) {
      inst.values.push_back(static_cast<long long>(numerator(v)));
    }
    inst.target = opt_int("--target");
    dnc::DncGame game = kind == "partition3-best" ? gen::partition3_best_to_dnc(inst)
                                                  : gen::partition3_worst_to_dnc(inst);
    if (sub->get_option("--centralized")->as<bool>()) {
      solve::EnumerateOptions opts;
      opts.budget = common.budget;
      opts.workers = common.workers;
      opts.centralized = true;
      auto set = solve::enumerate_pnes(solve::make_view(game, dnc::enumerate_strategies(game)), opts);
      std::cout << "centralized_best," << format_rational(*set.centralized) << "\n";
      if (common.out_path.empty()) return kExitOk;  // JSON must go to a file
    }
    out = dnc::game_to_json(game);
  } else if (kind == "cex-pp-positive" || kind == "cex-pp-zero" || kind == "cex-ap") {
    dnc::DelayTable table{parse_table(opt_str("--delay"))};
    gen::DncDaSCex cex = kind == "cex-pp-positive" ? gen::cex_pp_positive(table)
                         : kind == "cex-pp-zero"   ? gen::cex_pp_zero(table)
                                                   : gen::cex_ap(table);
    out = dnc::game_to_json(cex.game);
  } else if (kind == "gmg-cex-pp") {
    auto table = parse_table(opt_str("--table"));
    auto res_kind = opt_str("--kind") == "mine" ? gmg::ResourceKind::Mine : gmg::ResourceKind::Gold;
    out = gmg::layout_to_json(gen::gmg_cex_pp(res_kind, table).layout);
  } else if (kind == "gmg-cex-bwr") {
    out = gmg::layout_to_json(gen::gmg_cex_bwr(parse_table(opt_str("--table")), opt_int("--players"))
                                  .layout);
  } else if (kind == "gmg-cex-bfr") {
    out = gmg::layout_to_json(gen::gmg_cex_bfr(parse_table(opt_str("--table"))).layout);
  } else {
    throw std::invalid_argument("unknown construction: " + kind);
  }
  write_output(common.out_path, out);
  return kExitOk;
}

gen::ThresholdGame threshold_from_json(const std::string& text) {
  // {"n": N, "pair_delay": [{"i","j","delay":[...]}], "self_delay": [[...],...]}
  auto j = nlohmann::json::parse(text);
  gen::ThresholdGame tg;
  tg.n = j.at("n").get<int>();
  for (const auto& e : j.at("pair_delay")) {
    std::vector<Rational> values;
    for (const auto& d : e.at("delay")) {
      values.push_back(parse_rational_or_throw(d.is_string() ? d.get<std::string>() : d.dump()));
    }
    tg.pair_delay[{e.at("i").get<int>(), e.at("j").get<int>()}] = dnc::DelayTable(values);
  }
  for (const auto& row : j.at("self_delay")) {
    std::vector<Rational> values;
    for (const auto& d : row) {
      values.push_back(parse_rational_or_throw(d.is_string() ? d.get<std::string>() : d.dump()));
    }
    tg.self_delay.push_back(dnc::DelayTable(values));
  }
  return tg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capgames: a solver workbench for capability-bounded congestion games"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--out", common.out_path, "write results to a file instead of stdout");
  app.add_option("--budget", common.budget, "profile-enumeration budget (default CAPGAMES_BUDGET)");
  app.add_option("--workers", common.workers, "worker threads for enumeration (default: cores)");

  std::string input, levels, pivot = "max", trace_path, grammar = "path";
  std::string game_path, layout_path, rho_text, mu_text;
  int level = 0, m_param = 1;
  bool list_strategies = false, centralized = false, brute_force = false, witnesses = false;
  bool csv_flag = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a game or layout JSON file");
  validate->add_option("input", input)->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate equilibria (or strategies)");
  enumerate->add_option("input", input)->required();
  enumerate->add_option("--level", level, "capability level override");
  enumerate->add_flag("--strategies", list_strategies, "list the strategy space instead");
  enumerate->add_flag("--centralized", centralized, "also report the centralized optimum");

  CLI::App* solve_cmd = app.add_subcommand("solve", "best-response dynamics to one equilibrium");
  solve_cmd->add_option("input", input)->required();
  solve_cmd->add_option("--pivot", pivot, "pivot rule: max | roundrobin");
  solve_cmd->add_option("--trace", trace_path, "write the step trace CSV here");
  solve_cmd->add_option("--level", level, "capability level override");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "equilibrium welfare per capability level");
  sweep_cmd->add_option("input", input)->required();
  sweep_cmd->add_option("--levels", levels, "level range, e.g. 1..4");
  sweep_cmd->add_flag("--centralized", centralized, "also compute centralized optima");

  CLI::App* construct = app.add_subcommand("construct", "generate a named instance family");
  construct->require_subcommand(1);
  CLI::App* thr = construct->add_subcommand("threshold", "quadratic threshold reduction");
  thr->add_option("--n", m_param)->required();
  thr->add_option("--tables", game_path)->default_val("");
  for (const char* name : {"partition3-best", "partition3-worst"}) {
    CLI::App* p3 = construct->add_subcommand(name);
    p3->add_option("--set", grammar)->required();
    p3->add_option("--target", level)->required();
    p3->add_flag("--centralized");
  }
  for (const char* name : {"cex-pp-positive", "cex-pp-zero", "cex-ap"}) {
    construct->add_subcommand(name)->add_option("--delay", grammar)->required();
  }
  CLI::App* gpp = construct->add_subcommand("gmg-cex-pp");
  gpp->add_option("--kind", pivot)->required();
  gpp->add_option("--table", grammar)->required();
  CLI::App* gbwr = construct->add_subcommand("gmg-cex-bwr");
  gbwr->add_option("--table", grammar)->required();
  gbwr->add_option("--players", m_param)->required();
  construct->add_subcommand("gmg-cex-bfr")->add_option("--table", grammar)->required();

  CLI::App* aog_cmd = app.add_subcommand("aog", "alternating-ordering closed forms and sweeps");
  aog_cmd->add_option("--M", m_param)->required();
  aog_cmd->add_option("--rho", rho_text)->required();
  aog_cmd->add_option("--mu", mu_text)->required();
  aog_cmd->add_option("--levels", levels, "level range, e.g. 1..24");
  aog_cmd->add_flag("--csv", csv_flag, "accepted for symmetry; CSV is the output format");
  aog_cmd->add_flag("--brute-force", brute_force, "also brute-force per-level welfare");
  aog_cmd->add_flag("--witnesses", witnesses, "emit the two distinct-welfare equilibria");

  CLI::App* parse_cmd = app.add_subcommand("parse-program", "parse/emit a strategy program");
  parse_cmd->add_option("input", input, "program file (or - for stdin)")->default_val("-");
  parse_cmd->add_option("--grammar", grammar, "path | piecewise");
  parse_cmd->add_option("--game", game_path, "compile against this game JSON");
  parse_cmd->add_option("--layout", layout_path, "evaluate against this layout JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(input);
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(input, common, level, list_strategies, centralized);
    }
    if (app.got_subcommand(solve_cmd)) return cmd_solve(input, common, pivot, trace_path, level);
    if (app.got_subcommand(sweep_cmd)) return cmd_sweep(input, common, levels, centralized);
    if (app.got_subcommand(construct)) return cmd_construct(*construct, common);
    if (app.got_subcommand(aog_cmd)) {
      return cmd_aog(common, m_param, rho_text, mu_text, levels, brute_force, witnesses);
    }
    if (app.got_subcommand(parse_cmd)) {
      return cmd_parse_program(input, common, grammar, game_path, layout_path);
    }
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
