#include "capgames/gen/threshold.hpp"

#include <algorithm>

#include "capgames/errors.hpp"
#include "capgames/gen/builders.hpp"

namespace capgames::gen {

std::vector<std::string> add_weighted_edge(dnc::DncGameBuilder& builder, const std::string& from,
                                           const std::string& to, int weight,
                                           const dnc::DelayTable& delay,
                                           const std::string& prefix) {
  if (weight < 1) throw DomainError("weighted-edge expansion requires weight >= 1");
  dnc::DelayTable zero = dnc::constant_table(delay.size(), Rational(0));
  std::vector<std::string> ids{from};
  for (int k = 1; k < weight; ++k) ids.push_back(prefix + "c" + padded(k, 3));
  ids.push_back(to);
  for (int k = 0; k + 1 < static_cast<int>(ids.size()); ++k) {
    builder.add_edge(ids[k], ids[k + 1], 1, k == 0 ? delay : zero);
  }
  return ids;
}

std::vector<std::string> add_zero_chain(dnc::DncGameBuilder& builder, const std::string& from,
                                        const std::string& to, int count,
                                        const dnc::DelayTable& delay, const std::string& prefix) {
  if (count < 1) throw DomainError("zero chain requires at least one edge");
  std::vector<std::string> ids{from};
  for (int k = 1; k < count; ++k) ids.push_back(prefix + "c" + padded(k, 3));
  ids.push_back(to);
  for (int k = 0; k + 1 < static_cast<int>(ids.size()); ++k) {
    builder.add_edge(ids[k], ids[k + 1], 0, delay);
  }
  return ids;
}

dnc::DelayTable extend_table(const dnc::DelayTable& table, int length) {
  if (table.size() == 0) throw DomainError("cannot extend an empty delay table");
  dnc::DelayTable out = table;
  while (out.size() < length) out.values.push_back(out.values.back());
  return out;
}

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

namespace {

std::string pair_key(int i, int j) {
  return "r" + padded(std::min(i, j), 2) + "_" + padded(std::max(i, j), 2);
}

std::string self_key(int i) { return "r" + padded(i, 2); }

}  // namespace

const dnc::DelayTable& ThresholdGame::pair_table(int i, int j) const {
  auto it = pair_delay.find({std::min(i, j), std::max(i, j)});
  if (it == pair_delay.end()) throw DomainError("missing pair resource table");
  return it->second;
}

ThresholdGame uniform_threshold_game(int n, const dnc::DelayTable& pair_table,
                                     const dnc::DelayTable& self_table) {
  ThresholdGame tg;
  tg.n = n;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) tg.pair_delay[{i, j}] = pair_table;
  }
  tg.self_delay.assign(n, self_table);
  return tg;
}

ThresholdDnc threshold_to_dnc(const ThresholdGame& tg) {
  const int n = tg.n;
  if (n < 2) throw DomainError("threshold reduction requires n >= 2");

  // All delay tables extended to n loads; R exceeds any possible sum of
  // resource delays, so gate edges dominate route choice.
  Rational gate = 1;
  auto table_max = [&](const dnc::DelayTable& t) { return t.values.back(); };
  std::map<std::pair<int, int>, dnc::DelayTable> pairs;
  std::vector<dnc::DelayTable> selfs(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs[{i, j}] = extend_table(tg.pair_table(i, j), n);
      gate += table_max(pairs[{i, j}]);
    }
    if (static_cast<int>(tg.self_delay.size()) < n) {
      throw DomainError("threshold game needs one self resource per player");
    }
    selfs[i] = extend_table(tg.self_delay[i - 1], n);
    gate += table_max(selfs[i]);
  }
  const Rational big_r = gate;  // R = sum of max delays + 1
  const int b = n * n + 3;

  dnc::DncGameBuilder builder(dnc::Variant::Dnc);
  builder.source("s").sink("t").bound(b).players(n);
  dnc::DelayTable zero = dnc::constant_table(n, Rational(0));

  ThresholdDnc out;
  out.n = n;
  out.bound = b;
  out.gate_constant = big_r;

  // Grid vertex ids; off-diagonal vertices split into an in/out pair with a
  // unit resource edge between them.
  auto vin = [&](int i, int j) {
    std::string base = "v" + padded(i, 2) + "_" + padded(j, 2);
    return i == j ? base : base + "a";
  };
  auto vout = [&](int i, int j) {
    std::string base = "v" + padded(i, 2) + "_" + padded(j, 2);
    return i == j ? base : base + "b";
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      builder.add_edge(vin(i, j), vout(i, j), 1, pairs[{j, i}]);
      out.resource_ids[pair_key(j, i)] = std::pair<std::string, std::string>(vin(i, j), vout(i, j));
    }
  }
  // Horizontal edges of length i along row i, vertical unit edges down each
  // column.
  std::vector<std::vector<std::vector<std::string>>> horizontal(n + 1);
  for (int i = 1; i <= n; ++i) {
    horizontal[i].resize(i);
    for (int j = 1; j < i; ++j) {
      horizontal[i][j - 1] = add_weighted_edge(builder, vout(i, j), vin(i, j + 1), i, zero,
                                               "h" + padded(i, 2) + "_" + padded(j, 2));
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i < n; ++i) {
      builder.add_edge(vout(i, j), vin(i + 1, j), 1, zero);
    }
  }

  std::vector<std::vector<std::string>> s_chain(n + 1), jump_chain(n + 1);
  for (int i = 1; i <= n; ++i) {
    std::string si = "si" + padded(i, 2);
    std::string ti = "ti" + padded(i, 2);
    builder.add_edge(si, vin(i, 1), 1, zero);
    builder.add_edge(vout(n, i), ti, 1, zero);

    const int w_i = i * (i - 2) + 2 * n + 1;
    jump_chain[i] = add_weighted_edge(builder, si, ti, w_i, selfs[i], "j" + padded(i, 2));
    out.resource_ids[self_key(i)] =
        std::pair<std::string, std::string>(jump_chain[i][0], jump_chain[i][1]);
    out.jump_weight.push_back(w_i);

    // Gate delays: d(s,si)(x) = 1{x>=2} (n+1)R, d(ti,t)(x) = (n-i)R.
    std::vector<Rational> entry(n, Rational(n + 1) * big_r);
    entry[0] = 0;
    s_chain[i] =
        add_weighted_edge(builder, "s", si, b - w_i - 1, dnc::DelayTable(entry), "e" + padded(i, 2));
    builder.add_edge(ti, "t", 1, dnc::constant_table(n, Rational(n - i) * big_r));
  }

  out.game = builder.build();

  // Canonical strategies: the grid route (S_in) and the jump route (S_out),
  // per player.
  auto to_path = [&](const std::vector<std::string>& ids) {
    dnc::PathStrategy p;
    for (const std::string& id : ids) p.vertices.push_back(out.game.vertex_index(id));
    return p;
  };
  for (int i = 1; i <= n; ++i) {
    std::vector<std::string> in_ids = s_chain[i];
    in_ids.push_back(vin(i, 1));
    if (i > 1) in_ids.push_back(vout(i, 1));
    for (int j = 1; j < i; ++j) {
      const auto& chain = horizontal[i][j - 1];
      in_ids.insert(in_ids.end(), chain.begin() + 1, chain.end());
      if (j + 1 < i) in_ids.push_back(vout(i, j + 1));
    }
    for (int k = i; k < n; ++k) {
      in_ids.push_back(vin(k + 1, i));
      in_ids.push_back(vout(k + 1, i));
    }
    in_ids.push_back("ti" + padded(i, 2));
    in_ids.push_back("t");
    // Deduplicate adjacent ids created by diagonal vertices.
    std::vector<std::string> cleaned;
    for (const std::string& id : in_ids) {
      if (cleaned.empty() || cleaned.back() != id) cleaned.push_back(id);
    }
    out.in_path.push_back(to_path(cleaned));

    std::vector<std::string> out_ids = s_chain[i];
    out_ids.insert(out_ids.end(), jump_chain[i].begin() + 1, jump_chain[i].end());
    out_ids.push_back("t");
    out.out_path.push_back(to_path(out_ids));
  }
  return out;
}

}  // namespace capgames::gen
