#include "capgames/gen/partition3.hpp"

#include <numeric>

#include "capgames/errors.hpp"
#include "capgames/gen/builders.hpp"

namespace capgames::gen {

void require_valid(const Partition3Instance& inst) {
  if (inst.values.empty() || inst.values.size() % 3 != 0) {
    throw DomainError("3-partition input must hold 3m integers");
  }
  long long sum = 0;
  for (long long a : inst.values) {
    if (a <= 0) throw DomainError("3-partition integers must be positive");
    // Strict T/4 < a < T/2, compared without division.
    if (!(inst.target < 4 * a && 2 * a < inst.target)) {
      throw DomainError("3-partition integers must satisfy T/4 < a_i < T/2");
    }
    sum += a;
  }
  if (sum != static_cast<long long>(inst.m()) * inst.target) {
    throw DomainError("3-partition integers must sum to m*T");
  }
}

dnc::DncGame partition3_best_to_dnc(const Partition3Instance& inst) {
  require_valid(inst);
  const int m = inst.m();
  const int count = 3 * m;
  const long long total_bound = inst.target + count;

  dnc::DncGameBuilder builder(dnc::Variant::Dnc);
  builder.source("t" + padded(0, 2)).sink("t" + padded(count, 2));
  builder.bound(static_cast<int>(total_bound)).players(m);

  dnc::DelayTable zero = dnc::constant_table(m, Rational(0));
  dnc::DelayTable slow = dnc::constant_table(m, Rational(2));
  // d_fast(x) = 1{x>=1} + 2*1{x>=2}
  std::vector<Rational> fast_values(m, Rational(3));
  fast_values[0] = 1;
  dnc::DelayTable fast(fast_values);

  for (int i = 1; i <= count; ++i) {
    std::string prev = "t" + padded(i - 1, 2);
    std::string cur = "t" + padded(i, 2);
    std::string gadget = "s" + padded(i, 2);
    builder.add_edge(prev, cur, 1, slow);
    builder.add_edge(prev, gadget, 1, zero);
    add_weighted_edge(builder, gadget, cur, static_cast<int>(inst.values[i - 1]), fast,
                      "f" + padded(i, 2));
  }
  return builder.build();
}

dnc::DncGame partition3_worst_to_dnc(const Partition3Instance& inst) {
  require_valid(inst);
  const int m = inst.m();
  const int count = 3 * m;
  const int players = 4 * m;
  const long long total_bound = inst.target + count + 1;
  const Rational big_r = Rational(9 * m + 2);

  dnc::DncGameBuilder builder(dnc::Variant::Dnc);
  builder.source("s").sink("t" + padded(count, 2));
  builder.bound(static_cast<int>(total_bound)).players(players);

  dnc::DelayTable zero = dnc::constant_table(players, Rational(0));
  dnc::DelayTable slow = dnc::constant_table(players, Rational(3));
  // d_fast(x) = 2*1{x>=2} + 2*1{x>=3}
  std::vector<Rational> fast_values(players, Rational(4));
  fast_values[0] = 0;
  if (players >= 2) fast_values[1] = 2;
  dnc::DelayTable fast(fast_values);

  // d(s,t0)(x) = 1{x >= m+1} R
  std::vector<Rational> hub_values(players, big_r);
  for (int x = 1; x <= m && x <= players; ++x) hub_values[x - 1] = 0;
  builder.add_edge("s", "t" + padded(0, 2), 1, dnc::DelayTable(hub_values));

  // d(s,si)(x) = 1{x >= 2} R
  std::vector<Rational> gate_values(players, big_r);
  gate_values[0] = 0;
  dnc::DelayTable gate(gate_values);

  for (int i = 1; i <= count; ++i) {
    std::string prev = "t" + padded(i - 1, 2);
    std::string cur = "t" + padded(i, 2);
    std::string gadget = "s" + padded(i, 2);
    builder.add_edge(prev, cur, 1, slow);
    builder.add_edge(prev, gadget, 1, zero);
    add_weighted_edge(builder, gadget, cur, static_cast<int>(inst.values[i - 1]), fast,
                      "f" + padded(i, 2));
    add_weighted_edge(builder, "s", gadget,
                      static_cast<int>(inst.target + i - inst.values[i - 1] + 1), gate,
                      "g" + padded(i, 2));
  }
  return builder.build();
}

}  // namespace capgames::gen
