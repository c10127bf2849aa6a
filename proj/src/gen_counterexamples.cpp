#include "capgames/gen/counterexamples.hpp"

#include "capgames/errors.hpp"
#include "capgames/gen/builders.hpp"

namespace capgames::gen {

namespace {

// First load where the table changes value; 0 when constant.
int first_jump(const dnc::DelayTable& table) {
  for (int x = 1; x < table.size(); ++x) {
    if (table.at(x) != table.at(x + 1)) return x;
  }
  return 0;
}

BigInt floor_rational(const Rational& value) {
  BigInt q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

}  // namespace

DncDaSCex cex_pp_positive(const dnc::DelayTable& delay) {
  const int v = first_jump(delay);
  if (v == 0) {
    throw DomainError("no counterexample exists: the delay function is constant");
  }
  if (!(delay.at(v) > 0)) {
    throw DomainError("first jump has d(v) = 0; use the zero-case construction");
  }
  const int players = v + 1;
  const Rational rho = delay.at(v + 1) / delay.at(v);

  DncDaSCex out;
  out.first_jump = v;
  out.n1 = static_cast<int>(floor_rational(Rational(1) / (rho - 1)));
  out.n2 = static_cast<int>(floor_rational(Rational(out.n1 + 2) * rho)) - 1;
  const int n1 = out.n1, n2 = out.n2;

  dnc::DelayTable table = extend_table(delay, players);
  dnc::DncGameBuilder builder(dnc::Variant::DncDaS);
  builder.source("s").sink("t").bound(2).players(players);

  // Upper chain: n1 edges, one middle edge, n2 edges. Lower chain mirrored.
  auto chain = [&](const std::string& prefix, int edges, const std::string& from,
                   const std::string& to) {
    if (edges == 0) {
      // Caller must identify from == to; nothing to add.
      return;
    }
    add_zero_chain(builder, from, to, edges, table, prefix);
  };
  auto upper = [&](int k) { return n1 == 0 && k == 0 ? std::string("umid") : "u" + padded(k, 4); };
  (void)upper;

  std::string u_start = "ua";
  std::string u_cross = n1 == 0 ? u_start : "ub";  // end of the n1 block
  std::string u_mid = "uc";
  std::string u_end = "ud";
  chain("u1", n1, u_start, u_cross);
  builder.add_edge(u_cross, u_mid, 0, table);
  chain("u2", n2, u_mid, u_end);

  std::string l_start = "la";
  std::string l_mid1 = "lb";  // end of the n2 block
  std::string l_mid2 = "lc";  // start of the n1 block
  std::string l_end = n1 == 0 ? l_mid2 : "ld";
  chain("l1", n2, l_start, l_mid1);
  builder.add_edge(l_mid1, l_mid2, 0, table);
  chain("l2", n1, l_mid2, l_end);

  builder.add_edge(n2 == 0 ? u_mid : u_end, "t", 0, table);
  builder.add_edge(l_end, "t", 0, table);
  builder.add_edge("s", u_start, 1, table);
  builder.add_edge("s", l_start, 1, table);
  builder.add_edge(u_cross, l_mid2, 1, table);

  out.game = builder.build();
  out.w1 = -Rational(players) * Rational(n1 + n2 + 3) * delay.at(v);
  out.w2 = -Rational(players) * Rational(2 * n1 + 3) * delay.at(v + 1);
  return out;
}

DncDaSCex cex_pp_zero(const dnc::DelayTable& delay) {
  const int v = first_jump(delay);
  if (v == 0) {
    throw DomainError("no counterexample exists: the delay function is constant");
  }
  if (!(delay.at(v) == 0)) {
    throw DomainError("first jump has d(v) > 0; use the positive-case construction");
  }
  const int players = 2 * v;
  if (delay.size() < players) {
    throw DomainError("delay table must be defined up to load 2v");
  }

  DncDaSCex out;
  out.first_jump = v;
  out.n1 = 1;
  // Smallest N2 with (N2+1)/N1 > d(2v)/d(v+1).
  out.n2 = static_cast<int>(floor_rational(delay.at(2 * v) / delay.at(v + 1)));
  const int n1 = out.n1, n2 = out.n2;

  dnc::DelayTable table = extend_table(delay, players);
  dnc::DncGameBuilder builder(dnc::Variant::DncDaS);
  builder.source("s").sink("t").bound(2).players(players);

  // Lower: n2 edges, a middle default edge, n2 edges; upper: n1 edges.
  add_zero_chain(builder, "la", "lb", n2, table, "l1");
  builder.add_edge("lb", "lc", 0, table);
  add_zero_chain(builder, "lc", "ld", n2, table, "l2");
  add_zero_chain(builder, "ua", "ub", n1, table, "u1");
  builder.add_edge("ld", "t", 0, table);
  builder.add_edge("ub", "t", 0, table);
  builder.add_edge("s", "la", 1, table);
  builder.add_edge("s", "ua", 1, table);
  builder.add_edge("lb", "ua", 1, table);
  builder.add_edge("ub", "lc", 1, table);

  out.game = builder.build();
  out.w1 = 0;
  out.w2 = -Rational(players) * Rational(n1) * delay.at(2 * v);
  return out;
}

DncDaSCex cex_ap(const dnc::DelayTable& delay) {
  int v = 0;
  for (int x = 1; x <= delay.size(); ++x) {
    if (delay.at(x) != 0) {
      v = x;
      break;
    }
  }
  if (v == 0) {
    throw DomainError("AP holds universally: the delay function is zero");
  }
  const int players = v;

  dnc::DelayTable table = extend_table(delay, players);
  dnc::DncGameBuilder builder(dnc::Variant::DncDaS);
  builder.source("s").sink("t").bound(2).players(players);
  builder.add_edge("s", "m1", 1, table);
  builder.add_edge("m1", "m2", 0, table);
  builder.add_edge("m2", "t", 0, table);
  builder.add_edge("m1", "t", 1, table);

  DncDaSCex out;
  out.game = builder.build();
  out.first_jump = v;
  out.w1 = -Rational(3 * v) * delay.at(v);
  out.w2 = v == 1 ? -Rational(2) * delay.at(1) : -Rational(v) * delay.at(v);
  return out;
}

}  // namespace capgames::gen
