#pragma once

#include <string>
#include <vector>

#include "capgames/dnc/game.hpp"

namespace capgames::gen {

/// Expands an edge of weight w >= 1 into w unit edges through w-1 fresh
/// vertices named "<prefix>c<k>". The delay table sits on the first unit
/// edge; the rest are zero-delay, so the chain's traversal delay equals the
/// original weighted edge's at every load. Returns the full id sequence
/// from..to. Zero-weight edges are DncDa defaults, not chains; w = 0 throws.
std::vector<std::string> add_weighted_edge(dnc::DncGameBuilder& builder, const std::string& from,
                                           const std::string& to, int weight,
                                           const dnc::DelayTable& delay,
                                           const std::string& prefix);

/// A chain of `count` zero-weight edges with the given shared delay table,
/// through fresh vertices "<prefix>c<k>". Returns the id sequence.
std::vector<std::string> add_zero_chain(dnc::DncGameBuilder& builder, const std::string& from,
                                        const std::string& to, int count,
                                        const dnc::DelayTable& delay, const std::string& prefix);

/// Non-decreasing table extended to `length` by repeating the last value.
dnc::DelayTable extend_table(const dnc::DelayTable& table, int length);

std::string padded(int value, int width);

}  // namespace capgames::gen
