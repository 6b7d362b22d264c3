#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maniplex/maniplex.hpp"

namespace maniplex {

struct MixResult {
  Maniplex maniplex;
  /// coordinates[v] = (flag of M, flag of N) for mix flag v.
  std::vector<std::pair<Flag, Flag>> coordinates;
};

/// Component through (base_m, base_n) of the product graph with
/// (a, u)^i = (a^i, u^i). Flags are numbered in BFS order from the base pair,
/// colours tried in increasing order.
/// Throws RankMismatch, or OutOfRange for a bad base flag.
MixResult mix(const Maniplex& m, const Maniplex& n, Flag base_m = 0, Flag base_n = 0);

/// A colour-commuting surjection M -> N, trying images of flag 0 of M in
/// flag order. Throws RankMismatch.
std::optional<std::vector<Flag>> find_covering(const Maniplex& m, const Maniplex& n);

/// Checks that `map` commutes with every colour and is onto.
bool is_covering(const Maniplex& m, const Maniplex& n, std::span<const Flag> map);

}  // namespace maniplex
