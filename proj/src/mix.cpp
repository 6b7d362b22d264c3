#include "maniplex/mix.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "maniplex/error.hpp"

namespace maniplex {

namespace {

void require_same_rank(const Maniplex& m, const Maniplex& n) {
  if (m.rank() != n.rank()) {
    throw Error(ErrorCode::kRankMismatch,
                "ranks " + std::to_string(m.rank()) + " and " + std::to_string(n.rank()) + " differ");
  }
}

}  // namespace

MixResult mix(const Maniplex& m, const Maniplex& n, Flag base_m, Flag base_n) {
  require_same_rank(m, n);
  if (base_m >= m.flag_count() || base_n >= n.flag_count()) {
    throw Error(ErrorCode::kOutOfRange, "base flag out of range",
                {.flag = base_m, .other_flag = base_n});
  }
  const auto key = [&](Flag a, Flag u) { return std::uint64_t{a} * n.flag_count() + u; };
  std::unordered_map<std::uint64_t, Flag> index;
  std::vector<std::pair<Flag, Flag>> coords{{base_m, base_n}};
  index.emplace(key(base_m, base_n), 0);
  const auto rank = static_cast<std::size_t>(m.rank());
  std::vector<std::vector<Flag>> rows(rank);
  for (std::size_t head = 0; head < coords.size(); ++head) {
    const auto [a, u] = coords[head];
    for (std::size_t c = 0; c < rank; ++c) {
      const Flag b = m.adj(static_cast<Colour>(c), a);
      const Flag w = n.adj(static_cast<Colour>(c), u);
      auto [it, fresh] = index.emplace(key(b, w), static_cast<Flag>(coords.size()));
      if (fresh) coords.emplace_back(b, w);
      rows[c].push_back(it->second);
    }
  }
  return {validate(ColouredGraph(m.rank(), rows)), std::move(coords)};
}

bool is_covering(const Maniplex& m, const Maniplex& n, std::span<const Flag> map) {
  if (m.rank() != n.rank() || map.size() != m.flag_count()) return false;
  std::vector<bool> hit(n.flag_count(), false);
  for (Flag v = 0; v < m.flag_count(); ++v) {
    if (map[v] >= n.flag_count()) return false;
    hit[map[v]] = true;
    for (Colour c = 0; c < m.rank(); ++c) {
      if (map[m.adj(c, v)] != n.adj(c, map[v])) return false;
    }
  }
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

std::optional<std::vector<Flag>> find_covering(const Maniplex& m, const Maniplex& n) {
  require_same_rank(m, n);
  if (n.flag_count() > m.flag_count()) return std::nullopt;
  for (Flag image = 0; image < n.flag_count(); ++image) {
    auto map = propagate_map(m.graph(), 0, n.graph(), image);
    if (map && is_covering(m, n, *map)) return map;
  }
  return std::nullopt;
}

}  // namespace maniplex
