#include "maniplex/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "maniplex/error.hpp"

namespace maniplex {

namespace {

using Rows = std::vector<std::vector<Flag>>;

template <std::size_t D>
using Mat = std::array<std::array<std::int64_t, D>, D>;
template <std::size_t D>
using Vec = std::array<std::int64_t, D>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Upper-triangular basis of the row lattice with positive diagonal.
template <std::size_t D>
Mat<D> hermite(Mat<D> rows) {
  for (std::size_t col = 0; col < D; ++col) {
    for (;;) {
      std::size_t pivot = D;
      for (std::size_t r = col; r < D; ++r) {
        if (rows[r][col] != 0 && (pivot == D || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col]))) {
          pivot = r;
        }
      }
      if (pivot == D) throw Error(ErrorCode::kDegenerateBasis, "lattice basis is degenerate");
      std::swap(rows[col], rows[pivot]);
      bool done = true;
      for (std::size_t r = col + 1; r < D; ++r) {
        if (rows[r][col] == 0) continue;
        const std::int64_t q = rows[r][col] / rows[col][col];
        for (std::size_t k = 0; k < D; ++k) rows[r][k] -= q * rows[col][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[col][col] < 0) {
      for (auto& x : rows[col]) x = -x;
    }
  }
  return rows;
}

/// Representative of p modulo the lattice of h inside the box prod [0, h_ii).
template <std::size_t D>
Vec<D> reduce(Vec<D> p, const Mat<D>& h) {
  for (std::size_t i = 0; i < D; ++i) {
    const std::int64_t q = floor_div(p[i], h[i][i]);
    for (std::size_t k = 0; k < D; ++k) p[k] -= q * h[i][k];
  }
  return p;
}

template <std::size_t D>
std::vector<Vec<D>> box_points(const Mat<D>& h) {
  std::vector<Vec<D>> out;
  Vec<D> p{};
  for (;;) {
    out.push_back(p);
    std::size_t i = D;
    while (i > 0) {
      --i;
      if (++p[i] < h[i][i]) break;
      p[i] = 0;
      if (i == 0) return out;
    }
  }
}

Maniplex finish(int rank, const Rows& rows) { return validate(ColouredGraph(rank, rows)); }

}  // namespace

Maniplex polygon(int p) {
  if (p < 2) throw Error(ErrorCode::kBadParam, "polygon needs p >= 2, got " + std::to_string(p));
  const auto f = static_cast<Flag>(2 * p);
  Rows rows(2, std::vector<Flag>(f));
  for (Flag v = 0; v < f; ++v) {
    rows[0][v] = v ^ 1U;
    rows[1][v] = v % 2 == 1 ? (v + 1) % f : (v + f - 1) % f;
  }
  return finish(2, rows);
}

Maniplex hypercube(int d) {
  if (d < 1 || d > 5) throw Error(ErrorCode::kBadParam, "hypercube needs 1 <= d <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> pi(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pi[static_cast<std::size_t>(i)] = i;
  do {
    perms.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::map<std::vector<int>, Flag> perm_index;
  for (Flag k = 0; k < perms.size(); ++k) perm_index.emplace(perms[k], k);

  const Flag signs = Flag{1} << d;
  const auto f = static_cast<Flag>(perms.size()) * signs;
  Rows rows(static_cast<std::size_t>(d), std::vector<Flag>(f));
  for (Flag k = 0; k < perms.size(); ++k) {
    for (Flag s = 0; s < signs; ++s) {
      const Flag v = k * signs + s;
      rows[0][v] = k * signs + (s ^ (Flag{1} << perms[k][0]));
      for (int i = 1; i < d; ++i) {
        auto swapped = perms[k];
        std::swap(swapped[static_cast<std::size_t>(i) - 1], swapped[static_cast<std::size_t>(i)]);
        rows[static_cast<std::size_t>(i)][v] = perm_index.at(swapped) * signs + s;
      }
    }
  }
  return finish(d, rows);
}

Maniplex torus_44(int b, int c) {
  if (b == 0 && c == 0) throw Error(ErrorCode::kBadParam, "torus_44 needs (b, c) != (0, 0)");
  const auto h = hermite<2>({{{b, c}, {-c, b}}});
  constexpr std::int64_t dx[4] = {1, 0, -1, 0};
  constexpr std::int64_t dy[4] = {0, 1, 0, -1};
  const auto height = h[1][1];
  const auto points = box_points<2>(h);
  auto flag = [&](const Vec<2>& p, int d, int s) {
    const auto r = reduce<2>(p, h);
    return static_cast<Flag>(((r[0] * height + r[1]) * 4 + d) * 2 + s);
  };
  const auto f = static_cast<Flag>(points.size() * 8);
  Rows rows(3, std::vector<Flag>(f));
  for (const auto& p : points) {
    for (int d = 0; d < 4; ++d) {
      for (int s = 0; s < 2; ++s) {
        const Flag v = flag(p, d, s);
        rows[0][v] = flag({p[0] + dx[d], p[1] + dy[d]}, (d + 2) % 4, 1 - s);
        rows[1][v] = s == 0 ? flag(p, (d + 1) % 4, 1) : flag(p, (d + 3) % 4, 0);
        rows[2][v] = flag(p, d, 1 - s);
      }
    }
  }
  return finish(3, rows);
}

Maniplex klein_44() {
  // One vertex. Horizontal steps come back by a translation; vertical steps
  // come back by the glide, which swaps E and W and reverses the side.
  auto flag = [](int d, int s) { return static_cast<Flag>(d * 2 + s); };
  Rows rows(3, std::vector<Flag>(8));
  for (int d = 0; d < 4; ++d) {
    for (int s = 0; s < 2; ++s) {
      const Flag v = flag(d, s);
      const int back = (d + 2) % 4;
      rows[0][v] = d % 2 == 0 ? flag(back, 1 - s) : flag(back, s);
      rows[1][v] = s == 0 ? flag((d + 1) % 4, 1) : flag((d + 3) % 4, 0);
      rows[2][v] = flag(d, 1 - s);
    }
  }
  return finish(3, rows);
}

std::int64_t LatticeBasis3::det() const {
  return v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) - v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0]) +
         v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
}

LatticeBasis3 reference_3torus_basis() { return LatticeBasis3{{{{0, 2, 0}, {1, 0, 0}, {1, 0, 2}}}}; }

namespace {

// Rectified cubic honeycomb in doubled coordinates: cube corners are the
// all-even points, cube centres the all-odd points, vertices the points with
// exactly one odd coordinate.
using P3 = Vec<3>;

P3 add(P3 a, const P3& b) {
  for (std::size_t k = 0; k < 3; ++k) a[k] += b[k];
  return a;
}

P3 unit(std::size_t k, std::int64_t sign) {
  P3 e{};
  e[k] = sign;
  return e;
}

bool odd(std::int64_t x) { return (x % 2 + 2) % 2 == 1; }

struct Polygon {
  int type = 0;  // 0: triangle T(c, sigma) of the octahedron at c; 1: square S(q)
  P3 at{};
  P3 sigma{};
  friend auto operator<=>(const Polygon&, const Polygon&) = default;
};

struct Cell {
  int type = 0;  // 0: octahedron at a cube corner; 1: cuboctahedron at a cube centre
  P3 at{};
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CoverFlag {
  P3 vertex{};
  std::array<P3, 2> edge{};  // sorted endpoints
  Polygon polygon;
  Cell cell;
  friend auto operator<=>(const CoverFlag&, const CoverFlag&) = default;
};

std::array<P3, 2> make_edge(const P3& a, const P3& b) { return a < b ? std::array{a, b} : std::array{b, a}; }

std::vector<P3> cycle(const Polygon& p) {
  if (p.type == 0) {
    std::vector<P3> out;
    for (std::size_t k = 0; k < 3; ++k) out.push_back(add(p.at, unit(k, p.sigma[k])));
    return out;
  }
  std::vector<std::size_t> axes;
  for (std::size_t k = 0; k < 3; ++k) {
    if (odd(p.at[k])) axes.push_back(k);
  }
  return {add(p.at, unit(axes[0], 1)), add(p.at, unit(axes[1], 1)), add(p.at, unit(axes[0], -1)),
          add(p.at, unit(axes[1], -1))};
}

bool has_edge(const Polygon& p, const std::array<P3, 2>& e) {
  const auto vs = cycle(p);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (make_edge(vs[k], vs[(k + 1) % vs.size()]) == e) return true;
  }
  return false;
}

P3 sign_pattern(unsigned bits) {
  return {bits & 1U ? -1 : 1, bits & 2U ? -1 : 1, bits & 4U ? -1 : 1};
}

std::vector<Polygon> polygons_of(const Cell& c) {
  std::vector<Polygon> out;
  for (unsigned bits = 0; bits < 8; ++bits) {
    const P3 sigma = sign_pattern(bits);
    if (c.type == 0) {
      out.push_back({0, c.at, sigma});
    } else {
      out.push_back({0, add(c.at, sigma), {-sigma[0], -sigma[1], -sigma[2]}});
    }
  }
  if (c.type == 1) {
    for (std::size_t m = 0; m < 3; ++m) {
      for (std::int64_t s : {1, -1}) out.push_back({1, add(c.at, unit(m, s)), {}});
    }
  }
  return out;
}

std::array<Cell, 2> cells_of(const Polygon& p) {
  if (p.type == 0) return {Cell{0, p.at}, Cell{1, add(p.at, p.sigma)}};
  std::size_t m = 0;
  while (odd(p.at[m])) ++m;
  return {Cell{1, add(p.at, unit(m, 1))}, Cell{1, add(p.at, unit(m, -1))}};
}

CoverFlag translate(CoverFlag f, const P3& t) {
  f.vertex = add(f.vertex, t);
  f.edge = {add(f.edge[0], t), add(f.edge[1], t)};
  f.polygon.at = add(f.polygon.at, t);
  f.cell.at = add(f.cell.at, t);
  return f;
}

CoverFlag exchange(const CoverFlag& f, int colour) {
  CoverFlag g = f;
  switch (colour) {
    case 0:
      g.vertex = f.edge[0] == f.vertex ? f.edge[1] : f.edge[0];
      return g;
    case 1: {
      const auto vs = cycle(f.polygon);
      const auto k = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), f.vertex) - vs.begin());
      const auto next = make_edge(f.vertex, vs[(k + 1) % vs.size()]);
      g.edge = next == f.edge ? make_edge(f.vertex, vs[(k + vs.size() - 1) % vs.size()]) : next;
      return g;
    }
    case 2: {
      int found = 0;
      for (const auto& p : polygons_of(f.cell)) {
        if (p != f.polygon && has_edge(p, f.edge)) {
          g.polygon = p;
          ++found;
        }
      }
      if (found != 1) throw Error(ErrorCode::kInternal, "edge is not in exactly two polygons of its cell");
      return g;
    }
    default: {
      const auto cs = cells_of(f.polygon);
      g.cell = cs[0] == f.cell ? cs[1] : cs[0];
      return g;
    }
  }
}

}  // namespace

Maniplex rectified_cubic_3torus(const LatticeBasis3& basis) {
  if (basis.det() == 0) throw Error(ErrorCode::kDegenerateBasis, "lattice basis has determinant 0");
  const auto h = hermite<3>(basis.v);
  Mat<3> h2 = h;
  for (auto& row : h2) {
    for (auto& x : row) x *= 2;
  }
  auto canonical = [&](const CoverFlag& f) {
    const P3 at = reduce<3>(f.cell.at, h2);
    return translate(f, {at[0] - f.cell.at[0], at[1] - f.cell.at[1], at[2] - f.cell.at[2]});
  };

  std::vector<Cell> cells;
  const auto box = box_points<3>(h);
  for (const auto& r : box) cells.push_back({0, {2 * r[0], 2 * r[1], 2 * r[2]}});
  for (const auto& r : box) cells.push_back({1, reduce<3>({2 * r[0] + 1, 2 * r[1] + 1, 2 * r[2] + 1}, h2)});

  std::vector<CoverFlag> flags;
  for (const auto& c : cells) {
    for (const auto& p : polygons_of(c)) {
      const auto vs = cycle(p);
      for (std::size_t k = 0; k < vs.size(); ++k) {
        flags.push_back({vs[k], make_edge(vs[k], vs[(k + 1) % vs.size()]), p, c});
        flags.push_back({vs[k], make_edge(vs[k], vs[(k + vs.size() - 1) % vs.size()]), p, c});
      }
    }
  }
  std::map<CoverFlag, Flag> index;
  for (Flag v = 0; v < flags.size(); ++v) index.emplace(flags[v], v);

  Rows rows(4, std::vector<Flag>(flags.size()));
  for (Flag v = 0; v < flags.size(); ++v) {
    for (int i = 0; i < 4; ++i) {
      const auto it = index.find(canonical(exchange(flags[v], i)));
      if (it == index.end()) throw Error(ErrorCode::kInternal, "exchanged flag is not enumerated");
      rows[static_cast<std::size_t>(i)][v] = it->second;
    }
  }
  return finish(4, rows);
}

namespace {

using Rng = std::mt19937_64;

constexpr int kRetryCap = 4000;
constexpr std::size_t kMaxPolygon = 8;

std::size_t uniform(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Colour-preserving bijection of one orbit onto another (or itself) under
/// the given colours, sending `root` to `image`.
std::optional<std::vector<std::pair<Flag, Flag>>> orbit_map(const Rows& rows, const std::vector<Colour>& colours,
                                                           Flag root, Flag image) {
  std::map<Flag, Flag> forward;
  std::map<Flag, Flag> backward;
  std::vector<Flag> queue{root};
  forward[root] = image;
  backward[image] = root;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Flag v = queue[head];
    for (Colour c : colours) {
      const Flag w = rows[static_cast<std::size_t>(c)][v];
      const Flag wi = rows[static_cast<std::size_t>(c)][forward[v]];
      const auto it = forward.find(w);
      if (it != forward.end()) {
        if (it->second != wi) return std::nullopt;
        continue;
      }
      if (backward.contains(wi)) return std::nullopt;
      forward[w] = wi;
      backward[wi] = w;
      queue.push_back(w);
    }
  }
  return std::vector<std::pair<Flag, Flag>>(forward.begin(), forward.end());
}

std::optional<Rows> sample(int rank, Rng& rng, std::size_t budget);

std::optional<Rows> sample_with_retries(int rank, Rng& rng, std::size_t budget) {
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    if (auto rows = sample(rank, rng, budget)) return rows;
  }
  return std::nullopt;
}

std::optional<Rows> sample(int rank, Rng& rng, std::size_t budget) {
  const std::size_t smallest = std::size_t{1} << rank;
  if (budget < smallest) return std::nullopt;
  if (rank == 1) return Rows{{1, 0}};
  if (rank == 2) {
    const std::size_t top = std::min(budget / 2, kMaxPolygon);
    const auto p = static_cast<Flag>(2 + uniform(rng, top - 1));
    const auto m = polygon(static_cast<int>(p));
    return m.graph().matchings();
  }

  // Vertex figures on colours 1..n-1.
  const std::size_t sub_smallest = smallest / 2;
  const std::size_t kmax = std::min<std::size_t>(4, budget / sub_smallest);
  const std::size_t k = 1 + uniform(rng, kmax);
  const bool same = uniform(rng, 2) == 0;
  std::vector<Rows> parts;
  for (std::size_t i = 0; i < k; ++i) {
    if (same && i > 0) {
      parts.push_back(parts.front());
      continue;
    }
    auto part = sample_with_retries(rank - 1, rng, budget / k);
    if (!part) return std::nullopt;
    parts.push_back(std::move(*part));
  }
  Rows rows(static_cast<std::size_t>(rank));
  for (const auto& part : parts) {
    const auto offset = static_cast<Flag>(rows[1].size());
    for (std::size_t c = 0; c < part.size(); ++c) {
      for (Flag w : part[c]) rows[c + 1].push_back(w + offset);
    }
  }
  const auto f = static_cast<Flag>(rows[1].size());
  rows[0].assign(f, f);

  // Orbits of colours 2..n-1; colour 0 must carry each onto an orbit by a
  // colour-preserving bijection.
  std::vector<Colour> upper;
  for (Colour c = 2; c < rank; ++c) upper.push_back(c);
  std::vector<std::vector<Flag>> orbits;
  std::vector<bool> seen(f, false);
  for (Flag v = 0; v < f; ++v) {
    if (seen[v]) continue;
    std::vector<Flag> orbit{v};
    seen[v] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Colour c : upper) {
        const Flag w = rows[static_cast<std::size_t>(c)][orbit[head]];
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  for (std::size_t i = orbits.size(); i > 1; --i) std::swap(orbits[i - 1], orbits[uniform(rng, i)]);

  std::vector<bool> paired(orbits.size(), false);
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    if (paired[a]) continue;
    std::vector<std::size_t> partners;
    for (std::size_t b = a; b < orbits.size(); ++b) {
      if (!paired[b] && orbits[b].size() == orbits[a].size()) partners.push_back(b);
    }
    const std::size_t b = partners[uniform(rng, partners.size())];
    std::vector<std::vector<std::pair<Flag, Flag>>> maps;
    for (Flag image : orbits[b]) {
      auto map = orbit_map(rows, upper, orbits[a].front(), image);
      if (!map) continue;
      if (a == b) {
        std::map<Flag, Flag> phi(map->begin(), map->end());
        bool involution = true;
        for (const auto& [x, y] : *map) involution = involution && x != y && phi.at(y) == x;
        if (!involution) continue;
      }
      maps.push_back(std::move(*map));
    }
    if (maps.empty()) return std::nullopt;
    for (const auto& [x, y] : maps[uniform(rng, maps.size())]) {
      rows[0][x] = y;
      rows[0][y] = x;
    }
    paired[a] = paired[b] = true;
  }

  for (Flag v = 0; v < f; ++v) {
    for (Colour c = 1; c < rank; ++c) {
      if (rows[0][v] == rows[static_cast<std::size_t>(c)][v]) return std::nullopt;
    }
  }
  try {
    (void)finish(rank, rows);
  } catch (const Error&) {
    return std::nullopt;
  }
  return rows;
}

}  // namespace

Maniplex random_maniplex(int rank, std::uint64_t seed, std::size_t budget) {
  if (rank < 1 || rank > kMaxRandomRank) {
    throw Error(ErrorCode::kBadParam, "random_maniplex needs 1 <= rank <= " + std::to_string(kMaxRandomRank));
  }
  if (budget > kMaxRandomBudget) {
    throw Error(ErrorCode::kBadParam, "random_maniplex budget is capped at " + std::to_string(kMaxRandomBudget));
  }
  Rng rng(seed);
  auto rows = sample_with_retries(rank, rng, budget);
  if (!rows) {
    throw Error(ErrorCode::kBudgetExhausted, "no rank-" + std::to_string(rank) + " sample within " +
                                                 std::to_string(budget) + " flags after " +
                                                 std::to_string(kRetryCap) + " attempts");
  }
  return finish(rank, *rows);
}

}  // namespace maniplex
