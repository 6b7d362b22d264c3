#pragma once

#include <array>
#include <cstdint>

#include "maniplex/maniplex.hpp"

namespace maniplex {

/// 2p-cycle with alternating colours 0, 1. Throws BadParam for p < 2.
Maniplex polygon(int p);

/// Flag graph of the d-cube (1 <= d <= 5). Flags are signed permutations
/// (pi, s): the i-face through a flag fixes coordinates pi(i..d-1) at s.
/// Numbering: permutation rank in lexicographic order times 2^d plus s.
Maniplex hypercube(int d);

/// The {4,4} map on the torus R^2 / <(b,c), (-c,b)>, 8(b^2+c^2) flags.
/// A flag (x, y, d, s) is a vertex, the edge leaving it in direction
/// d (E, N, W, S), and the square on side s of that edge.
/// Throws BadParam for (0, 0).
Maniplex torus_44(int b, int c);

/// An 8-flag {4,4} map on the Klein bottle: the square tiling modulo the unit
/// horizontal translation and the glide (x, y) -> (-x, y + 1).
Maniplex klein_44();

/// Rows v1, v2, v3 of an integer lattice in Z^3.
struct LatticeBasis3 {
  std::array<std::array<std::int64_t, 3>, 3> v{};

  std::int64_t det() const;
};

/// The basis (0,2,0), (1,0,0), (1,0,2).
LatticeBasis3 reference_3torus_basis();

/// Rectified cubic honeycomb (cuboctahedra and octahedra) modulo the lattice.
/// 144 |det| flags: |det| octahedra and |det| cuboctahedra.
/// Throws DegenerateBasis when det = 0.
Maniplex rectified_cubic_3torus(const LatticeBasis3& basis);

inline constexpr int kMaxRandomRank = 4;
inline constexpr std::size_t kMaxRandomBudget = 512;

/// Random maniplex with at most `budget` flags, deterministic per seed.
/// Rank >= 3 samples are disjoint unions of random (rank-1)-maniplexes on
/// colours 1..n-1, glued by a random colour-0 matching that commutes with
/// colours 2..n-1, retried until the result is simple and connected.
/// Throws BadParam outside 1 <= rank <= 4, budget <= 512, and
/// BudgetExhausted when no sample fits.
Maniplex random_maniplex(int rank, std::uint64_t seed, std::size_t budget);

}  // namespace maniplex
