#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "maniplex/error.hpp"
#include "maniplex/generators.hpp"
#include "maniplex/polytopality.hpp"
#include "oracle.hpp"

using namespace maniplex;

namespace {

// 2^n flags, colour c flips bit c. Every pair of colours commutes.
Maniplex boolean_maniplex(int n) {
  const std::size_t flags = std::size_t{1} << n;
  std::vector<std::vector<Flag>> rows(static_cast<std::size_t>(n), std::vector<Flag>(flags));
  for (int c = 0; c < n; ++c) {
    for (Flag v = 0; v < flags; ++v) rows[static_cast<std::size_t>(c)][v] = v ^ (Flag{1} << c);
  }
  return validate(build_graph(n, rows));
}

}  // namespace

TEST(Cip, AgreesWithDefinitionOnFixtures) {
  for (const auto& f : fixtures::small()) {
    EXPECT_EQ(check_cip(f.m).holds, oracle::cip(f.m.graph())) << f.name;
  }
}

TEST(Cip, ChainSweepAgrees) {
  for (const auto& f : fixtures::small()) {
    const auto p = induced_poset(f.m);
    const auto a = check_cip(f.m);
    const auto b = check_cip_by_chains(f.m, p);
    EXPECT_EQ(a.holds, b.holds) << f.name;
    if (!a.holds) {
      EXPECT_EQ(a.witness->colours, b.witness->colours) << f.name;
    }
  }
}

TEST(Cip, Torus11Witness) {
  const auto t = torus_44(1, 1);
  const auto v = check_cip(t);
  ASSERT_FALSE(v.holds);
  const auto& w = *v.witness;
  EXPECT_EQ(w.colours, ColourSet::of({0, 2}));
  EXPECT_EQ(w.u, 0u);
  EXPECT_EQ(w.v, 4u);
  // Same vertex and same square, but not joined by colour-1 edges.
  const auto o = oracle::poset(t.graph());
  const auto vert = oracle::bfs_labels(t.graph(), {1, 2});
  const auto square = oracle::bfs_labels(t.graph(), {0, 1});
  const auto edge = oracle::bfs_labels(t.graph(), {1});
  EXPECT_EQ(vert[w.u], vert[w.v]);
  EXPECT_EQ(square[w.u], square[w.v]);
  EXPECT_NE(edge[w.u], edge[w.v]);
  // The shared block holds exactly two colour-1 edges.
  std::size_t shared = 0;
  for (Flag x = 0; x < t.flag_count(); ++x) shared += vert[x] == vert[w.u] && square[x] == square[w.u];
  EXPECT_EQ(shared, 4u);
}

TEST(Wpip, AgreesWithDefinition) {
  for (const auto& f : fixtures::small()) {
    EXPECT_EQ(check_wpip(f.m).holds, oracle::wpip(f.m.graph())) << f.name;
  }
}

TEST(Wpip, FailureAtOuterColours) {
  const auto t = torus_44(1, 1);
  const auto v = check_wpip(t);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->i, 0);
  EXPECT_EQ(v.witness->j, 2);
  const auto pair = wpip_failure(t, 0, 2);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first, v.witness->u);
  EXPECT_EQ(pair->second, v.witness->v);
  EXPECT_FALSE(wpip_failure(t, 0, 1));
  EXPECT_THROW(wpip_failure(t, 2, 1), Error);
}

TEST(Spip, AgreesWithDefinition) {
  for (const auto& f : fixtures::small()) {
    const auto v = check_spip(f.m, SpipMode::kExhaustive);
    EXPECT_TRUE(v.exhaustive);
    EXPECT_EQ(v.holds, oracle::spip(f.m.graph())) << f.name;
  }
}

TEST(Spip, RankCap) {
  const auto big = boolean_maniplex(7);
  try {
    check_spip(big, SpipMode::kExhaustive);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankTooLargeForExhaustive);
  }
  const auto v = check_spip(big);
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.holds, check_wpip(big).holds);
  EXPECT_TRUE(check_spip(boolean_maniplex(6), SpipMode::kExhaustive).exhaustive);
}

TEST(IsPolytopal, CriteriaAgreeOnFixtures) {
  for (const auto& f : fixtures::all()) {
    const auto r = is_polytopal(f.m);
    EXPECT_TRUE(r.verdicts_consistent) << f.name;
    EXPECT_EQ(r.cip.holds, r.wpip.holds) << f.name;
    EXPECT_EQ(r.cip.holds, r.spip.holds) << f.name;
    EXPECT_EQ(r.cip.holds, r.poset.is_polytope) << f.name;
    EXPECT_EQ(r.faces_per_rank.size(), static_cast<std::size_t>(f.m.rank())) << f.name;
    EXPECT_EQ(r.isomorphism.has_value(), r.polytopal()) << f.name;
  }
}

TEST(IsPolytopal, FrozenVerdicts) {
  EXPECT_TRUE(is_polytopal(hypercube(3)).polytopal());
  EXPECT_TRUE(is_polytopal(hypercube(4)).polytopal());
  EXPECT_TRUE(is_polytopal(polygon(2)).polytopal());
  EXPECT_TRUE(is_polytopal(torus_44(2, 0)).polytopal());
  EXPECT_TRUE(is_polytopal(torus_44(2, 1)).polytopal());
  EXPECT_FALSE(is_polytopal(torus_44(1, 0)).polytopal());
  EXPECT_FALSE(is_polytopal(torus_44(1, 1)).polytopal());
  EXPECT_FALSE(is_polytopal(klein_44()).polytopal());
  EXPECT_TRUE(is_polytopal(fixtures::one_maniplex()).polytopal());
}

TEST(IsPolytopal, CubeReport) {
  const auto cube = hypercube(3);
  const auto r = is_polytopal(cube);
  EXPECT_TRUE(r.cip.holds);
  EXPECT_TRUE(r.wpip.holds);
  EXPECT_TRUE(r.spip.holds);
  EXPECT_TRUE(r.spip.exhaustive);
  EXPECT_EQ(r.faces_per_rank, (std::vector<std::size_t>{8, 12, 6}));
  ASSERT_TRUE(r.isomorphism);
  const auto fg = flag_graph(induced_poset(cube).order());
  EXPECT_TRUE(commutes_with_colours(cube.graph(), fg, *r.isomorphism));
}

TEST(FlagGraph, SquarePoset) {
  const auto square = induced_poset(polygon(4)).order();
  const auto g = flag_graph(square);
  EXPECT_EQ(g.rank(), 2);
  EXPECT_EQ(g.flag_count(), 8u);
  EXPECT_TRUE(are_isomorphic(g, polygon(4).graph()));
}

TEST(FlagGraph, RoundTripsPolytopalFixtures) {
  for (const auto& f : fixtures::all()) {
    if (!is_polytopal(f.m).polytopal()) continue;
    const auto g = flag_graph(induced_poset(f.m).order());
    EXPECT_TRUE(are_isomorphic(g, f.m.graph())) << f.name;
    const auto again = validate(g);
    EXPECT_TRUE(are_isomorphic_posets(induced_poset(again).order(), induced_poset(f.m).order())) << f.name;
  }
}

TEST(FlagGraph, RejectsNonPolytopes) {
  try {
    flag_graph(induced_poset(torus_44(1, 1)).order());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAPolytope);
  }
}

TEST(Beta, BijectiveOnPolytopes) {
  const auto cube = hypercube(3);
  const auto chains = beta(cube);
  ASSERT_EQ(chains.size(), cube.flag_count());
  EXPECT_EQ(std::set<MaximalChain>(chains.begin(), chains.end()).size(), 48u);
  const auto all = maximal_chains(induced_poset(cube).order());
  EXPECT_EQ(std::set<MaximalChain>(all.begin(), all.end()), std::set<MaximalChain>(chains.begin(), chains.end()));
}

TEST(Beta, CollapsesDegenerateTorus) {
  const auto t = torus_44(1, 0);
  const auto chains = beta(t);
  ASSERT_EQ(chains.size(), 8u);
  const std::set<MaximalChain> distinct(chains.begin(), chains.end());
  EXPECT_EQ(distinct.size(), 2u);
  for (const auto& c : distinct) EXPECT_EQ(std::count(chains.begin(), chains.end(), c), 4);
}

TEST(Beta, OneManiplex) {
  const auto chains = beta(fixtures::one_maniplex());
  ASSERT_EQ(chains.size(), 2u);
  EXPECT_EQ(chains[0], (MaximalChain{0, 0, 0}));
  EXPECT_EQ(chains[1], (MaximalChain{0, 1, 0}));
}

TEST(Beta, ChainEntriesAreFacesThroughTheFlag) {
  for (const auto& f : fixtures::small()) {
    const auto p = induced_poset(f.m);
    const auto chains = beta(f.m, p);
    for (Flag v = 0; v < f.m.flag_count(); ++v) {
      EXPECT_EQ(chains[v].front(), 0u);
      EXPECT_EQ(chains[v].back(), 0u);
      for (int r = 0; r < f.m.rank(); ++r) {
        EXPECT_EQ(chains[v][static_cast<std::size_t>(r + 1)], p.face_of(r, v)) << f.name;
      }
    }
  }
}

TEST(ThreeTorus, AlternativeLatticeKeepsDiamondButFailsCip) {
  LatticeBasis3 basis;
  basis.v = {{{1, 1, 0}, {0, 2, 0}, {0, 0, 2}}};
  const auto m = rectified_cubic_3torus(basis);
  EXPECT_EQ(m.flag_count(), 576u);
  const auto p = induced_poset(m);
  EXPECT_TRUE(diamond(p.order()).holds);
  EXPECT_TRUE(is_faithful(m, p).holds);
  const auto cip = check_cip(m);
  ASSERT_FALSE(cip.holds);
  EXPECT_EQ(cip.witness->colours, ColourSet::of({0, 3}));
  EXPECT_TRUE(wpip_failure(m, 0, 3));
  EXPECT_FALSE(is_polytope(m, p).is_polytope);
}
