// Invariants checked over a seeded corpus of random maniplexes plus the
// named fixtures. Generators are hand-rolled: random_maniplex for the
// objects, mt19937_64 for paths, base flags and colour sets.
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "maniplex/error.hpp"
#include "maniplex/generators.hpp"
#include "maniplex/io.hpp"
#include "maniplex/mix.hpp"
#include "maniplex/parallel.hpp"
#include "maniplex/polytopality.hpp"
#include "oracle.hpp"

using namespace maniplex;

namespace {

constexpr std::uint64_t kSamples = 1000;

int rank_for(std::uint64_t seed) { return 1 + static_cast<int>(seed % 4); }

// Small enough for the quadratic and exponential oracles.
std::vector<fixtures::Named> corpus(std::size_t budget) {
  std::vector<fixtures::Named> out;
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    out.push_back({"seed " + std::to_string(s), random_maniplex(rank_for(s), s, budget)});
  }
  return out;
}

const std::vector<fixtures::Named>& small_corpus() {
  static const auto c = corpus(64);
  return c;
}

}  // namespace

TEST(Properties, CorpusIsVaried) {
  std::set<std::pair<int, std::size_t>> shapes;
  std::size_t polytopal = 0;
  std::size_t not_polytopal = 0;
  for (const auto& f : small_corpus()) {
    shapes.insert({f.m.rank(), f.m.flag_count()});
    (check_cip(f.m).holds ? polytopal : not_polytopal) += 1;
  }
  EXPECT_GT(shapes.size(), 20u);
  EXPECT_GT(polytopal, 0u);
  EXPECT_GT(not_polytopal, 0u);
}

TEST(Properties, CriteriaAgreeWithEachOtherAndTheOracles) {
  for (const auto& f : small_corpus()) {
    const auto cip = check_cip(f.m).holds;
    ASSERT_EQ(cip, check_wpip(f.m).holds) << f.name;
    ASSERT_EQ(cip, check_spip(f.m, SpipMode::kExhaustive).holds) << f.name;
    ASSERT_EQ(cip, oracle::cip(f.m.graph())) << f.name;
    ASSERT_EQ(cip, oracle::wpip(f.m.graph())) << f.name;
    ASSERT_EQ(cip, oracle::spip(f.m.graph())) << f.name;
    const auto p = induced_poset(f.m);
    ASSERT_EQ(cip, is_polytope(f.m, p).is_polytope) << f.name;
    const auto o = oracle::poset(f.m.graph());
    ASSERT_EQ(cip, oracle::poset_is_polytope(o) && oracle::faithful(o)) << f.name;
  }
}

TEST(Properties, FullPipelineOnLargerSamples) {
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    const auto m = random_maniplex(rank_for(s), s, 512);
    const auto r = is_polytopal(m);
    ASSERT_TRUE(r.verdicts_consistent) << s;
    ASSERT_EQ(r.cip.holds, r.wpip.holds) << s;
    ASSERT_EQ(r.cip.holds, r.spip.holds) << s;
    ASSERT_EQ(r.cip.holds, r.poset.is_polytope) << s;
  }
}

TEST(Properties, CipImpliesDiamondAndFaithfulness) {
  for (const auto& f : small_corpus()) {
    const auto p = induced_poset(f.m);
    const auto d = diamond(p.order()).holds;
    const auto faithful = is_faithful(f.m, p).holds;
    const auto sfc = strong_flag_connectivity(p.order()).holds;
    if (check_cip(f.m).holds) {
      EXPECT_TRUE(d) << f.name;
      EXPECT_TRUE(faithful) << f.name;
    }
    if (faithful && d) EXPECT_EQ(sfc, check_cip(f.m).holds) << f.name;
  }
}

TEST(Properties, PosetChecksMatchOracles) {
  for (const auto& f : small_corpus()) {
    const auto p = induced_poset(f.m);
    const auto o = oracle::poset(f.m.graph());
    const auto chains = oracle::chains(o);
    ASSERT_EQ(maximal_chains(p.order()).size(), chains.size()) << f.name;
    ASSERT_EQ(diamond(p.order()).holds, !oracle::diamond_failure(o)) << f.name;
    ASSERT_EQ(is_faithful(f.m, p).holds, oracle::faithful(o)) << f.name;
    ASSERT_EQ(strong_flag_connectivity(p.order()).holds, oracle::strongly_flag_connected(chains)) << f.name;
  }
}

TEST(Properties, ChainsOfFacesAlwaysMeet) {
  for (const auto& f : small_corpus()) {
    const auto p = induced_poset(f.m);
    for (const auto& c : maximal_chains(p.order())) {
      std::vector<FaceRef> chain;
      for (int r = 0; r < f.m.rank(); ++r) chain.push_back({r, c[static_cast<std::size_t>(r + 1)]});
      ASSERT_FALSE(chain_intersection(p, chain).empty()) << f.name;
    }
  }
}

// Only faithful maniplexes are guaranteed the product structure; elsewhere a
// face may be a proper quotient of the product and face_factors says so.
TEST(Properties, MiddleFacesAreProductsOfTheirFactors) {
  std::size_t quotients = 0;
  for (const auto& f : small_corpus()) {
    const bool faithful = is_faithful(f.m, induced_poset(f.m)).holds;
    for (int r = 1; r + 1 < f.m.rank(); ++r) {
      for (const auto& face : faces(f.m, r)) {
        std::vector<int> below_colours;
        std::vector<int> above_colours;
        for (int c = 0; c < f.m.rank(); ++c) {
          if (c < r) below_colours.push_back(c);
          if (c > r) above_colours.push_back(c);
        }
        const auto lo = oracle::bfs_labels(f.m.graph(), below_colours);
        const auto hi = oracle::bfs_labels(f.m.graph(), above_colours);
        const Flag rep = face.representative;
        const auto lo_size = static_cast<std::size_t>(std::count(lo.begin(), lo.end(), lo[rep]));
        const auto hi_size = static_cast<std::size_t>(std::count(hi.begin(), hi.end(), hi[rep]));
        const bool product = lo_size * hi_size == face.flags.size();
        try {
          const auto ff = face_factors(f.m, face);
          ASSERT_TRUE(product) << f.name;
          ASSERT_EQ(ff.below.size(), lo_size) << f.name;
          ASSERT_EQ(ff.above.size(), hi_size) << f.name;
        } catch (const Error& e) {
          ASSERT_FALSE(product) << f.name;
          ASSERT_EQ(e.code(), ErrorCode::kNotAProduct) << f.name;
          ASSERT_FALSE(faithful) << f.name;
          ++quotients;
        }
      }
    }
  }
  EXPECT_GT(quotients, 0u);
}

TEST(Properties, NormalizedPathsKeepTheirEndpoints) {
  std::mt19937_64 rng(2024);
  for (const auto& f : small_corpus()) {
    const int n = f.m.rank();
    if (n < 2) continue;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> pivots;
      for (int c = 0; c < n; ++c) {
        if (rng() % 3 == 0) pivots.push_back(c);
      }
      std::vector<Colour> allowed;
      for (int c = 0; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) allowed.push_back(c);
      }
      if (allowed.empty()) continue;
      ColouredPath path{static_cast<Flag>(rng() % f.m.flag_count()), {}};
      for (std::size_t k = rng() % 16; k > 0; --k) path.colours.push_back(allowed[rng() % allowed.size()]);
      Flag at = path.start;
      for (const auto& seg : normalize_path(f.m, path, pivots)) {
        ASSERT_EQ(seg.start, at);
        at = seg.end(f.m.graph());
      }
      ASSERT_EQ(at, path.end(f.m.graph())) << f.name;
    }
  }
}

TEST(Properties, MixProjectsOntoBothFactors) {
  std::mt19937_64 rng(99);
  const auto& c = small_corpus();
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = c[rng() % c.size()].m;
    const auto& b = c[rng() % c.size()].m;
    if (a.rank() != b.rank()) continue;
    const auto r = mix(a, b, static_cast<Flag>(rng() % a.flag_count()), static_cast<Flag>(rng() % b.flag_count()));
    std::vector<Flag> left;
    std::vector<Flag> right;
    for (const auto& [x, y] : r.coordinates) {
      left.push_back(x);
      right.push_back(y);
    }
    ASSERT_TRUE(is_covering(r.maniplex, a, left));
    ASSERT_TRUE(is_covering(r.maniplex, b, right));
    ASSERT_EQ(r.maniplex.flag_count() % a.flag_count(), 0u);
    ASSERT_EQ(r.maniplex.flag_count() % b.flag_count(), 0u);
  }
}

TEST(Properties, MixWithSelfIsIsomorphic) {
  for (std::size_t k = 0; k < small_corpus().size(); k += 7) {
    const auto& m = small_corpus()[k].m;
    ASSERT_TRUE(are_isomorphic(mix(m, m).maniplex.graph(), m.graph())) << small_corpus()[k].name;
  }
}

TEST(Properties, MpxRoundTrip) {
  for (const auto& f : small_corpus()) {
    const auto text = write_mpx(f.m.graph());
    ASSERT_EQ(read_mpx(text), f.m.graph()) << f.name;
  }
}

TEST(Properties, RelabellingPreservesEverything) {
  std::mt19937_64 rng(5);
  for (std::size_t k = 0; k < small_corpus().size(); k += 5) {
    const auto& m = small_corpus()[k].m;
    std::vector<Flag> perm(m.flag_count());
    for (Flag v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Flag>> rows(static_cast<std::size_t>(m.rank()), std::vector<Flag>(perm.size()));
    for (Colour c = 0; c < m.rank(); ++c) {
      for (Flag v = 0; v < perm.size(); ++v) rows[static_cast<std::size_t>(c)][perm[v]] = perm[m.adj(c, v)];
    }
    const auto copy = validate(build_graph(m.rank(), rows));
    const auto iso = are_isomorphic(m.graph(), copy.graph());
    ASSERT_TRUE(iso);
    ASSERT_TRUE(commutes_with_colours(m.graph(), copy.graph(), *iso));
    ASSERT_EQ(check_cip(m).holds, check_cip(copy).holds);
    ASSERT_TRUE(are_isomorphic_posets(induced_poset(m).order(), induced_poset(copy).order()));
  }
}

TEST(Properties, ThreadCountIsInvisible) {
  for (std::size_t k = 0; k < small_corpus().size(); k += 11) {
    const auto& m = small_corpus()[k].m;
    set_thread_count(1);
    const auto one = check_cip(m);
    set_thread_count(4);
    const auto four = check_cip(m);
    set_thread_count(1);
    ASSERT_EQ(one.holds, four.holds);
    if (!one.holds) {
      ASSERT_EQ(one.witness->colours, four.witness->colours);
      ASSERT_EQ(one.witness->u, four.witness->u);
      ASSERT_EQ(one.witness->v, four.witness->v);
    }
  }
}
