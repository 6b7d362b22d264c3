// Exercises the shared library through maniplex.h only.
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "maniplex.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  mpx_string_free(s);
  return out;
}

struct Handle {
  mpx_graph* g = nullptr;
  ~Handle() { mpx_graph_free(g); }
};

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(mpx_status_name(MPX_OK), "Ok");
  EXPECT_STREQ(mpx_status_name(MPX_E_FIXED_POINT), "FixedPoint");
  EXPECT_STREQ(mpx_status_name(MPX_E_PARSE), "ParseError");
  EXPECT_STREQ(mpx_status_name(MPX_E_NOT_A_PRODUCT), "NotAProduct");
  EXPECT_STREQ(mpx_status_name(MPX_E_NULL_ARGUMENT), "NullArgument");
  EXPECT_STREQ(mpx_status_name(static_cast<mpx_status>(77)), "Unknown");
}

TEST(CApi, CreateAndQuery) {
  const std::vector<uint32_t> adj{1, 0, 3, 2, 3, 2, 1, 0};
  Handle h;
  ASSERT_EQ(mpx_graph_create(2, 4, adj.data(), &h.g), MPX_OK);
  EXPECT_EQ(mpx_graph_rank(h.g), 2);
  EXPECT_EQ(mpx_graph_flag_count(h.g), 4u);
  EXPECT_EQ(mpx_graph_adj(h.g, 1, 0), 3u);
  EXPECT_EQ(mpx_graph_adj(h.g, 2, 0), UINT32_MAX);
  EXPECT_EQ(mpx_graph_adj(nullptr, 0, 0), UINT32_MAX);
  EXPECT_EQ(mpx_graph_rank(nullptr), -1);
}

TEST(CApi, CreateReportsValidationErrors) {
  const std::vector<uint32_t> fixed{0, 1};
  mpx_graph* g = nullptr;
  EXPECT_EQ(mpx_graph_create(1, 2, fixed.data(), &g), MPX_E_FIXED_POINT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(mpx_last_error()).find("fixes flag 0"), std::string::npos);

  const std::vector<uint32_t> split{1, 0, 3, 2};
  EXPECT_EQ(mpx_graph_create(1, 4, split.data(), &g), MPX_E_DISCONNECTED);
  EXPECT_EQ(mpx_graph_create(0, 2, split.data(), &g), MPX_E_OUT_OF_RANGE);
  EXPECT_EQ(mpx_graph_create(1, 2, split.data(), nullptr), MPX_E_NULL_ARGUMENT);
}

TEST(CApi, ParseErrorsExposeLineAndCause) {
  mpx_graph* g = nullptr;
  EXPECT_EQ(mpx_graph_parse("mpx 1 2\n0 1\n", &g), MPX_E_PARSE);
  EXPECT_EQ(mpx_last_error_line(), 2);
  EXPECT_EQ(mpx_last_error_cause(), MPX_E_FIXED_POINT);
  EXPECT_EQ(mpx_graph_parse("mpx 1\n", &g), MPX_E_PARSE);
  EXPECT_EQ(mpx_last_error_cause(), MPX_OK);
  // Parsing also checks the maniplex axioms.
  EXPECT_EQ(mpx_graph_parse("mpx 1 4\n1 0 3 2\n", &g), MPX_E_DISCONNECTED);
}

TEST(CApi, GeneratorsAndErrors) {
  Handle cube;
  ASSERT_EQ(mpx_gen_hypercube(3, &cube.g), MPX_OK);
  EXPECT_EQ(mpx_graph_flag_count(cube.g), 48u);
  mpx_graph* g = nullptr;
  EXPECT_EQ(mpx_gen_polygon(1, &g), MPX_E_BAD_PARAM);
  EXPECT_EQ(mpx_gen_torus44(0, 0, &g), MPX_E_BAD_PARAM);
  EXPECT_EQ(mpx_gen_random(9, 1, 64, &g), MPX_E_BAD_PARAM);
  EXPECT_EQ(mpx_gen_random(3, 1, 7, &g), MPX_E_BUDGET_EXHAUSTED);
  const int64_t flat[9] = {1, 0, 0, 0, 1, 0, 1, 1, 0};
  EXPECT_EQ(mpx_gen_rect3torus(flat, &g), MPX_E_DEGENERATE_BASIS);
  Handle ref;
  ASSERT_EQ(mpx_gen_rect3torus(nullptr, &ref.g), MPX_OK);
  EXPECT_EQ(mpx_graph_flag_count(ref.g), 576u);
  Handle k;
  ASSERT_EQ(mpx_gen_klein44(&k.g), MPX_OK);
  Handle r;
  ASSERT_EQ(mpx_gen_random(3, 42, 64, &r.g), MPX_OK);
  EXPECT_LE(mpx_graph_flag_count(r.g), 64u);
}

TEST(CApi, CheckReports) {
  Handle t;
  ASSERT_EQ(mpx_gen_torus44(1, 1, &t.g), MPX_OK);
  mpx_report* rep = nullptr;
  ASSERT_EQ(mpx_check(t.g, &rep), MPX_OK);
  EXPECT_EQ(mpx_report_polytopal(rep), 0);
  uint64_t colours = 0;
  uint32_t u = 0;
  uint32_t v = 0;
  ASSERT_EQ(mpx_report_cip_witness(rep, &colours, &u, &v), 1);
  EXPECT_EQ(colours, 0b101u);
  EXPECT_EQ(u, 0u);
  EXPECT_EQ(v, 4u);
  char* text = nullptr;
  ASSERT_EQ(mpx_report_write(rep, MPX_FORMAT_TEXT, &text), MPX_OK);
  EXPECT_EQ(take(text).rfind("non-polytopal; CIP fails at S={0,2}", 0), 0u);
  ASSERT_EQ(mpx_report_write(rep, MPX_FORMAT_JSON, &text), MPX_OK);
  EXPECT_NE(take(text).find("\"polytopal\": false"), std::string::npos);
  EXPECT_EQ(mpx_report_write(rep, MPX_FORMAT_DOT, &text), MPX_E_BAD_PARAM);
  mpx_report_free(rep);

  Handle c;
  ASSERT_EQ(mpx_gen_hypercube(3, &c.g), MPX_OK);
  ASSERT_EQ(mpx_check(c.g, &rep), MPX_OK);
  EXPECT_EQ(mpx_report_polytopal(rep), 1);
  EXPECT_EQ(mpx_report_cip_witness(rep, nullptr, nullptr, nullptr), 0);
  mpx_report_free(rep);
  EXPECT_EQ(mpx_report_polytopal(nullptr), 0);
}

TEST(CApi, WritersAndPoset) {
  Handle p;
  ASSERT_EQ(mpx_gen_polygon(3, &p.g), MPX_OK);
  ASSERT_EQ(mpx_graph_set_metadata(p.g, "triangle", "test"), MPX_OK);
  char* text = nullptr;
  ASSERT_EQ(mpx_graph_write(p.g, MPX_FORMAT_MPX, &text), MPX_OK);
  const auto mpx = take(text);
  EXPECT_EQ(mpx.rfind("# name: triangle\n# provenance: test\nmpx 2 6\n", 0), 0u);
  Handle back;
  ASSERT_EQ(mpx_graph_parse(mpx.c_str(), &back.g), MPX_OK);
  int same = 0;
  std::vector<uint32_t> map(6);
  ASSERT_EQ(mpx_isomorphic(p.g, back.g, &same, map.data()), MPX_OK);
  EXPECT_EQ(same, 1);
  for (uint32_t f = 0; f < 6; ++f) EXPECT_EQ(map[f], f);

  ASSERT_EQ(mpx_graph_write(p.g, MPX_FORMAT_DOT, &text), MPX_OK);
  EXPECT_EQ(take(text).rfind("graph maniplex {", 0), 0u);
  ASSERT_EQ(mpx_graph_write(p.g, MPX_FORMAT_JSON, &text), MPX_OK);
  EXPECT_NE(take(text).find("\"name\": \"triangle\""), std::string::npos);
  EXPECT_EQ(mpx_graph_write(p.g, MPX_FORMAT_TEXT, &text), MPX_E_BAD_PARAM);

  int polytope = -1;
  ASSERT_EQ(mpx_poset_write(p.g, MPX_FORMAT_TEXT, &text, &polytope), MPX_OK);
  EXPECT_EQ(take(text).rfind("polytope\n", 0), 0u);
  EXPECT_EQ(polytope, 1);
  ASSERT_EQ(mpx_poset_write(p.g, MPX_FORMAT_DOT, &text, nullptr), MPX_OK);
  EXPECT_EQ(take(text).rfind("graph hasse {", 0), 0u);
}

TEST(CApi, SaveAndLoad) {
  Handle c;
  ASSERT_EQ(mpx_gen_hypercube(3, &c.g), MPX_OK);
  const auto path = (std::filesystem::temp_directory_path() / "maniplex_c_api_test.mpx").string();
  ASSERT_EQ(mpx_graph_save(c.g, path.c_str()), MPX_OK);
  Handle back;
  ASSERT_EQ(mpx_graph_load(path.c_str(), &back.g), MPX_OK);
  EXPECT_EQ(mpx_graph_flag_count(back.g), 48u);
  std::filesystem::remove(path);
  mpx_graph* g = nullptr;
  EXPECT_EQ(mpx_graph_load("/nonexistent/x.mpx", &g), MPX_E_IO);
  EXPECT_EQ(mpx_graph_save(c.g, "/nonexistent/dir/x.mpx"), MPX_E_IO);
}

TEST(CApi, MixAndCovering) {
  Handle a;
  Handle b;
  ASSERT_EQ(mpx_gen_torus44(1, 1, &a.g), MPX_OK);
  ASSERT_EQ(mpx_gen_klein44(&b.g), MPX_OK);
  Handle m;
  ASSERT_EQ(mpx_mix(a.g, b.g, 0, 0, &m.g), MPX_OK);
  EXPECT_EQ(mpx_graph_flag_count(m.g), 32u);
  int found = 0;
  std::vector<uint32_t> map(32);
  ASSERT_EQ(mpx_find_covering(m.g, a.g, &found, map.data()), MPX_OK);
  EXPECT_EQ(found, 1);
  ASSERT_EQ(mpx_find_covering(a.g, b.g, &found, nullptr), MPX_OK);
  EXPECT_EQ(found, 0);
  mpx_graph* bad = nullptr;
  EXPECT_EQ(mpx_mix(a.g, b.g, 99, 0, &bad), MPX_E_OUT_OF_RANGE);
  Handle tri;
  ASSERT_EQ(mpx_gen_polygon(3, &tri.g), MPX_OK);
  EXPECT_EQ(mpx_mix(a.g, tri.g, 0, 0, &bad), MPX_E_RANK_MISMATCH);
  EXPECT_EQ(mpx_find_covering(a.g, tri.g, &found, nullptr), MPX_E_RANK_MISMATCH);
  int iso = 1;
  ASSERT_EQ(mpx_isomorphic(a.g, b.g, &iso, nullptr), MPX_OK);
  EXPECT_EQ(iso, 0);
}

TEST(CApi, ThreadCountDoesNotChangeResults) {
  Handle t;
  ASSERT_EQ(mpx_gen_rect3torus(nullptr, &t.g), MPX_OK);
  std::vector<std::string> outputs;
  for (unsigned threads : {1u, 4u}) {
    mpx_set_threads(threads);
    mpx_report* rep = nullptr;
    ASSERT_EQ(mpx_check(t.g, &rep), MPX_OK);
    char* text = nullptr;
    ASSERT_EQ(mpx_report_write(rep, MPX_FORMAT_JSON, &text), MPX_OK);
    outputs.push_back(take(text));
    mpx_report_free(rep);
  }
  mpx_set_threads(1);
  EXPECT_EQ(outputs[0], outputs[1]);
}
