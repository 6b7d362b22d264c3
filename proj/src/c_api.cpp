#include "maniplex.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "maniplex/error.hpp"
#include "maniplex/generators.hpp"
#include "maniplex/io.hpp"
#include "maniplex/mix.hpp"
#include "maniplex/parallel.hpp"
#include "maniplex/polytopality.hpp"

struct mpx_graph {
  maniplex::Maniplex m;
  std::string name;
  std::string provenance;
};

struct mpx_report {
  maniplex::PolytopalityReport report;
  std::size_t flags = 0;
  int rank = 0;
};

namespace {

struct LastError {
  std::string message;
  std::int64_t line = -1;
  mpx_status cause = MPX_OK;
};

thread_local LastError last_error;

mpx_status to_status(maniplex::ErrorCode code) { return static_cast<mpx_status>(static_cast<int>(code)); }

mpx_status fail(mpx_status status, std::string message) {
  last_error = {std::move(message), -1, MPX_OK};
  return status;
}

template <class F>
mpx_status guarded(F&& body) {
  try {
    body();
    last_error = {};
    return MPX_OK;
  } catch (const maniplex::Error& e) {
    const bool parse = e.code() == maniplex::ErrorCode::kParseError && e.cause() != e.code();
    last_error = {e.what(), e.witness().line, parse ? to_status(e.cause()) : MPX_OK};
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    return fail(MPX_E_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(MPX_E_UNKNOWN, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

mpx_status emit(mpx_graph** out, maniplex::Maniplex m) {
  *out = new mpx_graph{std::move(m), {}, {}};
  return MPX_OK;
}

maniplex::MpxDocument document(const mpx_graph* g) { return {g->m.graph(), g->name, g->provenance}; }

}  // namespace

#define MPX_REQUIRE(cond) \
  do {                    \
    if (!(cond)) return fail(MPX_E_NULL_ARGUMENT, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* mpx_status_name(mpx_status status) {
  switch (status) {
    case MPX_OK:
      return "Ok";
    case MPX_E_NULL_ARGUMENT:
      return "NullArgument";
    case MPX_E_UNKNOWN:
      return "Unknown";
    default:
      if (status >= MPX_E_NOT_INVOLUTION && status <= MPX_E_NOT_A_PRODUCT) {
        return maniplex::to_string(static_cast<maniplex::ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* mpx_last_error(void) { return last_error.message.c_str(); }
int64_t mpx_last_error_line(void) { return last_error.line; }
mpx_status mpx_last_error_cause(void) { return last_error.cause; }

void mpx_string_free(char* s) { std::free(s); }
void mpx_set_threads(unsigned threads) { maniplex::set_thread_count(threads); }

mpx_status mpx_graph_create(int rank, size_t flags, const uint32_t* adjacency, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  MPX_REQUIRE(adjacency != nullptr || flags == 0);
  return guarded([&] {
    if (rank < 1 || rank > maniplex::kMaxRank) {
      throw maniplex::Error(maniplex::ErrorCode::kOutOfRange, "rank out of range");
    }
    std::vector<std::vector<maniplex::Flag>> rows(static_cast<std::size_t>(rank));
    for (std::size_t c = 0; c < rows.size(); ++c) rows[c].assign(adjacency + c * flags, adjacency + (c + 1) * flags);
    emit(out, maniplex::validate(maniplex::build_graph(rank, rows)));
  });
}

void mpx_graph_free(mpx_graph* g) { delete g; }
int mpx_graph_rank(const mpx_graph* g) { return g == nullptr ? -1 : g->m.rank(); }
size_t mpx_graph_flag_count(const mpx_graph* g) { return g == nullptr ? 0 : g->m.flag_count(); }

uint32_t mpx_graph_adj(const mpx_graph* g, int colour, uint32_t flag) {
  if (g == nullptr || colour < 0 || colour >= g->m.rank() || flag >= g->m.flag_count()) {
    return std::numeric_limits<uint32_t>::max();
  }
  return g->m.adj(colour, flag);
}

mpx_status mpx_graph_set_metadata(mpx_graph* g, const char* name, const char* provenance) {
  MPX_REQUIRE(g != nullptr);
  g->name = name == nullptr ? "" : name;
  g->provenance = provenance == nullptr ? "" : provenance;
  return MPX_OK;
}

mpx_status mpx_graph_parse(const char* mpx_text, mpx_graph** out) {
  MPX_REQUIRE(mpx_text != nullptr && out != nullptr);
  return guarded([&] {
    auto doc = maniplex::read_mpx_document(mpx_text);
    *out = new mpx_graph{maniplex::validate(std::move(doc.graph)), std::move(doc.name), std::move(doc.provenance)};
  });
}

mpx_status mpx_graph_load(const char* path, mpx_graph** out) {
  MPX_REQUIRE(path != nullptr && out != nullptr);
  std::string text;
  const auto status = guarded([&] { text = maniplex::read_file(path); });
  if (status != MPX_OK) return status;
  return mpx_graph_parse(text.c_str(), out);
}

mpx_status mpx_graph_save(const mpx_graph* g, const char* path) {
  MPX_REQUIRE(g != nullptr && path != nullptr);
  return guarded([&] { maniplex::write_file(path, maniplex::write_mpx(document(g))); });
}

mpx_status mpx_graph_write(const mpx_graph* g, mpx_format format, char** out) {
  MPX_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    switch (format) {
      case MPX_FORMAT_MPX:
        *out = dup(maniplex::write_mpx(document(g)));
        break;
      case MPX_FORMAT_DOT:
        *out = dup(maniplex::write_dot(g->m.graph()));
        break;
      case MPX_FORMAT_JSON:
        *out = dup(maniplex::graph_json(document(g)));
        break;
      default:
        throw maniplex::Error(maniplex::ErrorCode::kBadParam, "unsupported graph format");
    }
  });
}

mpx_status mpx_gen_polygon(int p, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] { emit(out, maniplex::polygon(p)); });
}

mpx_status mpx_gen_hypercube(int d, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] { emit(out, maniplex::hypercube(d)); });
}

mpx_status mpx_gen_torus44(int b, int c, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] { emit(out, maniplex::torus_44(b, c)); });
}

mpx_status mpx_gen_klein44(mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] { emit(out, maniplex::klein_44()); });
}

mpx_status mpx_gen_rect3torus(const int64_t* basis, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] {
    auto lattice = maniplex::reference_3torus_basis();
    if (basis != nullptr) {
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t k = 0; k < 3; ++k) lattice.v[r][k] = basis[r * 3 + k];
      }
    }
    emit(out, maniplex::rectified_cubic_3torus(lattice));
  });
}

mpx_status mpx_gen_random(int rank, uint64_t seed, size_t budget, mpx_graph** out) {
  MPX_REQUIRE(out != nullptr);
  return guarded([&] { emit(out, maniplex::random_maniplex(rank, seed, budget)); });
}

mpx_status mpx_check(const mpx_graph* g, mpx_report** out) {
  MPX_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] { *out = new mpx_report{maniplex::is_polytopal(g->m), g->m.flag_count(), g->m.rank()}; });
}

void mpx_report_free(mpx_report* r) { delete r; }

int mpx_report_polytopal(const mpx_report* r) { return r != nullptr && r->report.polytopal() ? 1 : 0; }

int mpx_report_cip_witness(const mpx_report* r, uint64_t* colours, uint32_t* u, uint32_t* v) {
  if (r == nullptr || !r->report.cip.witness) return 0;
  const auto& w = *r->report.cip.witness;
  if (colours != nullptr) *colours = w.colours.bits();
  if (u != nullptr) *u = w.u;
  if (v != nullptr) *v = w.v;
  return 1;
}

mpx_status mpx_report_write(const mpx_report* r, mpx_format format, char** out) {
  MPX_REQUIRE(r != nullptr && out != nullptr);
  return guarded([&] {
    switch (format) {
      case MPX_FORMAT_TEXT:
        *out = dup(maniplex::report_text(r->report, r->flags, r->rank));
        break;
      case MPX_FORMAT_JSON:
        *out = dup(maniplex::report_json(r->report, r->flags, r->rank));
        break;
      default:
        throw maniplex::Error(maniplex::ErrorCode::kBadParam, "unsupported report format");
    }
  });
}

mpx_status mpx_poset_write(const mpx_graph* g, mpx_format format, char** out, int* is_polytope) {
  MPX_REQUIRE(g != nullptr && out != nullptr);
  return guarded([&] {
    const auto poset = maniplex::induced_poset(g->m);
    const auto report = maniplex::is_polytope(g->m, poset);
    switch (format) {
      case MPX_FORMAT_DOT:
        *out = dup(maniplex::write_poset_dot(poset.order()));
        break;
      case MPX_FORMAT_JSON:
        *out = dup(maniplex::poset_json(poset, report));
        break;
      case MPX_FORMAT_TEXT:
        *out = dup(maniplex::poset_text(poset, report));
        break;
      default:
        throw maniplex::Error(maniplex::ErrorCode::kBadParam, "unsupported poset format");
    }
    if (is_polytope != nullptr) *is_polytope = report.is_polytope ? 1 : 0;
  });
}

mpx_status mpx_isomorphic(const mpx_graph* a, const mpx_graph* b, int* result, uint32_t* map) {
  MPX_REQUIRE(a != nullptr && b != nullptr && result != nullptr);
  return guarded([&] {
    const auto iso = maniplex::are_isomorphic(a->m.graph(), b->m.graph());
    *result = iso ? 1 : 0;
    if (iso && map != nullptr) std::copy(iso->begin(), iso->end(), map);
  });
}

mpx_status mpx_find_covering(const mpx_graph* a, const mpx_graph* b, int* found, uint32_t* map) {
  MPX_REQUIRE(a != nullptr && b != nullptr && found != nullptr);
  return guarded([&] {
    const auto cover = maniplex::find_covering(a->m, b->m);
    *found = cover ? 1 : 0;
    if (cover && map != nullptr) std::copy(cover->begin(), cover->end(), map);
  });
}

mpx_status mpx_mix(const mpx_graph* a, const mpx_graph* b, uint32_t base_a, uint32_t base_b, mpx_graph** out) {
  MPX_REQUIRE(a != nullptr && b != nullptr && out != nullptr);
  return guarded([&] { emit(out, maniplex::mix(a->m, b->m, base_a, base_b).maniplex); });
}

}  // extern "C"
