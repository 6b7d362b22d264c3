// maniplex: command-line front end over the C API.
//
// Exit codes: 0 success / yes, 1 a "no" answer (not polytopal, not
// isomorphic, no covering), 2 library or format error, 64 usage error,
// 66 file cannot be read or written.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maniplex.h"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;

struct GraphDeleter {
  void operator()(mpx_graph* g) const { mpx_graph_free(g); }
};
using Graph = std::unique_ptr<mpx_graph, GraphDeleter>;

struct ReportDeleter {
  void operator()(mpx_report* r) const { mpx_report_free(r); }
};

struct Failure {
  int code;
};

int exit_for(mpx_status status) { return status == MPX_E_IO ? kExitNoInput : kExitError; }

void check(mpx_status status) {
  if (status == MPX_OK) return;
  std::cerr << "maniplex: " << mpx_last_error() << "\n";
  throw Failure{exit_for(status)};
}

Graph load(const std::string& path) {
  mpx_graph* g = nullptr;
  check(mpx_graph_load(path.c_str(), &g));
  return Graph(g);
}

std::string take(char* s) {
  std::string out(s);
  mpx_string_free(s);
  return out;
}

void emit_graph(const mpx_graph* g, const std::string& path) {
  if (path.empty() || path == "-") {
    char* text = nullptr;
    check(mpx_graph_write(g, MPX_FORMAT_MPX, &text));
    std::cout << take(text);
  } else {
    check(mpx_graph_save(g, path.c_str()));
  }
}

void print_map(const char* label, const std::vector<uint32_t>& map) {
  std::cout << label;
  for (std::size_t v = 0; v < map.size(); ++v) std::cout << (v == 0 ? " " : ",") << map[v];
  std::cout << "\n";
}

struct GenOptions {
  std::string name;
  int p = -1;
  int d = -1;
  int b = 0;
  int c = 0;
  int rank = -1;
  uint64_t seed = 0;
  std::size_t budget = 64;
  std::vector<int64_t> basis;
  std::string out;
};

int run_gen(const GenOptions& o, CLI::App* gen) {
  mpx_graph* raw = nullptr;
  std::string label;
  std::string provenance = "gen " + o.name;
  auto need = [&](const char* flag) {
    if (gen->count(flag) == 0) {
      std::cerr << "maniplex: gen " << o.name << " needs " << flag << "\n";
      throw Failure{kExitUsage};
    }
  };
  if (o.name == "polygon") {
    need("--p");
    check(mpx_gen_polygon(o.p, &raw));
    label = "polygon_" + std::to_string(o.p);
    provenance += " --p " + std::to_string(o.p);
  } else if (o.name == "cube") {
    need("--d");
    check(mpx_gen_hypercube(o.d, &raw));
    label = "cube_" + std::to_string(o.d);
    provenance += " --d " + std::to_string(o.d);
  } else if (o.name == "torus44") {
    need("--b");
    need("--c");
    check(mpx_gen_torus44(o.b, o.c, &raw));
    label = "torus44_" + std::to_string(o.b) + "_" + std::to_string(o.c);
    provenance += " --b " + std::to_string(o.b) + " --c " + std::to_string(o.c);
  } else if (o.name == "klein44") {
    check(mpx_gen_klein44(&raw));
    label = "klein44";
  } else if (o.name == "rect3torus") {
    if (!o.basis.empty() && o.basis.size() != 9) {
      std::cerr << "maniplex: --basis takes 9 integers\n";
      throw Failure{kExitUsage};
    }
    check(mpx_gen_rect3torus(o.basis.empty() ? nullptr : o.basis.data(), &raw));
    label = "rect3torus";
    if (!o.basis.empty()) {
      provenance += " --basis";
      for (auto x : o.basis) provenance += " " + std::to_string(x);
    }
  } else if (o.name == "random") {
    need("--rank");
    check(mpx_gen_random(o.rank, o.seed, o.budget, &raw));
    label = "random_" + std::to_string(o.rank) + "_" + std::to_string(o.seed);
    provenance += " --rank " + std::to_string(o.rank) + " --seed " + std::to_string(o.seed) + " --budget " +
                  std::to_string(o.budget);
  } else {
    std::cerr << "maniplex: unknown generator '" << o.name << "'\n";
    throw Failure{kExitUsage};
  }
  Graph g(raw);
  check(mpx_graph_set_metadata(g.get(), label.c_str(), provenance.c_str()));
  emit_graph(g.get(), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maniplexes as edge-coloured graphs: polytopality checks, posets, mixes"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for the subset sweeps")->envname("MANIPLEX_THREADS");

  std::string file_a;
  std::string file_b;
  bool json = false;

  auto* check_cmd = app.add_subcommand("check", "Decide polytopality and print the report");
  check_cmd->add_option("file", file_a)->required();
  check_cmd->add_flag("--json", json, "JSON report");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write a generated maniplex");
  gen->add_option("name", gen_opts.name, "polygon, cube, torus44, klein44, rect3torus, random")->required();
  gen->add_option("--p", gen_opts.p);
  gen->add_option("--d", gen_opts.d);
  gen->add_option("--b", gen_opts.b);
  gen->add_option("--c", gen_opts.c);
  gen->add_option("--rank", gen_opts.rank);
  gen->add_option("--seed", gen_opts.seed);
  gen->add_option("--budget", gen_opts.budget);
  gen->add_option("--basis", gen_opts.basis, "Nine integers: rows v1 v2 v3");
  gen->add_option("-o,--output", gen_opts.out);

  bool dot = false;
  auto* poset_cmd = app.add_subcommand("poset", "Export the induced poset");
  poset_cmd->add_option("file", file_a)->required();
  auto* dot_flag = poset_cmd->add_flag("--dot", dot);
  poset_cmd->add_flag("--json", json)->excludes(dot_flag);

  uint32_t base_a = 0;
  uint32_t base_b = 0;
  std::string out;
  auto* mix_cmd = app.add_subcommand("mix", "Component of the parallel product through two base flags");
  mix_cmd->add_option("a", file_a)->required();
  mix_cmd->add_option("b", file_b)->required();
  mix_cmd->add_option("--base-a", base_a);
  mix_cmd->add_option("--base-b", base_b);
  mix_cmd->add_option("-o,--output", out);

  auto* iso_cmd = app.add_subcommand("iso", "Colour-preserving isomorphism test");
  iso_cmd->add_option("a", file_a)->required();
  iso_cmd->add_option("b", file_b)->required();

  auto* cover_cmd = app.add_subcommand("cover", "Find a covering a -> b");
  cover_cmd->add_option("a", file_a)->required();
  cover_cmd->add_option("b", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    mpx_set_threads(threads == 0 ? 1 : threads);
    if (check_cmd->parsed()) {
      const auto g = load(file_a);
      mpx_report* raw = nullptr;
      check(mpx_check(g.get(), &raw));
      std::unique_ptr<mpx_report, ReportDeleter> report(raw);
      char* text = nullptr;
      check(mpx_report_write(report.get(), json ? MPX_FORMAT_JSON : MPX_FORMAT_TEXT, &text));
      std::cout << take(text);
      return mpx_report_polytopal(report.get()) ? 0 : kExitNo;
    }
    if (gen->parsed()) return run_gen(gen_opts, gen);
    if (poset_cmd->parsed()) {
      const auto g = load(file_a);
      char* text = nullptr;
      const auto format = dot ? MPX_FORMAT_DOT : json ? MPX_FORMAT_JSON : MPX_FORMAT_TEXT;
      check(mpx_poset_write(g.get(), format, &text, nullptr));
      std::cout << take(text);
      return 0;
    }
    if (mix_cmd->parsed()) {
      const auto a = load(file_a);
      const auto b = load(file_b);
      mpx_graph* raw = nullptr;
      check(mpx_mix(a.get(), b.get(), base_a, base_b, &raw));
      Graph m(raw);
      emit_graph(m.get(), out);
      return 0;
    }
    if (iso_cmd->parsed() || cover_cmd->parsed()) {
      const auto a = load(file_a);
      const auto b = load(file_b);
      std::vector<uint32_t> map(mpx_graph_flag_count(a.get()));
      int yes = 0;
      if (iso_cmd->parsed()) {
        check(mpx_isomorphic(a.get(), b.get(), &yes, map.data()));
        if (!yes) {
          std::cout << "not isomorphic\n";
          return kExitNo;
        }
        print_map("isomorphic; flag map:", map);
      } else {
        check(mpx_find_covering(a.get(), b.get(), &yes, map.data()));
        if (!yes) {
          std::cout << "no covering\n";
          return kExitNo;
        }
        print_map("covering; flag map:", map);
      }
      return 0;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
