// Named maniplexes shared by the test suites.
#pragma once

#include <string>
#include <vector>

#include "maniplex/generators.hpp"
#include "maniplex/maniplex.hpp"

namespace fixtures {

struct Named {
  std::string name;
  maniplex::Maniplex m;
};

inline maniplex::Maniplex one_maniplex() { return maniplex::validate(maniplex::ColouredGraph(1, {{1, 0}})); }

/// Everything small enough for the brute-force oracles (at most 64 flags).
inline std::vector<Named> small() {
  using namespace maniplex;
  std::vector<Named> out;
  out.push_back({"one", one_maniplex()});
  for (int p = 2; p <= 6; ++p) out.push_back({"polygon_" + std::to_string(p), polygon(p)});
  for (int d = 1; d <= 3; ++d) out.push_back({"cube_" + std::to_string(d), hypercube(d)});
  out.push_back({"torus44_1_0", torus_44(1, 0)});
  out.push_back({"torus44_1_1", torus_44(1, 1)});
  out.push_back({"torus44_2_0", torus_44(2, 0)});
  out.push_back({"torus44_2_1", torus_44(2, 1)});
  out.push_back({"torus44_2_2", torus_44(2, 2)});
  out.push_back({"klein44", klein_44()});
  return out;
}

/// small() plus the larger generator outputs.
inline std::vector<Named> all() {
  using namespace maniplex;
  auto out = small();
  out.push_back({"cube_4", hypercube(4)});
  out.push_back({"torus44_3_0", torus_44(3, 0)});
  out.push_back({"rect3torus", rectified_cubic_3torus(reference_3torus_basis())});
  return out;
}

}  // namespace fixtures
