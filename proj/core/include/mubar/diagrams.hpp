#pragma once

#include <stdexcept>
#include <vector>

#include "mubar/factor.hpp"
#include "mubar/milnor.hpp"
#include "mubar/series.hpp"
#include "mubar/words.hpp"

namespace mubar {

// One PD crossing: arc labels (a,b,c,d) listed counterclockwise starting at
// the incoming under-arc.  For sign +1 the over strand runs d -> b, for
// sign -1 it runs b -> d.
struct Crossing {
  int a = 0, b = 0, c = 0, d = 0;
  int sign = 0;
};

// Oriented link diagram as PD data.  Free loops are crossingless unknot
// components; `components` counts every component, free loops included.
struct LinkDiagram {
  int components = 0;
  int free_loops = 0;
  std::vector<Crossing> crossings;

  void validate() const;
};

// Closures of a pure braid, drawn with odd strands running up and even
// strands running down (crossing signs follow those orientations).
// close_link joins each strand to itself; close_knot joins the strands
// serpentine-fashion into a single knot, adding no crossings.
LinkDiagram close_link(const Braid& b);
LinkDiagram close_knot(const Braid& b);

// Traversal form: each component as its cyclic sequence of crossing passes.
// Components are ordered by their smallest arc label.
struct TraceDiagram {
  struct Pass {
    int crossing = 0;  // index into signs
    bool over = false;
  };
  std::vector<int> signs;
  std::vector<std::vector<Pass>> comps;
  int free_loops = 0;

  static TraceDiagram from_pd(const LinkDiagram& d);
  int crossing_count() const { return static_cast<int>(signs.size()); }
};

// Linking numbers between components (half the signed count of shared
// crossings); free loops contribute zero rows at the end.
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

struct CrossingLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conway polynomial by the skein relation, recursing to descending diagrams.
// Throws CrossingLimitError if the diagram exceeds max_crossings.
ConwayPoly conway_skein(const TraceDiagram& d, int max_crossings);
ConwayPoly conway_skein(const LinkDiagram& d, int max_crossings);

// One full check of nabla_L = nabla_K * Gamma for a pure braid, with both
// sides compared as z-series through degree q-1.
struct VerifyResult {
  int m = 0;
  int q = 0;
  Series1 gamma_z;
  ConwayPoly nabla_link;
  ConwayPoly nabla_knot;
  Series1 lhs;  // nabla_link
  Series1 rhs;  // nabla_knot * gamma_z
  bool matched = false;

  VerifyResult() : gamma_z(0), lhs(0), rhs(0) {}
};

VerifyResult verify_factorization(const Braid& b, int q, int max_crossings);

}  // namespace mubar
