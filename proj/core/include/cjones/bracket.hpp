#pragma once

#include "cjones/braid.hpp"
#include "cjones/laurent.hpp"

namespace cjones {

/// Closure diagram of a braid word: one 4-valent crossing per letter,
/// edges given by the braid cells plus the closure arcs.
struct PlanarDiagram {
  int width = 1;
  std::vector<BraidLetter> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int edge_count() const {
    return (crossing_count() + 1) * width;  // one edge per cell
  }
};

PlanarDiagram braid_closure_pd(const BraidWord& b);

struct BracketOptions {
  int max_crossings = 20;  // 2^crossings smoothing states
  int threads = 0;
};

/// Jones polynomial of the closure by the brute-force Kauffman bracket
/// state sum, normalized so the unknot gives 1.  Independent of the walk
/// engine; shares only BraidWord and Laurent.
Laurent jones_via_bracket(const BraidWord& b, BracketOptions opt = {});

}  // namespace cjones
