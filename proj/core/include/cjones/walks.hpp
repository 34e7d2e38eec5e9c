#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cjones/braid.hpp"

namespace cjones {

/// One horizontal slice of one braid column.  Level 0 is above crossing 1,
/// level t the gap below crossing t, level length() the bottom of the braid.
struct Cell {
  int level = 0;
  int column = 1;

  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

inline int cell_id(const Cell& c, int width) {
  return c.level * width + (c.column - 1);
}
inline Cell cell_from_id(int id, int width) {
  return Cell{id / width, id % width + 1};
}

/// A simple walk, identified by its set of active crossings.
struct Walk {
  std::uint64_t active = 0;        // bit t-1 set iff crossing t is active
  std::vector<int> J;              // starting bottom columns, ascending
  std::vector<int> exits;          // exits[k] = top column of path from J[k]
  int inversions = 0;
  int prefactor_sign = 1;          // (-1)^{1 + |J| + inv}
  int prefactor_qpow = 0;          // |J| + inv
  std::vector<std::string> local;  // local[t-1]: letters 'a'/'b'/'c' at
                                   // crossing t, above path first
  std::vector<int> cells;          // sorted flat cell ids of all paths

  bool operator==(const Walk&) const = default;
};

/// Weight rendering, e.g. "q^3 · b_1 c_1 c_2 c_3 a_4 b_5 b_6".
std::string weight_string(const Walk& w);

struct WalkCensus {
  BraidWord braid;
  std::vector<Walk> walks;  // sorted by (active, J)

  std::size_t count() const { return walks.size(); }
};

/// One walk per line: monomial, J, pi, weight.
std::string dump(const WalkCensus& census);

struct EnumOptions {
  int max_length = 24;  // enumeration iterates 2^length monomials
  int threads = 0;      // 0: hardware concurrency
};

struct Coloring {
  bool valid = false;
  std::string reason;         // set when invalid
  std::vector<int8_t> color;  // per flat cell id: 0 none, 1 red, 2 black
};

/// Seeds red/black at each active crossing's oriented smoothing, propagates
/// through inactive crossings and the closure.  Invalid on a collision or if
/// a strand-1 end cell turns red.  Cells left uncolored (possible only when
/// the closure is a link) stay 0.
Coloring color_from_monomial(const BraidWord& b, std::uint64_t active_mask);

/// Reconstructs the walk of a valid coloring by tracing every red bottom
/// cell upward.  The monomial must be nonempty.
Walk trace_walk(const BraidWord& b, std::uint64_t active_mask,
                const Coloring& coloring);

/// Enumerates SW_b by the monomial/coloring method.  Deterministic: walks
/// sorted by (monomial, J) regardless of thread count.
WalkCensus enumerate_simple_walks(const BraidWord& b, EnumOptions opt = {});

/// Censuses of b and reflect(b); their monomial sets are disjoint for knots.
std::pair<WalkCensus, WalkCensus> enumerate_semi_simple(const BraidWord& b,
                                                        EnumOptions opt = {});

/// Independent oracle: enumerates walks path-by-path by depth-first search
/// over jump/stay choices, keeping pairwise cell-disjoint path systems with
/// J a subset of {2..m}.  Must agree with enumerate_simple_walks.
WalkCensus enumerate_paths_dfs(const BraidWord& b, EnumOptions opt = {});

}  // namespace cjones
