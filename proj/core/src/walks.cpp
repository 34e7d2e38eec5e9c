#include "cjones/walks.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <sstream>
#include <thread>

#include "cjones/errors.hpp"

namespace cjones {

namespace {

struct PathTrace {
  int start = 0;
  int exit = 0;
  std::vector<int> cells;                      // flat ids, bottom to top
  std::vector<std::pair<int, char>> letters;   // (crossing, letter)
};

// Upward transition through crossing `cr` for a path currently in `col`
// just below it.  Activity decides jump vs. crossing over.
struct StepResult {
  int next_col;
  char letter;  // 0 when the column is untouched
};

StepResult step_up(const BraidLetter& cr, bool active, int col) {
  const int i = cr.index;
  if (col < i || col > i + 1) return {col, 0};
  if (active) {
    // Oriented smoothing: strands go straight; the over-side carries the
    // jump.  A path on the other side cannot be here (its cells collide).
    const int over = cr.sign > 0 ? i : i + 1;
    if (col != over)
      throw DomainError("walk trace reached the inactive side of an active crossing");
    return {over, 'a'};
  }
  if (cr.sign > 0) {
    return col == i ? StepResult{i + 1, 'c'} : StepResult{i, 'b'};
  }
  return col == i + 1 ? StepResult{i, 'c'} : StepResult{i + 1, 'b'};
}

// Deterministic upward trace once the active set is fixed.
PathTrace trace_path(const BraidWord& b, std::uint64_t mask, int start) {
  const int l = b.length();
  PathTrace p;
  p.start = start;
  p.cells.push_back(cell_id({l, start}, b.width));
  int col = start;
  for (int t = l; t >= 1; --t) {
    const auto& cr = b.letters[static_cast<size_t>(t - 1)];
    const bool active = (mask >> (t - 1)) & 1;
    auto [next, letter] = step_up(cr, active, col);
    if (letter) p.letters.emplace_back(t, letter);
    col = next;
    p.cells.push_back(cell_id({t - 1, col}, b.width));
  }
  p.exit = col;
  return p;
}

Walk assemble_walk(const BraidWord& b, std::vector<PathTrace> paths) {
  std::sort(paths.begin(), paths.end(),
            [](const PathTrace& a, const PathTrace& c) { return a.start < c.start; });
  Walk w;
  w.local.assign(static_cast<size_t>(b.length()), std::string{});
  for (const auto& p : paths) {
    w.J.push_back(p.start);
    w.exits.push_back(p.exit);
    for (auto [t, ch] : p.letters) {
      w.local[static_cast<size_t>(t - 1)].push_back(ch);
      if (ch == 'a') w.active |= std::uint64_t{1} << (t - 1);
    }
    w.cells.insert(w.cells.end(), p.cells.begin(), p.cells.end());
  }
  for (size_t x = 0; x < w.exits.size(); ++x)
    for (size_t y = x + 1; y < w.exits.size(); ++y)
      if (w.exits[x] > w.exits[y]) ++w.inversions;
  const int k = static_cast<int>(w.J.size()) + w.inversions;
  w.prefactor_sign = (1 + k) % 2 == 0 ? 1 : -1;
  w.prefactor_qpow = k;
  std::sort(w.cells.begin(), w.cells.end());
  assert(std::adjacent_find(w.cells.begin(), w.cells.end()) == w.cells.end());
  return w;
}

// Both closure sides of strand 1 must stay inactive.
bool strand1_red(const BraidWord& b, const std::vector<int8_t>& color) {
  const int l = b.length();
  return color[static_cast<size_t>(cell_id({0, 1}, b.width))] == 1 ||
         color[static_cast<size_t>(cell_id({l, 1}, b.width))] == 1;
}

// The two neighbours of a cell in the smoothed closure diagram.
void neighbours(const BraidWord& b, std::uint64_t mask, int id, int out[2]) {
  const int m = b.width;
  const int l = b.length();
  const Cell c = cell_from_id(id, m);
  // Link through the crossing above (or the closure arc at the top).
  if (c.level == 0) {
    out[0] = cell_id({l, c.column}, m);
  } else {
    const int t = c.level;
    const auto& cr = b.letters[static_cast<size_t>(t - 1)];
    int up = c.column;
    if (!((mask >> (t - 1)) & 1)) {
      if (c.column == cr.index) up = cr.index + 1;
      else if (c.column == cr.index + 1) up = cr.index;
    }
    out[0] = cell_id({t - 1, up}, m);
  }
  // Link through the crossing below (or the closure arc at the bottom).
  if (c.level == l) {
    out[1] = cell_id({0, c.column}, m);
  } else {
    const int t = c.level + 1;
    const auto& cr = b.letters[static_cast<size_t>(t - 1)];
    int down = c.column;
    if (!((mask >> (t - 1)) & 1)) {
      if (c.column == cr.index) down = cr.index + 1;
      else if (c.column == cr.index + 1) down = cr.index;
    }
    out[1] = cell_id({t, down}, m);
  }
}

}  // namespace

Coloring color_from_monomial(const BraidWord& b, std::uint64_t active_mask) {
  const int m = b.width;
  const int l = b.length();
  Coloring out;
  out.color.assign(static_cast<size_t>((l + 1) * m), 0);

  std::vector<int> stack;
  bool collided = false;
  auto paint = [&](int id, int8_t col) {
    auto& slot = out.color[static_cast<size_t>(id)];
    if (slot == col) return;
    if (slot != 0) {
      collided = true;
      return;
    }
    slot = col;
    stack.push_back(id);
  };

  for (int t = 1; t <= l && !collided; ++t) {
    if (!((active_mask >> (t - 1)) & 1)) continue;
    const auto& cr = b.letters[static_cast<size_t>(t - 1)];
    const int red_col = cr.sign > 0 ? cr.index : cr.index + 1;
    const int black_col = cr.sign > 0 ? cr.index + 1 : cr.index;
    paint(cell_id({t - 1, red_col}, m), 1);
    paint(cell_id({t, red_col}, m), 1);
    paint(cell_id({t - 1, black_col}, m), 2);
    paint(cell_id({t, black_col}, m), 2);
  }

  while (!stack.empty() && !collided) {
    const int id = stack.back();
    stack.pop_back();
    int nb[2];
    neighbours(b, active_mask, id, nb);
    paint(nb[0], out.color[static_cast<size_t>(id)]);
    paint(nb[1], out.color[static_cast<size_t>(id)]);
  }

  if (collided) {
    out.reason = "red and black arcs collide";
    return out;
  }
  if (strand1_red(b, out.color)) {
    out.reason = "strand 1 is active";
    return out;
  }
  out.valid = true;
  return out;
}

Walk trace_walk(const BraidWord& b, std::uint64_t active_mask,
                const Coloring& coloring) {
  if (!coloring.valid) throw DomainError("trace_walk on an invalid coloring");
  const int l = b.length();
  std::vector<PathTrace> paths;
  for (int col = 2; col <= b.width; ++col) {
    if (coloring.color[static_cast<size_t>(cell_id({l, col}, b.width))] == 1)
      paths.push_back(trace_path(b, active_mask, col));
  }
  if (paths.empty()) throw DomainError("trace_walk: coloring has no red bottom cell");
  return assemble_walk(b, std::move(paths));
}

namespace {

// Uncolored closure components of a valid coloring.  Possible only for
// link closures; each component can carry the walk's idle paths, provided
// none of its bottom cells sits in column 1.
struct IdleComponent {
  std::vector<int> bottoms;  // bottom columns, ascending
  bool eligible = true;
};

std::vector<IdleComponent> idle_components(const BraidWord& b,
                                           std::uint64_t mask,
                                           const Coloring& coloring) {
  const int m = b.width;
  const int l = b.length();
  std::vector<IdleComponent> comps;
  std::vector<int8_t> seen(coloring.color.size(), 0);
  std::vector<int> stack;
  for (int id = 0; id < static_cast<int>(coloring.color.size()); ++id) {
    if (coloring.color[static_cast<size_t>(id)] != 0 ||
        seen[static_cast<size_t>(id)])
      continue;
    IdleComponent comp;
    stack.push_back(id);
    seen[static_cast<size_t>(id)] = 1;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      const Cell c = cell_from_id(cur, m);
      if (c.level == l) {
        comp.bottoms.push_back(c.column);
        if (c.column == 1) comp.eligible = false;
      }
      int nb[2];
      neighbours(b, mask, cur, nb);
      for (int x : nb) {
        if (!seen[static_cast<size_t>(x)]) {
          seen[static_cast<size_t>(x)] = 1;
          stack.push_back(x);
        }
      }
    }
    std::sort(comp.bottoms.begin(), comp.bottoms.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// All simple walks with the given active set: the red walk of the coloring,
// optionally augmented by idle paths along eligible uncolored components.
void walks_for_mask(const BraidWord& b, std::uint64_t mask,
                    std::vector<Walk>& out) {
  Coloring coloring = color_from_monomial(b, mask);
  if (!coloring.valid) return;

  const int l = b.length();
  std::vector<int> red_bottoms;
  for (int col = 2; col <= b.width; ++col)
    if (coloring.color[static_cast<size_t>(cell_id({l, col}, b.width))] == 1)
      red_bottoms.push_back(col);
  if (mask != 0 && red_bottoms.empty()) return;  // cannot happen for knots

  std::vector<IdleComponent> comps = idle_components(b, mask, coloring);
  std::vector<const IdleComponent*> eligible;
  for (const auto& c : comps)
    if (c.eligible) eligible.push_back(&c);

  const size_t k = eligible.size();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
    if (mask == 0 && sub == 0) continue;  // walks with empty J are excluded
    std::vector<PathTrace> paths;
    for (int col : red_bottoms) paths.push_back(trace_path(b, mask, col));
    for (size_t ci = 0; ci < k; ++ci) {
      if (!((sub >> ci) & 1)) continue;
      for (int col : eligible[ci]->bottoms)
        paths.push_back(trace_path(b, mask, col));
    }
    if (paths.empty()) continue;
    out.push_back(assemble_walk(b, std::move(paths)));
  }
}

void sort_census(std::vector<Walk>& walks) {
  std::sort(walks.begin(), walks.end(), [](const Walk& a, const Walk& b) {
    if (a.active != b.active) return a.active < b.active;
    return a.J < b.J;
  });
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

WalkCensus enumerate_simple_walks(const BraidWord& b, EnumOptions opt) {
  const int l = b.length();
  if (l > opt.max_length)
    throw ResourceError("braid length " + std::to_string(l) +
                        " exceeds the enumeration limit " +
                        std::to_string(opt.max_length) +
                        "; raise the limit to proceed");
  const std::uint64_t total = std::uint64_t{1} << l;
  const int threads = std::min<std::uint64_t>(resolve_threads(opt.threads), total);

  WalkCensus census;
  census.braid = b;
  if (threads <= 1 || total < 4096) {
    for (std::uint64_t mask = 0; mask < total; ++mask)
      walks_for_mask(b, mask, census.walks);
  } else {
    std::vector<std::future<std::vector<Walk>>> parts;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int ti = 0; ti < threads; ++ti) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(ti);
      const std::uint64_t hi = std::min(total, lo + chunk);
      parts.push_back(std::async(std::launch::async, [&b, lo, hi]() {
        std::vector<Walk> acc;
        for (std::uint64_t mask = lo; mask < hi; ++mask)
          walks_for_mask(b, mask, acc);
        return acc;
      }));
    }
    for (auto& f : parts) {
      auto part = f.get();
      census.walks.insert(census.walks.end(),
                          std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
    }
  }
  sort_census(census.walks);
  return census;
}

std::pair<WalkCensus, WalkCensus> enumerate_semi_simple(const BraidWord& b,
                                                        EnumOptions opt) {
  return {enumerate_simple_walks(b, opt),
          enumerate_simple_walks(reflect(b), opt)};
}

namespace {

// Path enumeration with explicit jump/stay branching; the oracle side of
// the dual-route check.
struct DfsState {
  const BraidWord& b;
  std::vector<int> J;
  std::vector<char> used;         // cell occupancy
  std::vector<PathTrace> paths;
  std::vector<Walk>* out;
};

void dfs_next_path(DfsState& st, size_t k);

void dfs_path(DfsState& st, size_t k, PathTrace& p, int level, int col) {
  const int m = st.b.width;
  if (level == 0) {
    p.exit = col;
    st.paths.push_back(p);
    dfs_next_path(st, k + 1);
    st.paths.pop_back();
    return;
  }
  const int t = level;
  const auto& cr = st.b.letters[static_cast<size_t>(t - 1)];
  auto try_move = [&](int next, char letter) {
    const int id = cell_id({t - 1, next}, m);
    if (st.used[static_cast<size_t>(id)]) return;
    st.used[static_cast<size_t>(id)] = 1;
    p.cells.push_back(id);
    if (letter) p.letters.emplace_back(t, letter);
    dfs_path(st, k, p, level - 1, next);
    if (letter) p.letters.pop_back();
    p.cells.pop_back();
    st.used[static_cast<size_t>(id)] = 0;
  };
  if (col < cr.index || col > cr.index + 1) {
    try_move(col, 0);
    return;
  }
  if (cr.sign > 0) {
    if (col == cr.index) {
      try_move(cr.index + 1, 'c');  // stay on the overstrand
      try_move(cr.index, 'a');      // jump down
    } else {
      try_move(cr.index, 'b');
    }
  } else {
    if (col == cr.index + 1) {
      try_move(cr.index, 'c');
      try_move(cr.index + 1, 'a');
    } else {
      try_move(cr.index + 1, 'b');
    }
  }
}

void dfs_next_path(DfsState& st, size_t k) {
  if (k == st.J.size()) {
    std::vector<int> exits;
    for (const auto& p : st.paths) exits.push_back(p.exit);
    std::sort(exits.begin(), exits.end());
    if (exits != st.J) return;
    st.out->push_back(assemble_walk(st.b, st.paths));
    return;
  }
  const int start = st.J[k];
  const int id = cell_id({st.b.length(), start}, st.b.width);
  if (st.used[static_cast<size_t>(id)]) return;
  st.used[static_cast<size_t>(id)] = 1;
  PathTrace p;
  p.start = start;
  p.cells.push_back(id);
  dfs_path(st, k, p, st.b.length(), start);
  st.used[static_cast<size_t>(id)] = 0;
}

}  // namespace

WalkCensus enumerate_paths_dfs(const BraidWord& b, EnumOptions opt) {
  const int l = b.length();
  if (l > opt.max_length)
    throw ResourceError("braid length exceeds the enumeration limit");
  WalkCensus census;
  census.braid = b;
  const int m = b.width;
  for (std::uint32_t jmask = 1; jmask < (1u << (m - 1)); ++jmask) {
    DfsState st{b, {}, {}, {}, &census.walks};
    for (int col = 2; col <= m; ++col)
      if ((jmask >> (col - 2)) & 1) st.J.push_back(col);
    st.used.assign(static_cast<size_t>((l + 1) * m), 0);
    dfs_next_path(st, 0);
  }
  sort_census(census.walks);
  return census;
}

std::string weight_string(const Walk& w) {
  std::ostringstream os;
  if (w.prefactor_sign < 0) os << "-";
  os << "q^" << w.prefactor_qpow;
  for (size_t t = 0; t < w.local.size(); ++t)
    for (char ch : w.local[t]) os << " " << ch << "_" << t + 1;
  return os.str();
}

std::string dump(const WalkCensus& census) {
  std::ostringstream os;
  for (const auto& w : census.walks) {
    os << "[";
    bool first = true;
    for (int t = 0; t < 64; ++t) {
      if ((w.active >> t) & 1) {
        if (!first) os << ",";
        os << t + 1;
        first = false;
      }
    }
    os << "] J=[";
    for (size_t i = 0; i < w.J.size(); ++i) os << (i ? "," : "") << w.J[i];
    os << "] pi=[";
    for (size_t i = 0; i < w.exits.size(); ++i)
      os << (i ? "," : "") << w.exits[i];
    os << "] " << weight_string(w) << "\n";
  }
  return os.str();
}

}  // namespace cjones
