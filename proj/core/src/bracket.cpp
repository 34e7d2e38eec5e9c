#include "cjones/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <thread>
#include <vector>

#include "cjones/errors.hpp"
#include "cjones/walks.hpp"

namespace cjones {

PlanarDiagram braid_closure_pd(const BraidWord& b) {
  return PlanarDiagram{b.width, b.letters};
}

namespace {

int find_root(std::vector<int16_t>& parent, int x) {
  while (parent[static_cast<size_t>(x)] != x) {
    parent[static_cast<size_t>(x)] =
        parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    x = parent[static_cast<size_t>(x)];
  }
  return x;
}

void unite(std::vector<int16_t>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[static_cast<size_t>(a)] = static_cast<int16_t>(b);
}

// Histogram over (A-exponent, loops-1); delta powers are expanded once.
using Histogram = std::map<std::pair<int, int>, BigInt>;

Histogram sum_states(const BraidWord& b, const std::vector<int16_t>& base,
                     std::uint64_t lo, std::uint64_t hi) {
  const int m = b.width;
  const int l = b.length();
  Histogram hist;
  std::vector<int16_t> parent;
  for (std::uint64_t state = lo; state < hi; ++state) {
    parent = base;
    int a_exp = 0;
    for (int t = 1; t <= l; ++t) {
      const auto& cr = b.letters[static_cast<size_t>(t - 1)];
      const int bi = cell_id({t, cr.index}, m);          // below, column i
      const int bj = cell_id({t, cr.index + 1}, m);      // below, column i+1
      const int ai = cell_id({t - 1, cr.index}, m);      // above, column i
      const int aj = cell_id({t - 1, cr.index + 1}, m);  // above, column i+1
      const bool vertical = (state >> (t - 1)) & 1;
      if (vertical) {
        unite(parent, ai, bi);
        unite(parent, aj, bj);
      } else {
        unite(parent, ai, aj);
        unite(parent, bi, bj);
      }
      // Temperley-Lieb expansion: sigma = A + A^{-1} e, inverse mirrored.
      a_exp += (vertical == (cr.sign > 0)) ? 1 : -1;
    }
    int loops = 0;
    for (int c = 0; c < static_cast<int>(parent.size()); ++c)
      if (find_root(parent, c) == c) ++loops;
    hist[{a_exp, loops - 1}] += 1;
  }
  return hist;
}

}  // namespace

Laurent jones_via_bracket(const BraidWord& b, BracketOptions opt) {
  const int l = b.length();
  const int m = b.width;
  if (l > opt.max_crossings)
    throw ResourceError("bracket state sum limited to " +
                        std::to_string(opt.max_crossings) + " crossings");

  // Straight-through columns and closure arcs are state-independent.
  std::vector<int16_t> base(static_cast<size_t>((l + 1) * m));
  for (size_t c = 0; c < base.size(); ++c) base[c] = static_cast<int16_t>(c);
  for (int t = 1; t <= l; ++t) {
    const auto& cr = b.letters[static_cast<size_t>(t - 1)];
    for (int c = 1; c <= m; ++c)
      if (c != cr.index && c != cr.index + 1)
        unite(base, cell_id({t - 1, c}, m), cell_id({t, c}, m));
  }
  for (int c = 1; c <= m; ++c) unite(base, cell_id({l, c}, m), cell_id({0, c}, m));

  const std::uint64_t total = std::uint64_t{1} << l;
  unsigned hw = std::thread::hardware_concurrency();
  int threads = opt.threads > 0 ? opt.threads : (hw ? static_cast<int>(hw) : 1);
  threads = static_cast<int>(std::min<std::uint64_t>(threads, total));

  Histogram hist;
  if (threads <= 1 || total < 4096) {
    hist = sum_states(b, base, 0, total);
  } else {
    std::vector<std::future<Histogram>> parts;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int ti = 0; ti < threads; ++ti) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(ti);
      const std::uint64_t hi = std::min(total, lo + chunk);
      parts.push_back(std::async(std::launch::async,
                                 [&b, &base, lo, hi]() { return sum_states(b, base, lo, hi); }));
    }
    for (auto& f : parts)
      for (auto& [key, cnt] : f.get()) hist[key] += cnt;
  }

  // delta = -A^2 - A^{-2}; exponents of A are kept doubled-in-q later,
  // here A-exponents are plain integers.
  std::map<int, BigInt> poly_a;  // A-exponent -> coefficient
  std::map<int, std::map<int, BigInt>> delta_pow_cache;
  delta_pow_cache[0] = {{0, BigInt(1)}};
  auto delta_pow = [&](int k) -> const std::map<int, BigInt>& {
    for (int j = static_cast<int>(delta_pow_cache.size()); j <= k; ++j) {
      std::map<int, BigInt> cur;
      for (const auto& [e, c] : delta_pow_cache[j - 1]) {
        cur[e + 2] -= c;
        cur[e - 2] -= c;
      }
      delta_pow_cache.emplace(j, std::move(cur));
    }
    return delta_pow_cache[k];
  };
  for (const auto& [key, cnt] : hist) {
    const auto& [a_exp, k] = key;
    for (const auto& [e, c] : delta_pow(k)) poly_a[a_exp + e] += c * cnt;
  }

  // Writhe correction (-A)^{-3w} and the substitution A = q^{-1/4}.
  const int w = b.writhe();
  const int sign = (w % 2 == 0) ? 1 : -1;
  Laurent out;
  for (const auto& [e, c] : poly_a) {
    if (c == 0) continue;
    const int a_exp = e - 3 * w;
    if (a_exp % 2 != 0)
      throw DomainError("bracket produced an off-grid exponent");
    out += Laurent::monomial(sign * c, -a_exp / 2);
  }
  return out;
}

}  // namespace cjones
