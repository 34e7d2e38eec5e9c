#include "cjones/engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cjones/bracket.hpp"
#include "cjones/errors.hpp"

namespace cjones {

NormalForm normal_order(const std::string& word, int sign) {
  NormalForm nf;
  for (char ch : word) {
    switch (ch) {
      case 'a':
        ++nf.d;
        break;
      case 'c':
        if (sign > 0)
          nf.qshift += nf.d;
        else
          nf.qshift -= nf.d;
        ++nf.r;
        break;
      case 'b':
        if (sign > 0)
          nf.qshift -= 2 * nf.r;
        else
          nf.qshift += 2 * nf.d + 2 * nf.r;
        ++nf.s;
        break;
      default:
        throw DomainError("crossing word letter must be a, b or c");
    }
  }
  return nf;
}

Laurent eval_crossing(const NormalForm& nf, int sign, int N) {
  Laurent res = Laurent::q_power(2 * nf.qshift);
  if (sign > 0) {
    res *= Laurent::q_power(2 * nf.r * (N - 1 - nf.d));
    for (int i = 0; i < nf.d; ++i)
      res *= Laurent::one() - Laurent::q_power(2 * (N - 1 - nf.r - i));
  } else {
    res *= Laurent::q_power(-2 * nf.r * (N - 1));
    for (int i = 0; i < nf.d; ++i)
      res *= Laurent::one() - Laurent::q_power(2 * (nf.r + i + 1 - N));
  }
  return res;
}

Laurent eval_stack(const BraidWord& b, const std::vector<const Walk*>& stack,
                   int N) {
  Laurent res = Laurent::one();
  for (const Walk* w : stack)
    res *= Laurent::monomial(w->prefactor_sign, 2 * w->prefactor_qpow);
  for (int t = 1; t <= b.length(); ++t) {
    std::string word;
    for (const Walk* w : stack) word += w->local[static_cast<size_t>(t - 1)];
    res *= eval_crossing(normal_order(word, b.letters[t - 1].sign),
                         b.letters[t - 1].sign, N);
  }
  return res;
}

namespace {

struct StackSum {
  const BraidWord& b;
  const WalkCensus& census;
  int N;
  std::uint64_t work = 0;
  std::uint64_t ceiling;
  std::vector<int> occupancy;     // walks per cell, bounded by N-1
  std::vector<NormalForm> state;  // per crossing, letters appended so far
  Laurent sum;

  StackSum(const BraidWord& braid, const WalkCensus& c, int color,
           std::uint64_t limit)
      : b(braid), census(c), N(color), ceiling(limit),
        occupancy(static_cast<size_t>((braid.length() + 1) * braid.width), 0),
        state(static_cast<size_t>(braid.length())) {}

  Laurent node_value(int sign_acc, int qpow_acc) const {
    Laurent v = Laurent::monomial(sign_acc, 2 * qpow_acc);
    for (int t = 1; t <= b.length(); ++t)
      v *= eval_crossing(state[static_cast<size_t>(t - 1)],
                         b.letters[t - 1].sign, N);
    return v;
  }

  void run(int sign_acc, int qpow_acc) {
    sum += node_value(sign_acc, qpow_acc);
    for (const Walk& w : census.walks) {
      if (++work > ceiling)
        throw ResourceError("stack enumeration exceeded the work ceiling");
      bool fits = true;
      for (int c : w.cells)
        if (occupancy[static_cast<size_t>(c)] + 1 >= N) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (int c : w.cells) ++occupancy[static_cast<size_t>(c)];
      std::vector<NormalForm> saved;
      saved.reserve(w.local.size());
      for (size_t t = 0; t < w.local.size(); ++t) {
        saved.push_back(state[t]);
        // append this walk's letters at the bottom of crossing t+1
        NormalForm& nf = state[t];
        const int sign = b.letters[t].sign;
        for (char ch : w.local[t]) {
          switch (ch) {
            case 'a':
              ++nf.d;
              break;
            case 'c':
              nf.qshift += (sign > 0) ? nf.d : -nf.d;
              ++nf.r;
              break;
            case 'b':
              nf.qshift += (sign > 0) ? -2 * nf.r : 2 * nf.d + 2 * nf.r;
              ++nf.s;
              break;
          }
        }
      }
      run(sign_acc * w.prefactor_sign, qpow_acc + w.prefactor_qpow);
      for (size_t t = 0; t < w.local.size(); ++t) state[t] = saved[t];
      for (int c : w.cells) --occupancy[static_cast<size_t>(c)];
    }
  }
};

Laurent colored_jones_raw(const BraidWord& b, int N, const EngineOptions& opt) {
  if (N < 1 || N > opt.max_color)
    throw DomainError("color must be between 1 and " +
                      std::to_string(opt.max_color));
  if (closure_components(b) != 1)
    throw DomainError("closure must be a knot");
  WalkCensus census = enumerate_simple_walks(b, opt.enumeration);
  StackSum dfs(b, census, N, opt.work_ceiling);
  dfs.run(1, 0);
  Laurent framing =
      Laurent::q_power((N - 1) * (b.writhe() - b.width + 1));
  return dfs.sum * framing;
}

}  // namespace

Convention engine_convention() {
  static const Convention conv = [] {
    BraidWord trefoil{2, {{1, 1}, {1, 1}, {1, 1}}};
    EngineOptions opt;
    opt.calibrate = false;
    Laurent raw = colored_jones_raw(trefoil, 2, opt);
    Laurent oracle = jones_via_bracket(trefoil);
    if (raw == oracle) return Convention::identity;
    if (raw.inverted_q() == oracle) return Convention::invert_q;
    throw DomainError("variable convention calibration failed");
  }();
  return conv;
}

Laurent colored_jones(const BraidWord& b, int N, EngineOptions opt) {
  Laurent res = colored_jones_raw(b, N, opt);
  if (opt.calibrate && engine_convention() == Convention::invert_q)
    res = res.inverted_q();
  if (!res.on_integer_grid())
    throw DomainError("result fell off the integer exponent grid");
  return res;
}

KashaevValue kashaev_evaluation(const BraidWord& b, int N, EngineOptions opt) {
  Laurent j = colored_jones(b, N, opt);
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(N);
  const std::complex<double> root{std::cos(theta), std::sin(theta)};
  KashaevValue out;
  out.value = j.eval_complex(root);
  const double mag = std::abs(out.value);
  out.log_abs_over_n = mag > 0.0
                           ? std::log(mag) / static_cast<double>(N)
                           : -std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace cjones
