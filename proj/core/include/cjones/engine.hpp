#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/laurent.hpp"
#include "cjones/walks.hpp"

namespace cjones {

/// Letter counts of a crossing word in the preferred order b^s c^r a^d,
/// together with the q-power accumulated while reordering.
struct NormalForm {
  int s = 0;
  int r = 0;
  int d = 0;
  int qshift = 0;
};

/// Normal-orders a crossing word (letters 'a'/'b'/'c', all sharing the
/// crossing's sign) via the q-commutation relations.
NormalForm normal_order(const std::string& word, int sign);

/// Evaluation of one normal-ordered crossing word at color N.
Laurent eval_crossing(const NormalForm& nf, int sign, int N);

/// Evaluates an ordered stack of walks (top first) on b at color N:
/// the product of walk prefactors times the per-crossing evaluations.
Laurent eval_stack(const BraidWord& b, const std::vector<const Walk*>& stack,
                   int N);

struct EngineOptions {
  int max_color = 16;
  std::uint64_t work_ceiling = 100'000'000;  // stack extensions
  EnumOptions enumeration;
  bool calibrate = true;  // apply the global variable-convention flag
};

enum class Convention { identity, invert_q };

/// The engine's one-time global q vs q^{-1} calibration against the
/// Kauffman-bracket oracle on the trefoil.
Convention engine_convention();

/// Colored Jones polynomial of the closure of b (which must be a knot).
Laurent colored_jones(const BraidWord& b, int N, EngineOptions opt = {});

struct KashaevValue {
  std::complex<double> value;
  double log_abs_over_n = 0.0;
};

/// colored_jones evaluated at q = exp(2*pi*i/N).
KashaevValue kashaev_evaluation(const BraidWord& b, int N,
                                EngineOptions opt = {});

}  // namespace cjones
