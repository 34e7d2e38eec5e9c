#pragma once

#include "cjones/laurent.hpp"

namespace cjones {

/// Closed-form colored Jones polynomials for three small twist-like knots,
/// each a finite q-hypergeometric sum truncated at n = N-1.  These are
/// independent of the walk engine and serve as cross-checks for it.
Laurent cjp_5_2(int N);
Laurent cjp_6_1(int N);

/// Variant of the 5_2 sum whose last product carries exponents n+i-N instead
/// of k+i-N.  Kept for comparison only: it disagrees with the engine at every
/// color (the n+i-N product kills the stacks made of jump-free walks), and
/// the tests pin cjp_5_2 as the matching form.
Laurent cjp_5_2_alt(int N);
Laurent cjp_7_2(int N);

}  // namespace cjones
