#pragma once

#include <vector>

#include "cjones/laurent.hpp"

namespace cjones {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Laurent q_int(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
Laurent q_factorial(int n);

/// Gauss binomial coefficient.  Returns zero for k < 0 or k > n.
Laurent q_binomial(int n, int k);

/// Gauss multinomial coefficient [n]_q! / prod [m_j]_q!.
/// Parts must be nonnegative and sum to n.
Laurent q_multinomial(int n, const std::vector<int>& parts);

}  // namespace cjones
