#include "cjones/closed_forms.hpp"

#include "cjones/errors.hpp"
#include "cjones/qcomb.hpp"

namespace cjones {

namespace {

void check_color(int N) {
  if (N < 1) throw DomainError("color must be positive");
}

// prod_{i=1}^{count} (1 - q^{base + step*i})
Laurent pochhammer(int count, int base, int step) {
  Laurent res = Laurent::one();
  for (int i = 1; i <= count; ++i)
    res *= Laurent::one() - Laurent::q_power(2 * (base + step * i));
  return res;
}

}  // namespace

Laurent cjp_5_2(int N) {
  check_color(N);
  Laurent sum;
  for (int n = 0; n < N; ++n)
    for (int k = 0; k <= n; ++k) {
      Laurent term = q_binomial(n, k);
      term *= Laurent::q_power(2 * (n * N + k * (k + 1)));
      term *= pochhammer(n, N, -1);
      // The stack evaluation at the first crossing yields exponents k+i-N,
      // reproducing the engine exactly for every color.
      term *= pochhammer(n - k, k - N, 1);
      sum += term;
    }
  return Laurent::q_power(2 * (N - 1)) * sum;
}

Laurent cjp_5_2_alt(int N) {
  check_color(N);
  Laurent sum;
  for (int n = 0; n < N; ++n)
    for (int k = 0; k <= n; ++k) {
      Laurent term = q_binomial(n, k);
      term *= Laurent::q_power(2 * (n * N + k * (k + 1)));
      term *= pochhammer(n, N, -1);
      term *= pochhammer(n - k, n - N, 1);
      sum += term;
    }
  return Laurent::q_power(2 * (N - 1)) * sum;
}

Laurent cjp_6_1(int N) {
  check_color(N);
  Laurent sum;
  for (int n = 0; n < N; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= m; ++k) {
        Laurent term = q_multinomial(n, {n - m, m - k, k});
        term *= Laurent::q_power(
            2 * (3 * n - k - m + (n - k) * (n - k) + (n - m) * (n - m)));
        term *= pochhammer(n, -N, 1);
        term *= pochhammer(m - k, n - m - N, 1);
        term *= pochhammer(k, n - k - N, 1);
        sum += term;
      }
  return Laurent::q_power(2 * (1 - N)) * sum;
}

Laurent cjp_7_2(int N) {
  check_color(N);
  Laurent sum;
  for (int n = 0; n < N; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= m; ++k) {
        Laurent term = q_multinomial(n, {n - m, m - k, k});
        term *= Laurent::q_power(
            2 * (n * N + 2 * n - m - k + (n - k) * (n - k) +
                 (n - m) * (n - m)));
        term *= pochhammer(n, N, -1);
        term *= pochhammer(m - k, n - m - N, 1);
        term *= pochhammer(k, n - k - N, 1);
        sum += term;
      }
  return Laurent::q_power(2 * (N - 1)) * sum;
}

}  // namespace cjones
