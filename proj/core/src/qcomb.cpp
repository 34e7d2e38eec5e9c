#include "cjones/qcomb.hpp"

#include <numeric>

#include "cjones/errors.hpp"

namespace cjones {

Laurent q_int(int n) {
  if (n < 0) throw DomainError("q_int: negative argument");
  Laurent p;
  for (int i = 0; i < n; ++i) p += Laurent::q_power(2 * i);
  return p;
}

Laurent q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial: negative argument");
  Laurent p = Laurent::one();
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

Laurent q_binomial(int n, int k) {
  if (k < 0 || k > n) return Laurent{};
  // Pascal recurrence: C(n,k) = C(n-1,k-1) + q^k C(n-1,k).
  std::vector<Laurent> row{Laurent::one()};
  for (int r = 1; r <= n; ++r) {
    std::vector<Laurent> next(static_cast<size_t>(r) + 1);
    next[0] = Laurent::one();
    next[static_cast<size_t>(r)] = Laurent::one();
    for (int j = 1; j < r; ++j) {
      next[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] +
          Laurent::q_power(2 * j) * row[static_cast<size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

Laurent q_multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int m : parts) {
    if (m < 0) throw DomainError("q_multinomial: negative part");
    sum += m;
  }
  if (sum != n) throw DomainError("q_multinomial: parts do not sum to n");
  Laurent num = q_factorial(n);
  for (int m : parts) num = num.divide_exact(q_factorial(m));
  return num;
}

}  // namespace cjones
