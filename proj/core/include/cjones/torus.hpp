#pragma once

#include <cstdint>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/walks.hpp"

namespace cjones {

struct SeriesReport {
  int family = 2;                   // 2 or 3
  std::vector<long long> counts;    // counts[i] is the value at n = i+1
  bool recurrence_ok = false;
  bool closedform_ok = false;
};

/// (2,n) torus braid: sigma_1^{-n} on two strands.
BraidWord torus2_braid(int n);

/// (3,n) torus braid: (sigma_1 sigma_2)^n on three strands.
BraidWord torus3_braid(int n);

/// Counts simple walks on the family braids for n = 1..n_max and checks
/// the Fibonacci (family 2) resp. tribonacci (family 3, from n = 4)
/// recurrence and the closed-form values.
SeriesReport count_series(int family, int n_max, EnumOptions opt = {});

/// Family-2 count by the integer recurrence f(1)=1, f(2)=2,
/// f(n)=f(n-1)+f(n-2), double-checked against the golden-ratio closed form.
long long closed_form_f(int n);

/// Family-3 count by the integer recurrence g(1)=0, g(2)=1, g(3)=4,
/// g(n)=g(n-1)+g(n-2)+g(n-3), double-checked against the radical closed
/// form built from the roots of t^3 - t^2 - t - 1.
long long closed_form_g(int n);

/// Tribonacci numbers 0, 1, 1, 2, 4, 7, 13, ... for n >= 0.
long long tribonacci(int n);

}  // namespace cjones
