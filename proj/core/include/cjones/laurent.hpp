#pragma once

#include <complex>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cjones {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in q with arbitrary-precision integer
/// coefficients.  Exponents live on the half-integer grid and are stored
/// doubled, so q^{1/2} has stored exponent 1 and q^3 has stored exponent 6.
/// No stored coefficient is ever zero.
class Laurent {
 public:
  Laurent() = default;

  static Laurent monomial(BigInt coeff, int doubled_exp);
  /// q^{e} for doubled exponent e, i.e. q_power(2) == q.
  static Laurent q_power(int doubled_exp) { return monomial(1, doubled_exp); }
  static Laurent one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Laurent& operator+=(const Laurent& r);
  Laurent& operator-=(const Laurent& r);
  Laurent& operator*=(const Laurent& r);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;

  bool operator==(const Laurent& r) const { return terms_ == r.terms_; }

  /// q -> q^{-1}.
  Laurent inverted_q() const;

  /// Exact division; throws DomainError if r is zero or does not divide.
  Laurent divide_exact(const Laurent& r) const;

  /// Substitute a complex number for q; z^{1/2} is the principal branch.
  std::complex<double> eval_complex(std::complex<double> z) const;

  /// Value at q = 1 (sum of coefficients).
  BigInt at_one() const;

  /// True if every exponent is an integer power of q.
  bool on_integer_grid() const;

  /// If the polynomial is a single term c*q^e, returns it.
  bool as_monomial(BigInt& coeff, int& doubled_exp) const;

  int lowest_doubled_exp() const;   // throws DomainError on zero
  int highest_doubled_exp() const;  // throws DomainError on zero

  /// Canonical rendering, ascending exponents: "-q^-4 + q^-3 + q^-1".
  std::string to_string() const;

  const std::map<int, BigInt>& terms() const { return terms_; }

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace cjones
