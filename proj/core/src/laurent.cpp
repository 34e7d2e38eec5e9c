#include "cjones/laurent.hpp"

#include <cmath>
#include <sstream>

#include "cjones/errors.hpp"

namespace cjones {

Laurent Laurent::monomial(BigInt coeff, int doubled_exp) {
  Laurent p;
  if (coeff != 0) p.terms_[doubled_exp] = std::move(coeff);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Laurent& Laurent::operator+=(const Laurent& r) {
  for (const auto& [e, c] : r.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& r) {
  for (const auto& [e, c] : r.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = out.terms_[ea + eb];
      slot += ca * cb;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& r) { return *this = *this * r; }

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Laurent Laurent::inverted_q() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

Laurent Laurent::divide_exact(const Laurent& r) const {
  if (r.is_zero()) throw DomainError("Laurent division by zero");
  Laurent rem = *this, quot;
  if (rem.is_zero()) return quot;
  // Eliminate from the lowest term; divisor's lowest term must divide.
  // Any exact quotient term exponent is bounded by the highest exponents.
  const auto [dlow, dcoef] = *r.terms_.begin();
  const int max_quot_exp =
      rem.highest_doubled_exp() - r.terms_.rbegin()->first;
  while (!rem.is_zero()) {
    const auto [rlow, rcoef] = *rem.terms_.begin();
    if (rlow - dlow > max_quot_exp)
      throw DomainError("Laurent division is not exact");
    if (rcoef % dcoef != 0)
      throw DomainError("Laurent division is not exact (coefficient)");
    Laurent t = monomial(rcoef / dcoef, rlow - dlow);
    quot += t;
    rem -= t * r;
    if (!rem.is_zero() && rem.terms_.begin()->first <= rlow)
      throw DomainError("Laurent division is not exact");
  }
  return quot;
}

std::complex<double> Laurent::eval_complex(std::complex<double> z) const {
  if (z == std::complex<double>(0.0, 0.0))
    throw DomainError("Laurent evaluation at q = 0");
  const std::complex<double> root = std::sqrt(z);  // principal branch
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    acc += static_cast<double>(c) * std::pow(root, static_cast<double>(e));
  }
  return acc;
}

BigInt Laurent::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Laurent::on_integer_grid() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool Laurent::as_monomial(BigInt& coeff, int& doubled_exp) const {
  if (terms_.size() != 1) return false;
  doubled_exp = terms_.begin()->first;
  coeff = terms_.begin()->second;
  return true;
}

int Laurent::lowest_doubled_exp() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int Laurent::highest_doubled_exp() const {
  if (is_zero()) throw DomainError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

namespace {

void render_term(std::ostream& os, const BigInt& coeff, int e, bool first) {
  BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (e == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag;
  if (e == 2) {
    os << "q";
  } else if (e % 2 == 0) {
    os << "q^" << e / 2;
  } else {
    os << "q^(" << e << "/2)";
  }
}

}  // namespace

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    render_term(os, c, e, first);
    first = false;
  }
  return os.str();
}

}  // namespace cjones
