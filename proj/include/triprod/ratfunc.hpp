#pragma once

#include <ostream>
#include <string>

#include "triprod/poly.hpp"

namespace triprod {

/// Quotient of two polynomials in c, kept in lowest terms with a monic
/// denominator. Zero is 0/1.
class RatFunc {
public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Poly& p); // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc constant(const Rational& value) { return RatFunc(Poly::constant(value)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws std::domain_error when b is zero.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Throws DomainError when the denominator vanishes at x.
  Rational eval(const Rational& x) const;

  /// "(num)/(den)", or the bare numerator when den = 1.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.to_string();
  }

private:
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul };

RatFunc apply(ArithOp op, const RatFunc& a, const RatFunc& b);
Rational apply(ArithOp op, const Rational& a, const Rational& b);

} // namespace triprod
