#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "triprod/rational.hpp"

namespace triprod {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of c^i.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty coefficient list and has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  /// Low-to-high coefficients, e.g. {-1, 2, 1} is c^2 + 2c - 1.
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& value);
  static Poly monomial(const Rational& coeff, std::size_t power);
  /// The indeterminate c.
  static Poly variable();
  /// c - root.
  static Poly linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of c^i; zero past the degree.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient. Precondition: nonzero.
  const Rational& lead() const { return coeffs_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Horner evaluation.
  Rational eval(const Rational& x) const;
  /// Scaled to leading coefficient 1; the zero polynomial stays zero.
  Poly monic() const;

  /// Descending powers, e.g. "3c^3 + c" or "c^2 + 2c - 1". Non-integer
  /// coefficients of non-constant terms are parenthesized: "(1/2)c^2".
  std::string to_string(char var = 'c') const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
  }

private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Strips trailing zeros.
Poly normalize(std::vector<Rational> raw);

/// f = q*g + r with deg r < deg g. Throws std::domain_error when g is zero.
DivRem divrem(const Poly& f, const Poly& g);

/// Monic gcd by the Euclidean remainder sequence, each remainder made monic.
/// Throws std::invalid_argument when both arguments are zero.
Poly gcd(const Poly& f, const Poly& g);

/// True when g divides f with zero remainder.
bool divides(const Poly& g, const Poly& f);

/// f == k*g for some nonzero rational k (or both zero).
bool equal_up_to_scalar(const Poly& f, const Poly& g);

Poly pow(Poly base, unsigned exponent);

} // namespace triprod
