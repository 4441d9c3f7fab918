#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triprod/poly.hpp"
#include "triprod/ratfunc.hpp"

namespace triprod {

/// Polynomial in d with coefficients in Q[c]; coeffs()[j] multiplies d^j.
class Poly2 {
public:
  Poly2() = default;
  explicit Poly2(std::vector<Poly> coeffs);
  Poly2(const Poly& constant_term); // NOLINT(google-explicit-constructor)

  /// The indeterminate d.
  static Poly2 variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  Poly coeff(std::size_t j) const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  /// Substitutes a rational function of c for d.
  RatFunc substitute(const RatFunc& d) const;

  /// e.g. "(c + 1)d + c^2"; descending powers of d.
  std::string to_string() const;

private:
  void trim();

  std::vector<Poly> coeffs_;
};

} // namespace triprod
