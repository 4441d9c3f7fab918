#pragma once

#include <vector>

#include "triprod/poly.hpp"

namespace triprod {

struct RationalRoot {
  Rational root;
  int multiplicity = 0;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// f = scalar * prod (c - root)^multiplicity * cofactor, where cofactor has
/// no rational roots and is a primitive integer polynomial with positive
/// leading coefficient (the constant 1 when f splits completely).
struct RootExtraction {
  Rational scalar;
  std::vector<RationalRoot> roots; // ascending
  Poly cofactor;

  /// Multiplies the factors back together.
  Poly expand() const;
};

/// Scales f to a primitive integer polynomial with positive leading
/// coefficient. Precondition: f nonzero.
Poly primitive_part(const Poly& f);

/// Rational roots of f with multiplicities, ascending. Uses the rational
/// root theorem on the primitive integer form of f and deflates each root
/// it finds. Throws std::invalid_argument for the zero polynomial.
std::vector<RationalRoot> rational_roots(const Poly& f);

RootExtraction extract_rational_roots(const Poly& f);

/// Positive divisors of |n| in ascending order. Precondition: n != 0.
std::vector<Integer> divisors(const Integer& n);

} // namespace triprod
