#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "triprod/poly2.hpp"
#include "triprod/ratfunc.hpp"

namespace triprod {

/// Memoized T(n) as a rational function of c = T(2), under T(0) = 0,
/// T(1) = 1 and T(3) = d(c). Indices 0..3 are base cases; above that
///   T(2k)   = c T(k) + T(k-1)          (n >= 4 even)
///   T(2k-1) = T(k) + (d - c) T(k-1)    (n >= 5 odd)
///
/// Filling the memo mutates the table, so callers need exclusive access.
class SymbolicTable {
public:
  static constexpr std::size_t kDefaultMaxIndex = 1024;

  explicit SymbolicTable(std::size_t max_index = kDefaultMaxIndex);

  /// Throws std::out_of_range when n exceeds max_index().
  const RatFunc& at(std::size_t n);

  const RatFunc& d() const { return d_; }
  std::size_t max_index() const { return cache_.size() - 1; }

private:
  RatFunc d_;
  std::vector<std::optional<RatFunc>> cache_;
};

/// Same recursions with d kept as an independent indeterminate, so every
/// entry is a polynomial in c and d.
class BivariateTable {
public:
  static constexpr std::size_t kDefaultMaxIndex = 1024;

  explicit BivariateTable(std::size_t max_index = kDefaultMaxIndex);

  /// Throws std::out_of_range when n exceeds max_index().
  const Poly2& at(std::size_t n);

  std::size_t max_index() const { return cache_.size() - 1; }

private:
  std::vector<std::optional<Poly2>> cache_;
};

inline const RatFunc& symbolic_T(SymbolicTable& table, std::size_t n) { return table.at(n); }
inline const Poly2& bivariate_T(BivariateTable& table, std::size_t n) { return table.at(n); }

/// Intermediate values of the d(c) derivation, kept for reporting.
struct DDerivation {
  Poly2 t18_from_3_6; // T(3)T(6) + T(2)T(5)
  Poly2 t18_from_2_9; // c T(9) + T(8), with T(9) = T(3)^2 + T(2)^2
  Poly2 difference;   // (c^2 + 2c - 1) d - (3c^3 + c)
  RatFunc d;
};

/// Equates two expansions of T(18) over Q[c, d] and solves the resulting
/// linear equation for d. Throws std::logic_error if the equation is not
/// linear in d with coefficients c^2 + 2c - 1 and -(3c^3 + c) (up to a
/// common sign), or if those coefficients share a root.
DDerivation derive_d_steps();
RatFunc derive_d();

/// T(mn) - T(m)T(n) - T(m-1)T(n-1) over Q(c). Requires m, n >= 1 and
/// m*n <= table.max_index(); throws std::out_of_range otherwise.
RatFunc residual(SymbolicTable& table, std::size_t m, std::size_t n);

/// Numerator of residual() in canonical form; its roots are the values of c
/// for which the (m, n) instance of the product rule holds.
Poly residual_numerator(SymbolicTable& table, std::size_t m, std::size_t n);
Poly residual_numerator(std::size_t m, std::size_t n);

} // namespace triprod
