#include "triprod/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace triprod {

namespace {

const Poly& c_poly() {
  static const Poly c = Poly::variable();
  return c;
}

void check_index(std::size_t n, std::size_t max_index) {
  if (n > max_index)
    throw std::out_of_range("index " + std::to_string(n) + " exceeds the supported maximum " +
                            std::to_string(max_index));
}

} // namespace

SymbolicTable::SymbolicTable(std::size_t max_index)
    : d_(derive_d()), cache_(std::max<std::size_t>(max_index, 3) + 1) {
  cache_[0] = RatFunc();
  cache_[1] = RatFunc::constant(1);
  cache_[2] = RatFunc(c_poly());
  cache_[3] = d_;
}

const RatFunc& SymbolicTable::at(std::size_t n) {
  check_index(n, max_index());
  if (cache_[n])
    return *cache_[n];
  RatFunc value;
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    value = RatFunc(c_poly()) * at(k) + at(k - 1);
  } else {
    const std::size_t k = (n + 1) / 2;
    value = at(k) + (d_ - RatFunc(c_poly())) * at(k - 1);
  }
  // The recursive calls above never resize cache_, so this slot is stable.
  cache_[n] = std::move(value);
  return *cache_[n];
}

BivariateTable::BivariateTable(std::size_t max_index)
    : cache_(std::max<std::size_t>(max_index, 3) + 1) {
  cache_[0] = Poly2();
  cache_[1] = Poly2(Poly::constant(1));
  cache_[2] = Poly2(c_poly());
  cache_[3] = Poly2::variable();
}

const Poly2& BivariateTable::at(std::size_t n) {
  check_index(n, max_index());
  if (cache_[n])
    return *cache_[n];
  const Poly2 c(c_poly());
  Poly2 value;
  if (n % 2 == 0) {
    const std::size_t k = n / 2;
    value = c * at(k) + at(k - 1);
  } else {
    const std::size_t k = (n + 1) / 2;
    value = at(k) + (Poly2::variable() - c) * at(k - 1);
  }
  cache_[n] = std::move(value);
  return *cache_[n];
}

DDerivation derive_d_steps() {
  BivariateTable t(18);
  const Poly2 c(c_poly());
  DDerivation out;
  out.t18_from_3_6 = t.at(3) * t.at(6) + t.at(2) * t.at(5);
  // T(9) from the (3, 3) instance, not from the odd-index recursion.
  const Poly2 t9 = t.at(3) * t.at(3) + t.at(2) * t.at(2);
  out.t18_from_2_9 = c * t9 + t.at(8);
  out.difference = out.t18_from_3_6 - out.t18_from_2_9;

  if (out.difference.degree() != 1)
    throw std::logic_error("T(18) expansions do not give an equation linear in d: " +
                           out.difference.to_string());
  const Poly linear = out.difference.coeff(1);
  const Poly constant = out.difference.coeff(0);
  const Poly expected_linear{-1, 2, 1};
  const Poly expected_constant{0, 1, 0, 3};
  const bool same_sign = linear == expected_linear && constant == -expected_constant;
  const bool flipped = linear == -expected_linear && constant == expected_constant;
  if (!same_sign && !flipped)
    throw std::logic_error("unexpected linear equation for d: " + out.difference.to_string());
  if (gcd(linear, constant).degree() != 0)
    throw std::logic_error("coefficients of the d equation share a root");

  out.d = RatFunc(-constant, linear);
  return out;
}

RatFunc derive_d() { return derive_d_steps().d; }

RatFunc residual(SymbolicTable& table, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0)
    throw std::out_of_range("product rule instances need m, n >= 1");
  if (m > table.max_index() / n)
    throw std::out_of_range("m*n = " + std::to_string(m) + "*" + std::to_string(n) +
                            " exceeds the supported maximum " + std::to_string(table.max_index()));
  return table.at(m * n) - table.at(m) * table.at(n) - table.at(m - 1) * table.at(n - 1);
}

Poly residual_numerator(SymbolicTable& table, std::size_t m, std::size_t n) {
  return residual(table, m, n).num();
}

Poly residual_numerator(std::size_t m, std::size_t n) {
  SymbolicTable table(std::max<std::size_t>(m * n, 3));
  return residual_numerator(table, m, n);
}

} // namespace triprod
