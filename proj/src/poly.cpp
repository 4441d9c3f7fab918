#include "triprod/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace triprod {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& value) { return Poly(std::vector<Rational>{value}); }

Poly Poly::monomial(const Rational& coeff, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coeff;
  return Poly(std::move(c));
}

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::linear_factor(const Rational& root) { return Poly{-root, 1}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_)
    a = -a;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_)
    a *= scalar;
  return *this;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero())
    return {};
  return *this * lead().inverse();
}

std::string Poly::to_string(char var) const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& a = coeffs_[k];
    if (a.is_zero())
      continue;
    if (first)
      os << (a.sign() < 0 ? "-" : "");
    else
      os << (a.sign() < 0 ? " - " : " + ");
    first = false;

    const Rational mag = a.abs();
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1))
      os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
    os << var;
    if (k > 1)
      os << '^' << k;
  }
  return os.str();
}

Poly normalize(std::vector<Rational> raw) { return Poly(std::move(raw)); }

DivRem divrem(const Poly& f, const Poly& g) {
  if (g.is_zero())
    throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree())
    return {Poly{}, f};

  const auto gc = g.coeffs();
  std::vector<Rational> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  const Rational inv_lead = g.lead().inverse();
  const std::size_t dg = gc.size() - 1;

  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dg] * inv_lead;
    quot[k] = q;
    if (q.is_zero())
      continue;
    for (std::size_t j = 0; j <= dg; ++j)
      rem[k + j] -= q * gc[j];
  }
  rem.resize(dg);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  Poly a = f.monic();
  Poly b = g.monic();
  while (!b.is_zero()) {
    Poly r = divrem(a, b).remainder.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool divides(const Poly& g, const Poly& f) { return divrem(f, g).remainder.is_zero(); }

bool equal_up_to_scalar(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    return f.is_zero() && g.is_zero();
  return f.monic() == g.monic();
}

Poly pow(Poly base, unsigned exponent) {
  Poly acc = Poly::constant(1);
  while (exponent > 0) {
    if (exponent & 1U)
      acc *= base;
    exponent >>= 1U;
    if (exponent > 0)
      base *= base;
  }
  return acc;
}

} // namespace triprod
