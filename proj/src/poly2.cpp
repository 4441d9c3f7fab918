#include "triprod/poly2.hpp"

#include <sstream>
#include <utility>

namespace triprod {

Poly2::Poly2(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly2::Poly2(const Poly& constant_term) : coeffs_{constant_term} { trim(); }

Poly2 Poly2::variable() { return Poly2(std::vector<Poly>{Poly{}, Poly::constant(1)}); }

void Poly2::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Poly Poly2::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Poly{}; }

Poly2& Poly2::operator+=(const Poly2& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
    coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
    coeffs_[j] -= rhs.coeffs_[j];
  trim();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Poly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly2(std::move(out));
}

RatFunc Poly2::substitute(const RatFunc& d) const {
  RatFunc acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * d + RatFunc(*it);
  return acc;
}

std::string Poly2::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Poly& a = coeffs_[j];
    if (a.is_zero())
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (j == 0) {
      os << "(" << a << ")";
      continue;
    }
    if (a != Poly::constant(1))
      os << "(" << a << ")";
    os << 'd';
    if (j > 1)
      os << '^' << j;
  }
  return os.str();
}

} // namespace triprod
