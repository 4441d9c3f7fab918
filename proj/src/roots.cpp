#include "triprod/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace triprod {

Poly primitive_part(const Poly& f) {
  if (f.is_zero())
    throw std::invalid_argument("primitive part of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& a : f.coeffs())
    den_lcm = lcm(den_lcm, a.denominator());
  Integer content = 0;
  for (const auto& a : f.coeffs())
    content = gcd(content, a.numerator() * (den_lcm / a.denominator()));
  Rational scale(den_lcm, content);
  if (f.lead().sign() < 0)
    scale = -scale;
  return f * scale;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0)
    throw std::invalid_argument("divisors of zero");
  const Integer m = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer k = 1; k * k <= m; ++k) {
    if (m % k != 0)
      continue;
    small.push_back(k);
    if (k * k != m)
      large.push_back(m / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

struct Deflation {
  std::vector<RationalRoot> roots;
  Poly rest;
};

Deflation deflate_all(const Poly& f) {
  if (f.is_zero())
    throw std::invalid_argument("rational roots of the zero polynomial");
  Deflation out;
  Poly p = primitive_part(f);

  int zero_mult = 0;
  while (p.degree() > 0 && p.coeff(0).is_zero()) {
    p = divrem(p, Poly::variable()).quotient;
    ++zero_mult;
  }
  if (zero_mult > 0)
    out.roots.push_back({Rational(0), zero_mult});

  if (p.degree() > 0) {
    // Integer coefficients, nonzero constant term: every rational root p/q
    // in lowest terms has p | a0 and q | an.
    const auto ps = divisors(p.coeff(0).numerator());
    const auto qs = divisors(p.lead().numerator());
    std::vector<Rational> candidates;
    for (const auto& q : qs)
      for (const auto& num : ps)
        if (gcd(num, q) == 1) {
          candidates.emplace_back(num, q);
          candidates.emplace_back(-num, q);
        }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (p.degree() > 0 && p.eval(r).is_zero()) {
        p = divrem(p, Poly::linear_factor(r)).quotient;
        ++mult;
      }
      if (mult > 0)
        out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
  out.rest = std::move(p);
  return out;
}

} // namespace

std::vector<RationalRoot> rational_roots(const Poly& f) { return deflate_all(f).roots; }

RootExtraction extract_rational_roots(const Poly& f) {
  auto d = deflate_all(f);
  RootExtraction out;
  out.cofactor = primitive_part(d.rest);
  out.scalar = f.lead() / out.cofactor.lead();
  out.roots = std::move(d.roots);
  return out;
}

Poly RootExtraction::expand() const {
  Poly acc = cofactor * scalar;
  for (const auto& r : roots)
    acc *= pow(Poly::linear_factor(r.root), static_cast<unsigned>(r.multiplicity));
  return acc;
}

} // namespace triprod
