#include "triprod/ratfunc.hpp"

#include <stdexcept>
#include <utility>

#include "triprod/errors.hpp"

namespace triprod {

RatFunc::RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divrem(num, g).quotient;
    den = divrem(den, g).quotient;
  }
  const Rational scale = den.lead().inverse();
  num_ = std::move(num) * scale;
  den_ = std::move(den) * scale;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_)
    return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero())
    throw std::domain_error("rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero())
    throw DomainError("denominator " + den_.to_string() + " vanishes at c = " + x.to_string());
  return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0)
    return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc apply(ArithOp op, const RatFunc& a, const RatFunc& b) {
  switch (op) {
  case ArithOp::Add:
    return a + b;
  case ArithOp::Sub:
    return a - b;
  case ArithOp::Mul:
    return a * b;
  }
  throw std::logic_error("unknown ArithOp");
}

Rational apply(ArithOp op, const Rational& a, const Rational& b) {
  switch (op) {
  case ArithOp::Add:
    return a + b;
  case ArithOp::Sub:
    return a - b;
  case ArithOp::Mul:
    return a * b;
  }
  throw std::logic_error("unknown ArithOp");
}

} // namespace triprod
