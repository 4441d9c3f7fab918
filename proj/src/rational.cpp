#include "triprod/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace triprod {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  if (s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si constructors need a 64-bit long");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(Integer value) : value_(std::move(value)) {}

Rational::Rational(Integer num, Integer den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(std::move(num), std::move(den));
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero())
    throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace triprod
