#include "triprod/family.hpp"

#include <stdexcept>

namespace triprod {

std::string_view family_name(FamilyId family) {
  switch (family) {
  case FamilyId::Zero:
    return "zero";
  case FamilyId::Half:
    return "half";
  case FamilyId::CeilHalf:
    return "ceilhalf";
  case FamilyId::Period3:
    return "period3";
  case FamilyId::Triangular:
    return "triangular";
  }
  throw std::logic_error("unknown FamilyId");
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (auto f : kAllFamilies)
    if (family_name(f) == name)
      return f;
  return std::nullopt;
}

Rational family_value(FamilyId family, std::uint64_t n) {
  const auto k = static_cast<std::int64_t>(n);
  switch (family) {
  case FamilyId::Zero:
    return 0;
  case FamilyId::Half:
    return {1, 2};
  case FamilyId::CeilHalf:
    return (k + 1) / 2;
  case FamilyId::Period3:
    return n % 3 == 1 ? 1 : 0;
  case FamilyId::Triangular:
    return Rational(Integer(static_cast<unsigned long>(n)) * (n + 1) / 2);
  }
  throw std::logic_error("unknown FamilyId");
}

} // namespace triprod
