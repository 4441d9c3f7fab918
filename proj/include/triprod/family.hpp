#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "triprod/rational.hpp"

namespace triprod {

/// The five sequences satisfying T(mn) = T(m)T(n) + T(m-1)T(n-1).
enum class FamilyId {
  Zero,       // T(n) = 0
  Half,       // T(n) = 1/2
  CeilHalf,   // T(0) = 0, T(2k) = T(2k-1) = k
  Period3,    // 0, 1, 0, 0, 1, 0, ...
  Triangular, // n(n+1)/2
};

inline constexpr std::array<FamilyId, 5> kAllFamilies = {
    FamilyId::Zero, FamilyId::Half, FamilyId::CeilHalf, FamilyId::Period3, FamilyId::Triangular};

std::string_view family_name(FamilyId family);
std::optional<FamilyId> parse_family(std::string_view name);

Rational family_value(FamilyId family, std::uint64_t n);

} // namespace triprod
