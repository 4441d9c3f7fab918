#pragma once

#include <stdexcept>

namespace triprod {

/// A rational function was evaluated where its denominator vanishes.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace triprod
