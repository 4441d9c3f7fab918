#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "triprod/family.hpp"
#include "triprod/sequence.hpp"

namespace triprod {

struct VerifyFailure {
  std::optional<std::int64_t> m; // absent for single-index crosschecks
  std::int64_t n = 0;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyReport {
  std::string subject;
  std::int64_t range = 0;
  std::uint64_t checked = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks T(mn) = T(m)T(n) + T(m-1)T(n-1) exactly for every 1 <= m, n <= max_mn.
/// The grid is split by rows across `workers` threads; failures come back
/// sorted by (m, n) whatever the worker count.
VerifyReport verify_family(FamilyId family, std::int64_t max_mn, unsigned workers = 1);

/// Same grid check for an arbitrary sequence given as values[0..max_mn^2].
/// Throws std::invalid_argument if values is too short.
VerifyReport verify_sequence(std::string subject, std::span<const Rational> values,
                             std::int64_t max_mn, unsigned workers = 1);

/// Throws DomainError if the denominator of d(c) vanishes at c0.
void require_in_domain(const SymbolicTable& table, const Rational& c0);

/// Compares T(n) evaluated at c = c0 against the family for 0 <= n <= max_n.
VerifyReport crosscheck_specialization(SymbolicTable& table, const Rational& c0, FamilyId family,
                                       std::int64_t max_n);
VerifyReport crosscheck_specialization(const Rational& c0, FamilyId family, std::int64_t max_n);

struct ScanEntry {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational residual; // residual numerator evaluated at c0

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

/// Residual numerators for 3 <= m <= n, mn <= max_prod that do not vanish at c0.
std::vector<ScanEntry> scan_candidate(SymbolicTable& table, const Rational& c0,
                                      std::int64_t max_prod);
std::vector<ScanEntry> scan_candidate(const Rational& c0, std::int64_t max_prod);

void to_json(nlohmann::json& j, const VerifyReport& report);

} // namespace triprod
