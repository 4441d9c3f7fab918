#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "triprod/family.hpp"
#include "triprod/ratfunc.hpp"
#include "triprod/roots.hpp"
#include "triprod/sequence.hpp"
#include "triprod/verify.hpp"

namespace triprod {

/// Cases on (a, b) = (T(0), T(1)), which must satisfy b = b^2 + a^2.
enum class Branch { ANonzero, A0B0, A0B1 };

std::string_view branch_name(Branch branch);

struct BranchRecord {
  Branch branch;
  std::string condition;
  std::string conclusion;
  std::vector<FamilyId> families; // empty when the branch is deferred
  std::vector<std::string> justification;
};

/// Branch containing (a, b), or nullopt when b != b^2 + a^2.
std::optional<Branch> branch_for(const Rational& a, const Rational& b);

/// The three (a, b) cases with the reasoning that settles the first two.
std::vector<BranchRecord> branch_analysis();

using ProbePair = std::pair<std::size_t, std::size_t>;

inline const std::vector<ProbePair> kDefaultProbes = {{3, 3}, {3, 5}};

struct ConstraintRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  Poly numerator;
  Poly denominator;
  RootExtraction factors; // meaningless when numerator is zero
};

struct ClassificationReport {
  std::vector<BranchRecord> branches;
  RatFunc d;
  std::vector<ConstraintRecord> constraints;
  Poly common_gcd; // monic gcd of the nonzero constraint numerators
  std::vector<Rational> surviving_c;
  std::map<Rational, FamilyId> family_map;
  std::vector<Rational> unmatched_c; // surviving values matching no family
  bool residual_cofactor_check = false;
  bool cofactor_check = false;
  std::vector<std::string> notes;

  /// Both completeness certificates hold and every surviving c has a family.
  bool complete() const {
    return residual_cofactor_check && cofactor_check && unmatched_c.empty();
  }
};

/// Every probe residual vanished identically, so the probes constrain nothing.
class WeakProbeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Intersects the rational roots of the residual numerators of the probe
/// pairs. Throws std::invalid_argument for an empty probe list,
/// std::out_of_range when m*n exceeds the table, WeakProbeError when every
/// residual is identically zero.
ClassificationReport solve_c(std::span<const ProbePair> probes, SymbolicTable& table);
ClassificationReport solve_c(std::span<const ProbePair> probes = kDefaultProbes);

/// Divides each numerator by prod (c - r)^k over shared_roots and reports
/// whether the quotients have a constant gcd, i.e. no common root beyond the
/// shared ones. Returns false if a numerator is not divisible or fewer than
/// two numerators are given.
bool cofactor_gcd_check(std::span<const Poly> numerators, std::span<const RationalRoot> shared_roots);

/// The check above for the (3,3) and (3,5) numerators with shared roots {0, 1, 3}.
bool cofactor_gcd_check();

/// Family whose values agree with T(n) at c = c0 for all n <= max_n, if any.
std::optional<FamilyId> match_family(SymbolicTable& table, const Rational& c0, std::int64_t max_n);

/// Brute-force certificates: the families concluded by the first two
/// branches and every mapped family, each over a range x range grid, plus
/// the symbolic specialization of each surviving c against its family.
std::vector<VerifyReport> certify(const ClassificationReport& report, SymbolicTable& table,
                                  std::int64_t range);

/// Text of a linear factor with multiplicity: "c - 3", "c^2", "(c + 1)^3".
std::string factor_string(const RationalRoot& root);

void to_json(nlohmann::json& j, const BranchRecord& record);
void to_json(nlohmann::json& j, const ConstraintRecord& record);
void to_json(nlohmann::json& j, const ClassificationReport& report);

} // namespace triprod
