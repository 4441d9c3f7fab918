#include "triprod/classifier.hpp"

#include <algorithm>
#include <string>

namespace triprod {

std::string_view branch_name(Branch branch) {
  switch (branch) {
  case Branch::ANonzero:
    return "a_nonzero";
  case Branch::A0B0:
    return "a0_b0";
  case Branch::A0B1:
    return "a0_b1";
  }
  throw std::logic_error("unknown Branch");
}

std::optional<Branch> branch_for(const Rational& a, const Rational& b) {
  if (b != b * b + a * a)
    return std::nullopt;
  if (!a.is_zero())
    return Branch::ANonzero;
  return b.is_zero() ? Branch::A0B0 : Branch::A0B1;
}

std::vector<BranchRecord> branch_analysis() {
  // The (1,1) instance gives b = b^2 + a^2, so a = 0 forces b in {0, 1};
  // the three records below cover every admissible (a, b).
  std::vector<BranchRecord> out;
  out.push_back({Branch::ANonzero,
                 "a != 0",
                 "T(n) = 1/2 for all n",
                 {FamilyId::Half},
                 {
                     "(m,n) = (1,1): b = b^2 + a^2",
                     "a != 0 and b = b^2 + a^2 imply b != 1, so a/(1-b) = b/a",
                     "m = 1: T(n) = b T(n) + a T(n-1), so T(n)/T(n-1) = a/(1-b) = b/a",
                     "hence T(n) = a r^n with r = b/a",
                     "m = 2: a r^(2n) = a r^2 a r^n + a r a r^(n-1), so r^n = a(r^2 + 1) for all n",
                     "the right side is independent of n, so r = 1 and T(n) = a",
                     "a = b and b = b^2 + a^2 with a != 0 give a = 1/2",
                 }});
  out.push_back({Branch::A0B0,
                 "a = 0, b = 0",
                 "T(n) = 0 for all n",
                 {FamilyId::Zero},
                 {
                     "m = 1: T(n) = b T(n) + a T(n-1)",
                     "with a = b = 0 this reads T(n) = 0 for every n by induction",
                 }});
  out.push_back({Branch::A0B1,
                 "a = 0, b = 1",
                 "deferred: T(n) is determined by c = T(2); solve for c",
                 {},
                 {
                     "(m,n) = (1,1) with a = 0: b = b^2, so b = 0 or b = 1",
                     "m = 2 and the two expansions of T(4n) give T(2n) = c T(n) + T(n-1) and "
                     "T(2n-1) = T(n) + (d-c) T(n-1)",
                     "the two expansions of T(18) give d = (3c^3 + c)/(c^2 + 2c - 1)",
                 }});
  return out;
}

namespace {

Poly shared_product(std::span<const RationalRoot> roots) {
  Poly acc = Poly::constant(1);
  for (const auto& r : roots)
    acc *= pow(Poly::linear_factor(r.root), static_cast<unsigned>(r.multiplicity));
  return acc;
}

} // namespace

bool cofactor_gcd_check(std::span<const Poly> numerators, std::span<const RationalRoot> shared_roots) {
  if (numerators.size() < 2)
    return false;
  const Poly shared = shared_product(shared_roots);
  Poly g;
  for (const auto& num : numerators) {
    if (num.is_zero())
      return false;
    auto [q, r] = divrem(num, shared);
    if (!r.is_zero())
      return false;
    g = g.is_zero() ? q.monic() : gcd(g, q);
  }
  return g.degree() == 0;
}

bool cofactor_gcd_check() {
  SymbolicTable table(15);
  const std::vector<Poly> nums = {residual_numerator(table, 3, 3), residual_numerator(table, 3, 5)};
  const std::vector<RationalRoot> shared = {{0, 1}, {1, 1}, {3, 1}};
  return cofactor_gcd_check(nums, shared);
}

std::optional<FamilyId> match_family(SymbolicTable& table, const Rational& c0, std::int64_t max_n) {
  for (auto f : kAllFamilies) {
    bool all = true;
    for (std::int64_t n = 0; n <= max_n && all; ++n)
      all = table.at(static_cast<std::size_t>(n)).eval(c0) ==
            family_value(f, static_cast<std::uint64_t>(n));
    if (all)
      return f;
  }
  return std::nullopt;
}

ClassificationReport solve_c(std::span<const ProbePair> probes, SymbolicTable& table) {
  if (probes.empty())
    throw std::invalid_argument("solve_c needs at least one probe pair");

  ClassificationReport report;
  report.branches = branch_analysis();
  report.d = table.d();
  report.notes.push_back("period-3 family: T(3k+1) = 1 and T(3k) = T(3k+2) = 0");

  std::vector<Poly> nonzero;
  for (const auto& [m, n] : probes) {
    const RatFunc res = residual(table, m, n);
    ConstraintRecord rec{m, n, res.num(), res.den(), {}};
    if (!rec.numerator.is_zero()) {
      rec.factors = extract_rational_roots(rec.numerator);
      nonzero.push_back(rec.numerator);
      report.common_gcd = report.common_gcd.is_zero() ? rec.numerator.monic()
                                                      : gcd(report.common_gcd, rec.numerator);
    } else {
      report.notes.push_back("probe (" + std::to_string(m) + "," + std::to_string(n) +
                             ") is identically zero and imposes no constraint");
    }
    report.constraints.push_back(std::move(rec));
  }
  if (nonzero.empty())
    throw WeakProbeError("all probe residuals are identically zero; use pairs with m, n >= 3");

  const RootExtraction common = extract_rational_roots(report.common_gcd);
  for (const auto& r : common.roots)
    report.surviving_c.push_back(r.root);
  report.residual_cofactor_check = common.cofactor.degree() == 0;
  if (!report.residual_cofactor_check)
    report.notes.push_back("common factor " + common.cofactor.to_string() +
                           " has no rational roots but is not constant; surviving set incomplete");
  report.cofactor_check = cofactor_gcd_check(nonzero, common.roots);

  const auto check_n = static_cast<std::int64_t>(std::min<std::size_t>(table.max_index(), 64));
  for (const auto& c0 : report.surviving_c) {
    if (auto f = match_family(table, c0, check_n))
      report.family_map.emplace(c0, *f);
    else
      report.unmatched_c.push_back(c0);
  }
  return report;
}

ClassificationReport solve_c(std::span<const ProbePair> probes) {
  std::size_t top = 64;
  for (const auto& [m, n] : probes)
    top = std::max(top, m * n);
  SymbolicTable table(top);
  return solve_c(probes, table);
}

std::vector<VerifyReport> certify(const ClassificationReport& report, SymbolicTable& table,
                                  std::int64_t range) {
  std::vector<VerifyReport> out;
  for (const auto& b : report.branches)
    for (auto f : b.families)
      out.push_back(verify_family(f, range));
  const auto max_n = std::min<std::int64_t>(range, static_cast<std::int64_t>(table.max_index()));
  for (const auto& [c0, f] : report.family_map) {
    out.push_back(crosscheck_specialization(table, c0, f, max_n));
    out.push_back(verify_family(f, range));
  }
  return out;
}

std::string factor_string(const RationalRoot& root) {
  const std::string base = Poly::linear_factor(root.root).to_string();
  if (root.multiplicity == 1)
    return base;
  const std::string power = "^" + std::to_string(root.multiplicity);
  return root.root.is_zero() ? base + power : "(" + base + ")" + power;
}

void to_json(nlohmann::json& j, const BranchRecord& record) {
  auto families = nlohmann::json::array();
  for (auto f : record.families)
    families.push_back(std::string(family_name(f)));
  j = nlohmann::json{{"branch", std::string(branch_name(record.branch))},
                     {"condition", record.condition},
                     {"conclusion", record.conclusion},
                     {"families", std::move(families)},
                     {"justification", record.justification}};
}

void to_json(nlohmann::json& j, const ConstraintRecord& record) {
  j = nlohmann::json{{"m", record.m},
                     {"n", record.n},
                     {"numerator", record.numerator.to_string()},
                     {"denominator", record.denominator.to_string()}};
  if (record.numerator.is_zero()) {
    j["identically_zero"] = true;
    return;
  }
  auto roots = nlohmann::json::array();
  auto factors = nlohmann::json::array();
  for (const auto& r : record.factors.roots) {
    roots.push_back({{"root", r.root.to_string()}, {"multiplicity", r.multiplicity}});
    factors.push_back(factor_string(r));
  }
  j["identically_zero"] = false;
  j["scalar"] = record.factors.scalar.to_string();
  j["roots"] = std::move(roots);
  j["factors"] = std::move(factors);
  j["cofactor"] = record.factors.cofactor.to_string();
}

void to_json(nlohmann::json& j, const ClassificationReport& report) {
  auto surviving = nlohmann::json::array();
  for (const auto& c0 : report.surviving_c)
    surviving.push_back(c0.to_string());
  auto family_map = nlohmann::json::object();
  for (const auto& [c0, f] : report.family_map)
    family_map[c0.to_string()] = std::string(family_name(f));
  auto unmatched = nlohmann::json::array();
  for (const auto& c0 : report.unmatched_c)
    unmatched.push_back(c0.to_string());
  j = nlohmann::json{{"branches", report.branches},
                     {"d", report.d.to_string()},
                     {"constraints", report.constraints},
                     {"common_gcd", report.common_gcd.to_string()},
                     {"surviving_c", std::move(surviving)},
                     {"family_map", std::move(family_map)},
                     {"unmatched_c", std::move(unmatched)},
                     {"residual_cofactor_check", report.residual_cofactor_check},
                     {"cofactor_check", report.cofactor_check},
                     {"complete", report.complete()},
                     {"notes", report.notes}};
}

} // namespace triprod
