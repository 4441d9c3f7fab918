#include "triprod/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "triprod/errors.hpp"

namespace triprod {

namespace {

std::vector<VerifyFailure> check_rows(std::span<const Rational> t, std::int64_t m_begin,
                                      std::int64_t m_end, std::int64_t max_mn) {
  std::vector<VerifyFailure> failures;
  for (std::int64_t m = m_begin; m < m_end; ++m) {
    for (std::int64_t n = 1; n <= max_mn; ++n) {
      const Rational& lhs = t[static_cast<std::size_t>(m * n)];
      Rational rhs = t[static_cast<std::size_t>(m)] * t[static_cast<std::size_t>(n)];
      rhs += t[static_cast<std::size_t>(m - 1)] * t[static_cast<std::size_t>(n - 1)];
      if (lhs != rhs)
        failures.push_back({m, n, lhs, std::move(rhs)});
    }
  }
  return failures;
}

} // namespace

VerifyReport verify_sequence(std::string subject, std::span<const Rational> values,
                             std::int64_t max_mn, unsigned workers) {
  if (max_mn < 1)
    throw std::invalid_argument("verification needs max_mn >= 1");
  const auto top = static_cast<std::uint64_t>(max_mn) * static_cast<std::uint64_t>(max_mn);
  if (values.size() <= top)
    throw std::invalid_argument("sequence has " + std::to_string(values.size()) +
                                " values; the grid needs " + std::to_string(top + 1));
  VerifyReport report;
  report.subject = std::move(subject);
  report.range = max_mn;
  report.checked = top;

  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(max_mn));
  if (workers == 1) {
    report.failures = check_rows(values, 1, max_mn + 1, max_mn);
    return report;
  }

  std::vector<std::vector<VerifyFailure>> parts(workers);
  {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (max_mn + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t begin = 1 + static_cast<std::int64_t>(w) * chunk;
      const std::int64_t end = std::min(begin + chunk, max_mn + 1);
      pool.emplace_back([&, w, begin, end] {
        if (begin < end)
          parts[w] = check_rows(values, begin, end, max_mn);
      });
    }
  }
  for (auto& part : parts)
    report.failures.insert(report.failures.end(), part.begin(), part.end());
  std::sort(report.failures.begin(), report.failures.end(),
            [](const VerifyFailure& a, const VerifyFailure& b) {
              return std::pair(a.m, a.n) < std::pair(b.m, b.n);
            });
  return report;
}

VerifyReport verify_family(FamilyId family, std::int64_t max_mn, unsigned workers) {
  if (max_mn < 1)
    throw std::invalid_argument("verify_family needs max_mn >= 1");
  const auto top = static_cast<std::uint64_t>(max_mn) * static_cast<std::uint64_t>(max_mn);
  std::vector<Rational> t;
  t.reserve(top + 1);
  for (std::uint64_t k = 0; k <= top; ++k)
    t.push_back(family_value(family, k));
  return verify_sequence(std::string(family_name(family)), t, max_mn, workers);
}

void require_in_domain(const SymbolicTable& table, const Rational& c0) {
  if (table.d().den().eval(c0).is_zero())
    throw DomainError("c = " + c0.to_string() + " is a root of " + table.d().den().to_string() +
                      "; d(c) is undefined there");
}

VerifyReport crosscheck_specialization(SymbolicTable& table, const Rational& c0, FamilyId family,
                                       std::int64_t max_n) {
  if (max_n < 0)
    throw std::invalid_argument("crosscheck needs max_n >= 0");
  require_in_domain(table, c0);
  VerifyReport report;
  report.subject = "c=" + c0.to_string() + " vs " + std::string(family_name(family));
  report.range = max_n;
  for (std::int64_t n = 0; n <= max_n; ++n) {
    Rational got = table.at(static_cast<std::size_t>(n)).eval(c0);
    Rational want = family_value(family, static_cast<std::uint64_t>(n));
    ++report.checked;
    if (got != want)
      report.failures.push_back({std::nullopt, n, std::move(got), std::move(want)});
  }
  return report;
}

VerifyReport crosscheck_specialization(const Rational& c0, FamilyId family, std::int64_t max_n) {
  SymbolicTable table(static_cast<std::size_t>(std::max<std::int64_t>(max_n, 3)));
  return crosscheck_specialization(table, c0, family, max_n);
}

std::vector<ScanEntry> scan_candidate(SymbolicTable& table, const Rational& c0,
                                      std::int64_t max_prod) {
  require_in_domain(table, c0);
  std::vector<ScanEntry> out;
  for (std::int64_t m = 3; m * m <= max_prod; ++m) {
    for (std::int64_t n = m; m * n <= max_prod; ++n) {
      Rational r = residual_numerator(table, static_cast<std::size_t>(m), static_cast<std::size_t>(n))
                       .eval(c0);
      if (!r.is_zero())
        out.push_back({m, n, std::move(r)});
    }
  }
  return out;
}

std::vector<ScanEntry> scan_candidate(const Rational& c0, std::int64_t max_prod) {
  SymbolicTable table(static_cast<std::size_t>(std::max<std::int64_t>(max_prod, 3)));
  return scan_candidate(table, c0, max_prod);
}

void to_json(nlohmann::json& j, const VerifyReport& report) {
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json e;
    if (f.m)
      e["m"] = *f.m;
    e["n"] = f.n;
    e["lhs"] = f.lhs.to_string();
    e["rhs"] = f.rhs.to_string();
    failures.push_back(std::move(e));
  }
  j = nlohmann::json{{"subject", report.subject},
                     {"range", report.range},
                     {"checked", report.checked},
                     {"failures", std::move(failures)}};
}

} // namespace triprod
