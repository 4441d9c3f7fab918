#include "triprod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "triprod/errors.hpp"
#include "triprod/family.hpp"
#include "triprod/sequence.hpp"
#include "triprod/verify.hpp"

namespace triprod::cli {

namespace {

using nlohmann::json;

/// What a command produced: exit code plus both renderings.
struct Outcome {
  int code = kOk;
  json doc;
  std::string text;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::size_t parse_index(std::string_view s) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty())
    throw std::invalid_argument("bad index '" + std::string(s) + "'");
  return value;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

std::string describe(const VerifyReport& r) {
  std::ostringstream os;
  os << r.subject << ": range " << r.range << ", checked " << r.checked
     << ", failures: " << r.failures.size() << '\n';
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (++shown > 5) {
      os << "  ...\n";
      break;
    }
    os << "  ";
    if (f.m)
      os << "(m,n) = (" << *f.m << "," << f.n << ")";
    else
      os << "n = " << f.n;
    os << ": " << f.lhs << " != " << f.rhs << '\n';
  }
  return os.str();
}

std::string describe(const ConstraintRecord& rec) {
  std::ostringstream os;
  os << "(" << rec.m << "," << rec.n << ") numerator: " << rec.numerator;
  if (rec.numerator.is_zero()) {
    os << " (identically zero)\n";
    return os.str();
  }
  os << '\n';
  std::vector<std::string> factors;
  for (const auto& r : rec.factors.roots)
    factors.push_back(factor_string(r));
  os << "  denominator: " << rec.denominator << '\n';
  os << "  scalar: " << rec.factors.scalar << '\n';
  os << "  factors: " << (factors.empty() ? "(none)" : join(factors, ", ")) << '\n';
  os << "  cofactor: " << rec.factors.cofactor << '\n';
  return os.str();
}

Rational parse_rational_arg(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad rational '" + text + "': " + e.what());
  }
}

Outcome cmd_derive_d(bool steps) {
  const DDerivation dd = derive_d_steps();
  Outcome o;
  o.doc = json{{"d", dd.d.to_string()},
               {"t18_from_3_6", dd.t18_from_3_6.to_string()},
               {"t18_from_2_9", dd.t18_from_2_9.to_string()},
               {"difference", dd.difference.to_string()}};
  std::ostringstream os;
  if (steps) {
    os << "T(3)T(6) + T(2)T(5) = " << dd.t18_from_3_6.to_string() << '\n';
    os << "cT(9) + T(8) = " << dd.t18_from_2_9.to_string() << '\n';
    os << "difference = " << dd.difference.to_string() << '\n';
  }
  os << dd.d << '\n';
  o.text = os.str();
  return o;
}

Outcome cmd_classify(const std::vector<ProbePair>& probes, std::int64_t range) {
  std::size_t top = static_cast<std::size_t>(std::max<std::int64_t>(range, 64));
  for (const auto& [m, n] : probes) {
    if (m == 0 || n == 0)
      throw UsageError("probe pairs need m, n >= 1");
    top = std::max(top, m * n);
  }
  if (top > SymbolicTable::kDefaultMaxIndex)
    throw UsageError("probe products and --range must stay within " +
                     std::to_string(SymbolicTable::kDefaultMaxIndex));
  SymbolicTable table(top);
  const ClassificationReport report = solve_c(probes, table);
  const auto certs = certify(report, table, range);
  const bool certified =
      std::all_of(certs.begin(), certs.end(), [](const VerifyReport& r) { return r.passed(); });

  Outcome o;
  o.code = report.complete() && certified ? kOk : kCheckFailed;
  o.doc = report;
  o.doc["certification"] = certs;

  std::ostringstream os;
  os << "branches:\n";
  for (const auto& b : report.branches) {
    os << "  " << b.condition << ": " << b.conclusion;
    if (!b.families.empty()) {
      std::vector<std::string> names;
      for (auto f : b.families)
        names.emplace_back(family_name(f));
      os << " [" << join(names, ", ") << "]";
    }
    os << '\n';
  }
  os << "d = " << report.d << '\n';
  for (const auto& rec : report.constraints)
    os << describe(rec);
  os << "common gcd: " << report.common_gcd << '\n';
  std::vector<std::string> surviving;
  for (const auto& c0 : report.surviving_c)
    surviving.push_back(c0.to_string());
  os << "surviving_c: " << join(surviving, ", ") << '\n';
  std::vector<std::string> mapped;
  for (const auto& [c0, f] : report.family_map)
    mapped.push_back(c0.to_string() + " -> " + std::string(family_name(f)));
  os << "family_map: " << join(mapped, ", ") << '\n';
  if (!report.unmatched_c.empty()) {
    std::vector<std::string> unmatched;
    for (const auto& c0 : report.unmatched_c)
      unmatched.push_back(c0.to_string());
    os << "unmatched_c: " << join(unmatched, ", ") << '\n';
  }
  os << "residual_cofactor_check: " << (report.residual_cofactor_check ? "true" : "false") << '\n';
  os << "cofactor_check: " << (report.cofactor_check ? "true" : "false") << '\n';
  for (const auto& note : report.notes)
    os << "note: " << note << '\n';
  os << "certification (range " << range << "):\n";
  for (const auto& r : certs)
    os << "  " << describe(r);
  os << (o.code == kOk ? "complete: true\n" : "complete: false\n");
  o.text = os.str();
  return o;
}

Outcome cmd_verify(const std::string& family, std::int64_t max, unsigned workers, bool json_mode) {
  std::vector<FamilyId> families;
  if (family == "all") {
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  } else if (auto f = parse_family(family)) {
    families.push_back(*f);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (max < 1)
    throw UsageError("--max must be >= 1");

  Outcome o;
  std::vector<VerifyReport> reports;
  std::string text;
  for (auto f : families) {
    reports.push_back(verify_family(f, max, workers));
    text += describe(reports.back());
    if (!reports.back().passed()) {
      o.code = kCheckFailed;
      if (!json_mode)
        break;
    }
  }
  o.doc = families.size() == 1 ? json(reports.front()) : json(reports);
  o.text = text;
  return o;
}

Outcome cmd_eval(const std::string& c_text, std::size_t n) {
  const Rational c0 = parse_rational_arg(c_text);
  if (n > SymbolicTable::kDefaultMaxIndex)
    throw UsageError("--n must be <= " + std::to_string(SymbolicTable::kDefaultMaxIndex));
  SymbolicTable table(std::max<std::size_t>(n, 3));
  require_in_domain(table, c0);
  const Rational value = table.at(n).eval(c0);
  Outcome o;
  o.doc = json{{"c", c0.to_string()}, {"n", n}, {"value", value.to_string()}};
  o.text = value.to_string() + "\n";
  return o;
}

Outcome cmd_table(const std::string& family, const std::string& c_text, std::size_t max) {
  if (family.empty() == c_text.empty())
    throw UsageError("table needs exactly one of --family or --c");
  std::vector<Rational> values;
  json doc;
  if (!family.empty()) {
    const auto f = parse_family(family);
    if (!f)
      throw UsageError("unknown family '" + family + "'");
    for (std::size_t n = 0; n <= max; ++n)
      values.push_back(family_value(*f, n));
    doc["family"] = family;
  } else {
    const Rational c0 = parse_rational_arg(c_text);
    if (max > SymbolicTable::kDefaultMaxIndex)
      throw UsageError("--max must be <= " + std::to_string(SymbolicTable::kDefaultMaxIndex));
    SymbolicTable table(std::max<std::size_t>(max, 3));
    require_in_domain(table, c0);
    for (std::size_t n = 0; n <= max; ++n)
      values.push_back(table.at(n).eval(c0));
    doc["c"] = c0.to_string();
  }
  auto rows = json::array();
  std::ostringstream os;
  os << "n T(n)\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    rows.push_back({{"n", n}, {"value", values[n].to_string()}});
    os << n << ' ' << values[n] << '\n';
  }
  doc["rows"] = std::move(rows);
  return {kOk, std::move(doc), os.str()};
}

Outcome cmd_constraints(const std::vector<ProbePair>& pairs) {
  std::size_t top = 3;
  for (const auto& [m, n] : pairs) {
    if (m == 0 || n == 0)
      throw UsageError("pairs need m, n >= 1");
    top = std::max(top, m * n);
  }
  if (top > SymbolicTable::kDefaultMaxIndex)
    throw UsageError("pair products must stay within " +
                     std::to_string(SymbolicTable::kDefaultMaxIndex));
  SymbolicTable table(top);
  std::vector<ConstraintRecord> records;
  std::string text;
  for (const auto& [m, n] : pairs) {
    const RatFunc res = residual(table, m, n);
    ConstraintRecord rec{m, n, res.num(), res.den(), {}};
    if (!rec.numerator.is_zero())
      rec.factors = extract_rational_roots(rec.numerator);
    text += describe(rec);
    records.push_back(std::move(rec));
  }
  return {kOk, json{{"constraints", records}}, text};
}

} // namespace

std::vector<ProbePair> parse_pairs(std::string_view text) {
  std::vector<ProbePair> out;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view item = text.substr(0, semi);
    const auto comma = item.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("expected m,n but got '" + std::string(item) + "'");
    out.emplace_back(parse_index(item.substr(0, comma)), parse_index(item.substr(comma + 1)));
    if (semi == std::string_view::npos)
      break;
    text.remove_prefix(semi + 1);
  }
  if (out.empty())
    throw std::invalid_argument("empty pair list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of sequences with T(mn) = T(m)T(n) + T(m-1)T(n-1)",
               "triprod"};
  app.require_subcommand(1, 1);
  bool json_mode = false;
  std::string out_path;
  app.add_flag("--json", json_mode, "Emit JSON on standard output");
  app.add_option("--out", out_path, "Also write the JSON document to PATH");

  auto* derive = app.add_subcommand("derive-d", "Derive d = T(3) as a function of c = T(2)");
  bool steps = false;
  derive->add_flag("--steps", steps, "Show both expansions of T(18)");

  auto* classify = app.add_subcommand("classify", "Classify all solutions of the product rule");
  std::string probes_text = "3,3;3,5";
  std::int64_t range = 200;
  classify->add_option("--probes", probes_text, "Probe pairs m,n;m,n")->capture_default_str();
  classify->add_option("--range", range, "Brute-force certification range")
      ->capture_default_str()
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));

  auto* verify = app.add_subcommand("verify", "Brute-force a family over an m x n grid");
  std::string verify_family_name;
  std::int64_t verify_max = 0;
  unsigned workers = 1;
  verify->add_option("--family", verify_family_name, "zero|half|ceilhalf|period3|triangular|all")
      ->required();
  verify->add_option("--max", verify_max, "Largest m and n")->required();
  verify->add_option("--workers", workers, "Worker threads")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate symbolic T(n) at a rational c");
  std::string c_text;
  std::size_t eval_n = 0;
  eval->add_option("--c", c_text, "Value of c = T(2), as p/q or an integer")->required();
  eval->add_option("--n", eval_n, "Index n")->required();

  auto* table = app.add_subcommand("table", "Print T(0..N) for a family or a value of c");
  std::string table_family;
  std::string table_c;
  std::size_t table_max = 0;
  table->add_option("--family", table_family, "Family name");
  table->add_option("--c", table_c, "Value of c = T(2)");
  table->add_option("--max", table_max, "Largest index")->required();

  auto* constraints = app.add_subcommand("constraints", "Residual numerators with rational roots extracted");
  std::string pairs_text;
  constraints->add_option("--pairs", pairs_text, "Pairs m,n;m,n")->required();

  for (auto* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Outcome outcome;
  try {
    if (*derive) {
      outcome = cmd_derive_d(steps);
    } else if (*classify) {
      std::vector<ProbePair> probes;
      try {
        probes = parse_pairs(probes_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--probes: ") + e.what());
      }
      outcome = cmd_classify(probes, range);
    } else if (*verify) {
      outcome = cmd_verify(verify_family_name, verify_max, workers, json_mode);
    } else if (*eval) {
      outcome = cmd_eval(c_text, eval_n);
    } else if (*table) {
      outcome = cmd_table(table_family, table_c, table_max);
    } else if (*constraints) {
      std::vector<ProbePair> pairs;
      try {
        pairs = parse_pairs(pairs_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--pairs: ") + e.what());
      }
      outcome = cmd_constraints(pairs);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const WeakProbeError& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (json_mode)
    out << outcome.doc.dump(2) << '\n';
  else
    out << outcome.text;

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kUsage;
    }
    file << outcome.doc.dump(2) << '\n';
  }
  return outcome.code;
}

} // namespace triprod::cli
