#include "tightpath/table.hpp"

#include <algorithm>
#include <sstream>

#include "tightpath/bundled_data.hpp"
#include "tightpath/error.hpp"
#include "tightpath/psg.hpp"
#include "tightpath/thresholds.hpp"

namespace tightpath {

namespace {

std::string str(const BigInt& x) { return x.str(); }

std::string interval(const BigInt& lo, const BigInt& hi) {
  return lo == hi ? str(lo) : "[" + str(lo) + "," + str(hi) + "]";
}

BigInt as_integer(const Rational& q, const char* what) {
  if (denominator(q) != 1) fail(ErrorKind::Precondition, std::string(what) + " is not an integer: " + to_string(q));
  return numerator(q);
}

CrossCheck check(std::string name, const BigInt& expected, const BigInt& computed) {
  return {std::move(name), str(expected), str(computed), expected == computed};
}

std::string cond(int r, const std::string& rhs) { return "f(n," + std::to_string(r) + ",k) " + rhs; }

}  // namespace

bool ThresholdTable::ok() const {
  return diffs.empty() && std::all_of(checks.begin(), checks.end(), [](const CrossCheck& c) { return c.ok; });
}

ThresholdTable table_thresholds(int r) {
  if (r < 3 || r > 5) fail(ErrorKind::Unsupported, "threshold table is available for r in {3, 4, 5}");
  ThresholdTable table;
  table.r = r;
  const PatternShiftGraph psg(r);
  const BigInt total = factorial(r);
  const std::string R = std::to_string(r);

  // Constant-size paths: t | r-1 gives tau_t exactly.
  for (int t = 2; t <= r - 1; ++t) {
    if ((r - 1) % t != 0) continue;
    const auto [tau, theta] = tau_formula_divisible(r, t);
    const BigInt tau_i = as_integer(tau, "tau_t"), theta_i = as_integer(theta, "theta_t");
    const std::string T = std::to_string(t);
    table.rows.push_back({cond(r, ">= " + std::to_string(r - 1 + t)), str(theta_i + 1),
                          "1 + theta_" + T + "(PSG_" + R + "), tau_" + T + " = " + str(tau_i)});

    const std::vector<int> s = construct_transversal_mod_t(r, t);
    table.checks.push_back(check("size of mod-" + T + " transversal of PSG_" + R, tau_i, BigInt(s.size())));
    table.checks.push_back(check("shift-cycle lower bound on tau_" + T + "(PSG_" + R + ")", tau_i,
                                 tau_lower_bound_shift_cycles(r, t)));
    std::vector<bool> alive(static_cast<std::size_t>(psg.vertex_count()), true);
    for (int v : s) alive[static_cast<std::size_t>(v)] = false;
    const WalkReport rest = longest_walk(psg.graph(), alive);
    const BigInt longest = rest.finite ? BigInt(rest.max_walk_size) : BigInt(-1);
    table.checks.push_back({"mod-" + T + " transversal meets every walk of size " + T, "< " + T,
                            rest.finite ? str(longest) : "unbounded", rest.finite && rest.max_walk_size < t});
    if (r <= 4) {
      const ThetaResult exact = theta_exact(psg.graph(), t);
      table.checks.push_back(check("exact theta_" + T + "(PSG_" + R + ")", theta_i, BigInt(exact.value)));
    }
  }

  const GrowingThreshold growing = growing_threshold(r);
  if (!growing.value) fail(ErrorKind::Unsupported, "growing threshold is not exact for r = " + R);
  const BigInt g = *growing.value;
  table.rows.push_back({cond(r, ">= omega(1)"), str(g), "1 + a(PSG_" + R + "): " + growing.basis});

  const BigInt linear = as_integer((Rational(1) - Rational(1, r) + Rational(1) / Rational(total)) * Rational(total),
                                   "linear bound");
  table.rows.push_back({cond(r, ">= Omega(n)"), interval(g, linear),
                        "lower: growing threshold; upper: (1-1/r+1/r!)r! = " + str(linear)});

  BigInt spanning = floor_plus_one((Rational(1) - Rational(1, 4 * (r - 1))) * Rational(total));
  std::string spanning_basis = "lower: growing threshold; upper: smallest k > (1-1/(4(r-1)))r!";
  if (r == 3) {
    spanning = std::min(spanning, BigInt(total - 1));
    spanning_basis = "lower: growing threshold; upper: insertion argument for (3,5)-tournaments";
  }
  table.rows.push_back({cond(r, "= n"), interval(g, spanning), spanning_basis});

  const Json expected = parse_json(data::expected_tables, "bundled expected table");
  if (expected.contains(R)) {
    table.compared = true;
    table.diffs = diff_table(table.rows, expected.at(R));
  }
  return table;
}

std::vector<CellDiff> diff_table(const std::vector<ThresholdRow>& rows, const Json& expected) {
  if (!expected.is_array()) fail(ErrorKind::InvalidInput, "expected table rows must be an array");
  std::vector<CellDiff> diffs;
  const std::size_t count = std::max(expected.size(), rows.size());
  for (std::size_t i = 0; i < count; ++i) {
    const bool have_e = i < expected.size(), have_c = i < rows.size();
    const std::string ec = have_e ? expected[i].at("condition").get<std::string>() : "(none)";
    const std::string et = have_e ? expected[i].at("threshold").get<std::string>() : "(none)";
    const std::string cc = have_c ? rows[i].condition : "(none)";
    const std::string ct = have_c ? rows[i].threshold : "(none)";
    if (ec != cc) diffs.push_back({i, "condition", ec, cc});
    if (et != ct) diffs.push_back({i, "threshold", et, ct});
  }
  return diffs;
}

Json to_json(const ThresholdTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"condition", row.condition}, {"threshold", row.threshold}, {"basis", row.basis}});
  }
  Json checks = Json::array();
  for (const auto& c : table.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok}});
  }
  Json diffs = Json::array();
  for (const auto& d : table.diffs) {
    diffs.push_back({{"row", d.row}, {"column", d.column}, {"expected", d.expected}, {"computed", d.computed}});
  }
  return {{"r", table.r},         {"rows", std::move(rows)},   {"checks", std::move(checks)},
          {"compared", table.compared}, {"diffs", std::move(diffs)}, {"ok", table.ok()}};
}

std::string to_text(const ThresholdTable& table) {
  std::size_t width = 9;
  for (const auto& row : table.rows) width = std::max(width, row.condition.size());
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("Condition", width) << " | " << pad("Threshold", 9) << " | Basis\n";
  for (const auto& row : table.rows) {
    os << pad(row.condition, width) << " | " << pad(row.threshold, 9) << " | " << row.basis << "\n";
  }
  for (const auto& c : table.checks) {
    os << (c.ok ? "check ok   " : "check FAIL ") << c.name << ": expected " << c.expected << ", computed " << c.computed
       << "\n";
  }
  if (!table.compared) os << "no bundled table for r = " << table.r << "\n";
  for (const auto& d : table.diffs) {
    os << "diff row " << d.row << " " << d.column << ": expected " << d.expected << ", computed " << d.computed << "\n";
  }
  return os.str();
}

}  // namespace tightpath
