#pragma once

#include <string>
#include <vector>

#include "tightpath/io.hpp"

namespace tightpath {

struct ThresholdRow {
  std::string condition;  // e.g. "f(n,4,k) >= 6"
  std::string threshold;  // "13" or "[15,19]"
  std::string basis;
};

struct CrossCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct CellDiff {
  std::size_t row = 0;
  std::string column;
  std::string expected;
  std::string computed;
};

struct ThresholdTable {
  int r = 0;
  std::vector<ThresholdRow> rows;
  std::vector<CrossCheck> checks;
  bool compared = false;  // a bundled expected table exists for r
  std::vector<CellDiff> diffs;

  bool ok() const;
};

// Recomputes the threshold bounds for r in {3, 4, 5} and diffs r = 4, 5
// against the bundled expected table.
ThresholdTable table_thresholds(int r);

// Cell-by-cell comparison against rows of {"condition", "threshold"}.
std::vector<CellDiff> diff_table(const std::vector<ThresholdRow>& rows, const Json& expected);

Json to_json(const ThresholdTable& table);
std::string to_text(const ThresholdTable& table);

}  // namespace tightpath
