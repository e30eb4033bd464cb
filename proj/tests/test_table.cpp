#include <gtest/gtest.h>

#include "tightpath/error.hpp"
#include "tightpath/table.hpp"

using namespace tightpath;

namespace {

std::vector<std::string> thresholds(const ThresholdTable& t) {
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row.threshold);
  return out;
}

}  // namespace

TEST(Table, FourUniformReproducesRows) {
  const ThresholdTable t = table_thresholds(4);
  EXPECT_EQ(thresholds(t), (std::vector<std::string>{"13", "15", "[15,19]", "[15,23]"}));
  EXPECT_EQ(t.rows[0].condition, "f(n,4,k) >= 6");
  EXPECT_TRUE(t.compared);
  EXPECT_TRUE(t.diffs.empty());
  EXPECT_TRUE(t.ok());
  bool exact_theta = false;
  for (const auto& c : t.checks) {
    EXPECT_TRUE(c.ok) << c.name;
    if (c.name == "exact theta_3(PSG_4)") exact_theta = c.computed == "12";
  }
  EXPECT_TRUE(exact_theta);
}

TEST(Table, FiveUniformReproducesRows) {
  const ThresholdTable t = table_thresholds(5);
  EXPECT_EQ(thresholds(t), (std::vector<std::string>{"49", "73", "85", "[85,97]", "[85,113]"}));
  EXPECT_TRUE(t.ok());
  int matched = 0;
  for (const auto& c : t.checks) {
    if (c.name == "size of mod-2 transversal of PSG_5") matched += c.computed == "72";
    if (c.name == "size of mod-4 transversal of PSG_5") matched += c.computed == "48";
    if (c.name.rfind("shift-cycle lower bound", 0) == 0) matched += c.ok;
  }
  EXPECT_EQ(matched, 4);
}

TEST(Table, ThreeUniformAnalogue) {
  const ThresholdTable t = table_thresholds(3);
  EXPECT_EQ(thresholds(t), (std::vector<std::string>{"3", "3", "[3,5]", "[3,5]"}));
  EXPECT_FALSE(t.compared);
  EXPECT_TRUE(t.ok());
  EXPECT_THROW(table_thresholds(6), Error);
  EXPECT_THROW(table_thresholds(2), Error);
}

TEST(Table, DiffReportsEveryCell) {
  const ThresholdTable t = table_thresholds(4);
  Json expected = to_json(t).at("rows");
  EXPECT_TRUE(diff_table(t.rows, expected).empty());
  expected[2]["threshold"] = "[15,20]";
  expected[0]["condition"] = "f(n,4,k) >= 7";
  auto diffs = diff_table(t.rows, expected);
  ASSERT_EQ(diffs.size(), 2u);
  EXPECT_EQ(diffs[0].row, 0u);
  EXPECT_EQ(diffs[0].column, "condition");
  EXPECT_EQ(diffs[1].row, 2u);
  EXPECT_EQ(diffs[1].expected, "[15,20]");
  EXPECT_EQ(diffs[1].computed, "[15,19]");
  expected.erase(3);
  diffs = diff_table(t.rows, expected);
  EXPECT_EQ(diffs.size(), 4u);
  EXPECT_EQ(diffs.back().expected, "(none)");
}

TEST(Table, TextRendering) {
  const std::string text = to_text(table_thresholds(5));
  EXPECT_NE(text.find("f(n,5,k) >= 8"), std::string::npos);
  EXPECT_NE(text.find("[85,113]"), std::string::npos);
  EXPECT_EQ(text.find("check FAIL"), std::string::npos);
}
