#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace alexinv;

TEST(Csv, QuotedFields) {
  std::istringstream in("name,pd\n\"a,b\",\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"\n\"say \"\"hi\"\"\",[]\n");
  const auto rows = read_knots_csv(in);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].name, "a,b");
  EXPECT_EQ(rows[0].pd, "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  EXPECT_EQ(rows[1].name, "say \"hi\"");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("x\"y"), "\"x\"\"y\"");
  EXPECT_EQ(csv_field("plain"), "plain");
}

TEST(Csv, HeaderOnlyGivesNoKnots) {
  std::istringstream in("name,pd\n");
  EXPECT_TRUE(read_knots_csv(in).empty());
}

TEST(Csv, MissingColumnIsInputError) {
  std::istringstream in("knot,code\n");
  EXPECT_THROW(read_knots_csv(in), InputError);
  std::istringstream empty("");
  EXPECT_THROW(read_knots_csv(empty), InputError);
}

TEST(Jsonl, ArraysAndStrings) {
  std::istringstream in("{\"name\":\"3_1\",\"pd\":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]}\n\n{\"name\":\"0_1\",\"pd\":\"[]\"}\n");
  const auto rows = read_knots_jsonl(in);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].pd, "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  std::istringstream bad("{\"name\":1}\n");
  EXPECT_THROW(read_knots_jsonl(bad), InputError);
}

TEST(Batch, ErrorsAreRecordedPerKnot) {
  const std::vector<KnotRow> rows = {{"ok", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"}, {"bad", "[[1,2,3]]"}};
  const auto recs = run_batch(rows, Policy::fast_with_fallback, 2);
  ASSERT_EQ(recs.size(), 2U);
  EXPECT_TRUE(recs[0].ok());
  EXPECT_FALSE(recs[1].ok());
  EXPECT_FALSE(recs[1].error.empty());
  const auto s = summarize(recs, 1.0);
  EXPECT_EQ(s.count, 2U);
  EXPECT_EQ(s.failures, 1U);
  std::ostringstream out;
  write_batch_jsonl(recs, out);
  EXPECT_NE(out.str().find("\"delta\":null"), std::string::npos);
}

TEST(Batch, OutputIndependentOfJobs) {
  const auto rows = testsupport::load("le10.csv");
  auto render = [&](unsigned jobs) {
    auto recs = run_batch(rows, Policy::fast_with_fallback, jobs);
    for (auto& r : recs) r.elapsed = 0;
    std::ostringstream out;
    write_batch_csv(recs, out);
    return out.str();
  };
  const std::string one = render(1);
  EXPECT_EQ(render(3), one);
  EXPECT_EQ(render(8), one);
  EXPECT_EQ(one.substr(0, one.find('\n')), batch_csv_header());
}

TEST(Bench, GroupsByCrossingNumber) {
  const auto rows = testsupport::load("table1.csv");
  const auto rep = run_bench(rows, Policy::fast, true);
  ASSERT_FALSE(rep.groups.empty());
  std::size_t total = 0;
  for (std::size_t i = 0; i < rep.groups.size(); ++i) {
    total += rep.groups[i].knots;
    EXPECT_EQ(rep.groups[i].failures, 0U);
    EXPECT_TRUE(rep.groups[i].speedup().has_value());
    if (i) EXPECT_GT(rep.groups[i].crossings, rep.groups[i - 1].crossings);
  }
  EXPECT_EQ(total, rows.size());
  const std::string text = render_bench(rep);
  EXPECT_NE(text.find("speedup"), std::string::npos);
  EXPECT_NE(text.find("monotone: "), std::string::npos);
}

TEST(Bench, CrossingCount) {
  EXPECT_EQ(crossing_count("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"), 3U);
  EXPECT_EQ(crossing_count("[]"), 0U);
  EXPECT_FALSE(crossing_count("[[1,").has_value());
}
