#include <gtest/gtest.h>

#include <string>

#include "ward/bfile.hpp"

namespace ward {
namespace {

TEST(BFile, LinearizesWard2) {
  auto t = triangle(TriangleKind::Ward2, 3, Strategy::Recurrence);
  EXPECT_EQ(linearize(t).render(), "1 1\n2 1\n3 3\n4 1\n5 10\n6 15\n");
  EXPECT_EQ(linearize(t, 0).render(), "0 1\n1 1\n2 3\n3 1\n4 10\n5 15\n");
}

TEST(BFile, ParseWithComments) {
  auto f = BFile::parse("# A269939\n#  more\n1 1\n2 1\n\n3 3\n");
  ASSERT_EQ(f.comments.size(), 2u);
  EXPECT_EQ(f.comments[0], " A269939");
  ASSERT_EQ(f.entries.size(), 3u);
  EXPECT_EQ(f.entries[2].index, 3);
  EXPECT_EQ(f.entries[2].value, Integer(3));
  EXPECT_EQ(f.render(), "# A269939\n#  more\n1 1\n2 1\n3 3\n");
}

TEST(BFile, ParseErrors) {
  EXPECT_THROW(BFile::parse("1 1\n3 3\n"), BFileParseError);      // gap
  EXPECT_THROW(BFile::parse("1 1\n1 1\n"), BFileParseError);      // repeat
  EXPECT_THROW(BFile::parse("1\n"), BFileParseError);             // missing value
  EXPECT_THROW(BFile::parse("1 1 1\n"), BFileParseError);         // extra field
  EXPECT_THROW(BFile::parse("1 x\n"), BFileParseError);           // not a number
  EXPECT_THROW(BFile::parse("1 1\n# late\n2 2\n"), BFileParseError);
  try {
    BFile::parse("1 1\n2 2\n4 3\n");
    FAIL();
  } catch (const BFileParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(BFile, CrLfAccepted) {
  auto f = BFile::parse("1 5\r\n2 6\r\n");
  EXPECT_EQ(f.entries.size(), 2u);
  EXPECT_EQ(f.entries[1].value, Integer(6));
}

TEST(BFile, RoundTripEveryKind) {
  for (auto kind : kAllKinds) {
    auto file = linearize(triangle(kind, 30, Strategy::Recurrence));
    file.comments = {" " + std::string(to_string(kind))};
    const std::string text = file.render();
    EXPECT_EQ(BFile::parse(text).render(), text) << to_string(kind);
  }
}

TEST(Linearization, Bijection) {
  long expected = 1;
  for (long n = 1; n <= 60; ++n) {
    for (long k = 1; k <= n; ++k) {
      const long i = linear_index(n, k);
      EXPECT_EQ(i, expected++);
      EXPECT_EQ(i, n * (n - 1) / 2 + k);
      EXPECT_EQ(triangle_position(i), std::make_pair(n, k));
      EXPECT_EQ(triangle_position(linear_index(n, k, 7), 7), std::make_pair(n, k));
    }
  }
  EXPECT_THROW(linear_index(3, 0), std::out_of_range);
  EXPECT_THROW(triangle_position(0), std::out_of_range);
}

TEST(Compare, PrefixAgrees) {
  auto file = BFile::parse("1 1\n2 1\n3 3\n4 1\n");
  auto r = compare_bfile(file, TriangleKind::Ward2, Strategy::Recurrence);
  EXPECT_TRUE(r.agrees());
  EXPECT_EQ(r.compared, 4u);
}

TEST(Compare, ReportsMismatch) {
  auto file = BFile::parse("1 1\n2 1\n3 3\n4 1\n5 11\n");
  auto r = compare_bfile(file, TriangleKind::Ward2, Strategy::PartitionTransform);
  ASSERT_FALSE(r.agrees());
  EXPECT_EQ(r.mismatch->index, 5);
  EXPECT_EQ(r.mismatch->n, 3);
  EXPECT_EQ(r.mismatch->k, 2);
  EXPECT_EQ(r.mismatch->expected, Integer(10));
  EXPECT_EQ(r.mismatch->found, Integer(11));
}

TEST(Compare, OffByOneOffsetFailsAtFirstIndex) {
  auto file = linearize(triangle(TriangleKind::Ward1, 5, Strategy::Recurrence));
  EXPECT_TRUE(compare_bfile(file, TriangleKind::Ward1, Strategy::Recurrence, 1).agrees());
  auto r = compare_bfile(file, TriangleKind::Ward1, Strategy::Recurrence, 2);
  ASSERT_FALSE(r.agrees());
  EXPECT_EQ(r.mismatch->index, 1);
  r = compare_bfile(file, TriangleKind::Ward1, Strategy::Recurrence, 0);
  ASSERT_FALSE(r.agrees());
  EXPECT_EQ(r.mismatch->index, 1);
}

}  // namespace
}  // namespace ward
