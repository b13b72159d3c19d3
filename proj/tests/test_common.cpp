#include <gtest/gtest.h>

#include <sstream>

#include "paratask/common/csv.hpp"
#include "paratask/common/hashing.hpp"
#include "paratask/common/number_format.hpp"
#include "support.hpp"

namespace paratask {
namespace {

TEST(Hashing, Fnv1aReferenceValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Hashing, Sha256ReferenceValues) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hashing, FileDigestMatchesBuffer) {
  test::TempDir dir;
  auto p = dir.write("x.txt", "abc");
  EXPECT_EQ(sha256_file_hex(p), sha256_hex("abc"));
  EXPECT_PT_ERROR(sha256_file_hex(dir / "missing"), ErrorCode::IoError);
}

TEST(Csv, QuotedFieldsAndEmbeddedNewlines) {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\"\n\"multi\nline\",x,\n");
  csv::Reader r(in);
  auto row = r.next();
  ASSERT_TRUE(row);
  EXPECT_EQ(*row, (csv::Row{"a", "b,c", "say \"hi\""}));
  row = r.next();
  ASSERT_TRUE(row);
  EXPECT_EQ(r.record_line(), 2u);
  EXPECT_EQ(*row, (csv::Row{"multi\nline", "x", ""}));
  EXPECT_EQ(r.lines_read(), 3u);
  EXPECT_FALSE(r.next());
}

TEST(Csv, UnterminatedQuoteIsParseError) {
  std::istringstream in("\"open,never closed\n");
  csv::Reader r(in);
  EXPECT_PT_ERROR(r.next(), ErrorCode::ParseError);
}

TEST(Csv, WriteThenReadRoundTrips) {
  csv::Row row{"plain", "with,comma", "with \"quote\"", "two\nlines", ""};
  std::ostringstream out;
  csv::write_row(out, row);
  std::istringstream in(out.str());
  csv::Reader r(in);
  EXPECT_EQ(*r.next(), row);
}

TEST(Csv, TsvSplitKeepsEmptyFields) {
  EXPECT_EQ(csv::split_tsv("a\t\tb\r"), (csv::Row{"a", "", "b"}));
  EXPECT_EQ(csv::split_tsv(""), (csv::Row{""}));
}

TEST(NumberFormat, RoundTripIsExact) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5, 123456789.125}) {
    EXPECT_EQ(parse_double(format_roundtrip(v), "v"), v);
  }
  EXPECT_EQ(format_fixed(11.2567, 1), "11.3");
  EXPECT_PT_ERROR(parse_double("1.5x", "v"), ErrorCode::ParseError);
  EXPECT_PT_ERROR(parse_integer("", "n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_integer("-42", "n"), -42);
}

TEST(ErrorType, WhatCarriesCodeName) {
  Error e(ErrorCode::SchemaMismatch, "boom");
  EXPECT_EQ(std::string(e.what()), "SchemaMismatch: boom");
  EXPECT_EQ(e.message(), "boom");
}

}  // namespace
}  // namespace paratask
