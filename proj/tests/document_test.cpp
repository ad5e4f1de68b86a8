#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vest/document.hpp"
#include "vest/reduction.hpp"

namespace {

using vest::InstanceDocument;
using vest::Semiring;

constexpr const char* kK1Rational = R"({
  "format": "vest-instance",
  "version": 1,
  "semiring": "q",
  "d": 4,
  "h": 2,
  "m": 1,
  "v": ["1", "0", "0", "1"],
  "transformations": [
    [
      ["0", "0", "0", "0"],
      ["0", "0", "1", "0"],
      ["0", "0", "0", "1"],
      ["0", "0", "0", "1"]
    ]
  ],
  "selector": [
    ["1", "0", "0", "0"],
    ["0", "1", "0", "0"]
  ]
}
)";

vest::ErrorCode error_of(const std::string& text) {
  try {
    vest::parse_instance_document(text);
  } catch (const vest::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed";
  return vest::ErrorCode::io_error;
}

TEST(Document, GoldenK1) {
  auto reduced = vest::reduce(oracle::k1().build(), Semiring::rational);
  EXPECT_EQ(vest::serialize(InstanceDocument{reduced.instance}), kK1Rational);
}

TEST(Document, Gf2UsesIntegers) {
  auto reduced = vest::reduce(oracle::k1().build(), Semiring::gf2);
  std::string text = vest::serialize(InstanceDocument{reduced.instance});
  EXPECT_NE(text.find("\"semiring\": \"gf2\""), std::string::npos);
  EXPECT_NE(text.find("\"v\": [1, 0, 0, 1]"), std::string::npos);
  EXPECT_EQ(vest::parse_instance_document(text).instance, reduced.instance);
}

TEST(Document, MetadataRoundTrips) {
  InstanceDocument doc{vest::reduce(oracle::p3().build(), Semiring::gf2).instance};
  doc.metadata = {{"source", {{"n", 3}}}, {"tool", "vest 1.0.0"}};
  auto back = vest::parse_instance_document(vest::serialize(doc));
  EXPECT_EQ(back.metadata, doc.metadata);
  EXPECT_EQ(vest::serialize(back), vest::serialize(doc));
}

TEST(Document, RoundTripOnGeneratedCorpus) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto inst = oracle::random_rational_instance(rng, 5, 4);
    std::string text = vest::serialize(InstanceDocument{inst});
    auto back = vest::parse_instance_document(text);
    ASSERT_EQ(back.instance, inst);
    EXPECT_EQ(vest::serialize(back), text);
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto g = oracle::random_graph(n, 0.5, rng).build();
      for (auto s : {Semiring::rational, Semiring::gf2}) {
        auto inst = vest::reduce(g, s).instance;
        auto back = vest::parse_instance_document(vest::serialize(InstanceDocument{inst}));
        ASSERT_EQ(back.instance, inst);
        EXPECT_TRUE(back.instance.all_functional());
      }
    }
  }
}

TEST(Document, NormalizationThenByteIdentical) {
  std::string raw = R"({"format": "vest-instance", "semiring": "q", "d": 2, "h": 1, "m": 1,
    "v": ["2/4", "-6/3"], "transformations": [[["1", "0/5"], [3, "12345678901234567890/2"]]],
    "selector": [["1", "1/2"]]})";
  auto once = vest::serialize(vest::parse_instance_document(raw));
  EXPECT_NE(once.find("\"v\": [\"1/2\", \"-2\"]"), std::string::npos);
  EXPECT_NE(once.find("\"6172839450617283945\""), std::string::npos);
  EXPECT_EQ(vest::serialize(vest::parse_instance_document(once)), once);
}

TEST(Document, SchemaErrors) {
  using vest::ErrorCode;
  EXPECT_EQ(error_of("not json"), ErrorCode::schema_error);
  EXPECT_EQ(error_of("[]"), ErrorCode::schema_error);
  EXPECT_EQ(error_of(R"({"format": "other"})"), ErrorCode::schema_error);
  std::string good = kK1Rational;
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_EQ(error_of(replace("\"semiring\": \"q\"", "\"semiring\": \"z\"")), ErrorCode::schema_error);
  EXPECT_EQ(error_of(replace("\"d\": 4", "\"d\": -4")), ErrorCode::schema_error);
  EXPECT_EQ(error_of(replace("\"d\": 4", "\"d\": 5")), ErrorCode::dimension_mismatch);
  EXPECT_EQ(error_of(replace("\"m\": 1", "\"m\": 2")), ErrorCode::dimension_mismatch);
  EXPECT_EQ(error_of(replace("\"h\": 2", "\"h\": 3")), ErrorCode::dimension_mismatch);
  EXPECT_EQ(error_of(replace("[\"1\", \"0\", \"0\", \"1\"]", "[1.5, \"0\", \"0\", \"1\"]")), ErrorCode::schema_error);
  EXPECT_EQ(error_of(replace("[\"1\", \"0\", \"0\", \"1\"]", "[\"1/0\", \"0\", \"0\", \"1\"]")), ErrorCode::schema_error);
  EXPECT_EQ(error_of(replace("\"version\": 1", "\"version\": 9")), ErrorCode::schema_error);
  std::string gf2 = replace("\"semiring\": \"q\"", "\"semiring\": \"gf2\"");
  EXPECT_EQ(error_of(gf2), ErrorCode::non_binary_entry);  // strings are not GF(2) entries
}

TEST(Document, MSequenceJson) {
  auto inst = vest::reduce(oracle::p3().build(), Semiring::gf2).instance;
  auto j = vest::to_json(vest::m_sequence(inst, 2, vest::Method::dedup));
  EXPECT_EQ(j["method"], "dedup");
  EXPECT_EQ(j["instance"], vest::fingerprint(inst));
  ASSERT_EQ(j["values"].size(), 3u);
  EXPECT_EQ(j["values"][2]["k"], 2);
  EXPECT_EQ(j["values"][2]["M"], "6");
}

}  // namespace
