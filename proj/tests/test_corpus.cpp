#include <gtest/gtest.h>

#include <sstream>

#include "vindex/corpus.hpp"
#include "vindex/error.hpp"
#include "vindex/synthetic.hpp"

namespace vindex {
namespace {

Corpus ingest_text(const std::string& text, IngestStats* stats = nullptr) {
  std::istringstream in(text);
  return ingest_corpus(in, stats);
}

TEST(Ingest, MinimalCorpus) {
  const Corpus c = ingest_text(
      R"({"id": "p1", "authors": ["a"], "refs": []})"
      "\n"
      R"({"id": "p2", "authors": ["b"], "refs": ["p1"]})"
      "\n");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.dangling_refs(), 0u);
  EXPECT_EQ(c.citers()[0], std::vector<std::size_t>{1});
  EXPECT_TRUE(c.citers()[1].empty());
}

TEST(Ingest, OptionalFieldsAndFieldOrder) {
  const Corpus c = ingest_text(
      R"({"refs": ["p0"], "year": 2005, "venue": "v1", "authors": ["a1","a2"], "id": "p1"})");
  const Paper& p = c.at("p1");
  EXPECT_EQ(p.authors, (std::vector<std::string>{"a1", "a2"}));
  EXPECT_EQ(p.venue, "v1");
  EXPECT_EQ(p.year, 2005);
  EXPECT_EQ(c.dangling_refs(), 1u);

  const Corpus bare = ingest_text(R"({"id": "q", "authors": []})");
  EXPECT_FALSE(bare.at("q").venue.has_value());
  EXPECT_TRUE(bare.at("q").refs.empty());
}

TEST(Ingest, DanglingRefsAreCountedNotCited) {
  const Corpus c = ingest_text(
      R"({"id": "p1", "authors": ["a"]})"
      "\n"
      R"({"id": "p2", "authors": ["b"], "refs": ["p1", "px"]})");
  EXPECT_EQ(c.dangling_refs(), 1u);
  EXPECT_EQ(c.citers()[0].size(), 1u);
}

TEST(Ingest, ForwardReferencesResolve) {
  const Corpus c = ingest_text(
      R"({"id": "p1", "authors": ["a"], "refs": ["p2"]})"
      "\n"
      R"({"id": "p2", "authors": ["b"]})");
  EXPECT_EQ(c.dangling_refs(), 0u);
  EXPECT_EQ(c.citers()[1], std::vector<std::size_t>{0});
}

TEST(Ingest, DuplicateIdIsIntegrityError) {
  try {
    ingest_text(R"({"id": "p1", "authors": ["a"]})"
                "\n"
                R"({"id": "p1", "authors": ["b"]})");
    FAIL() << "expected IntegrityError";
  } catch (const IntegrityError& e) {
    EXPECT_NE(std::string(e.what()).find("p1"), std::string::npos);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Ingest, MalformedRecordsReportLine) {
  const std::string good = R"({"id": "ok", "authors": ["a"]})";
  for (const std::string& bad : {
           std::string(R"({"authors": ["a"]})"),
           std::string(R"({"id": "x"})"),
           std::string(R"({"id": 3, "authors": ["a"]})"),
           std::string(R"({"id": "x", "authors": "a"})"),
           std::string(R"({"id": "x", "authors": [1]})"),
           std::string(R"({"id": "x", "authors": [], "year": "2001"})"),
           std::string(R"({"id": "x", "authors": [], "refs": [null]})"),
           std::string(R"({"id": "", "authors": []})"),
           std::string(R"(["not", "an", "object"])"),
           std::string(R"({"id": "x", "authors": [)"),
       }) {
    try {
      ingest_text(good + "\n\n" + bad + "\n");
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 3u) << bad;
    }
  }
}

TEST(Ingest, StripsSelfLoopsAndDuplicateRefs) {
  IngestStats stats;
  const Corpus c = ingest_text(
      R"({"id": "p1", "authors": ["a", "a"]})"
      "\n"
      R"({"id": "p2", "authors": ["b"], "refs": ["p2", "p1", "p1"]})",
      &stats);
  EXPECT_EQ(c.at("p2").refs, std::vector<std::string>{"p1"});
  EXPECT_EQ(c.at("p1").authors, std::vector<std::string>{"a"});
  EXPECT_EQ(stats.self_loops_stripped, 1u);
  EXPECT_EQ(stats.duplicate_refs_collapsed, 1u);
  EXPECT_EQ(stats.duplicate_authors_collapsed, 1u);
  EXPECT_EQ(c.citers()[0].size(), 1u);
}

TEST(Corpus, LookupOfUnknownIdThrows) {
  const Corpus c = ingest_text(R"({"id": "p1", "authors": ["a"]})");
  EXPECT_THROW(c.at("zz"), LookupError);
  EXPECT_FALSE(c.find("zz").has_value());
}

TEST(Serialize, KeyOrderAndOmittedOptionals) {
  const Corpus c = ingest_text(R"({"refs": ["x"], "authors": ["a"], "id": "p1", "year": 1999})");
  std::ostringstream out;
  serialize_corpus(c, out);
  EXPECT_EQ(out.str(), R"({"id":"p1","authors":["a"],"year":1999,"refs":["x"]})"
                       "\n");
}

TEST(Serialize, IngestOfSerializationIsIdentity) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Corpus original = generate_synthetic_corpus(seed, 5 + seed * 3, 2 + seed % 9, 0.5);
    std::stringstream buffer;
    serialize_corpus(original, buffer);
    const Corpus again = ingest_corpus(buffer);
    ASSERT_EQ(again, original) << "seed " << seed;
    ASSERT_EQ(again.citers(), original.citers());
  }
}

TEST(Validate, CleanCorpus) {
  std::istringstream in(R"({"id": "p1", "authors": ["a"], "venue": "v"})"
                        "\n"
                        R"({"id": "p2", "authors": ["b"], "venue": "v", "refs": ["p1"]})");
  const auto rep = validate_corpus(in, true);
  EXPECT_EQ(rep.errors(), 0u);
  EXPECT_EQ(rep.warnings(), 0u);
}

TEST(Validate, CollectsEveryProblem) {
  std::istringstream in(R"({"id": "p1", "authors": ["a"]})"
                        "\n"
                        R"({"id": "p1", "authors": ["b"]})"
                        "\n"
                        R"({"id": "p2", "authors": ["b"], "refs": ["p2", "px", "p1", "p1"]})"
                        "\n"
                        R"({"id": "p3"})");
  const auto rep = validate_corpus(in, true);
  EXPECT_EQ(rep.errors(), 2u);    // duplicate id, missing authors
  // self-loop, dangling, duplicate ref, and two papers without venue
  EXPECT_EQ(rep.warnings(), 5u);
  ASSERT_FALSE(rep.diagnostics.empty());
  EXPECT_EQ(rep.diagnostics.front().line, 1u);
}

}  // namespace
}  // namespace vindex
