#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "vindex/citation_graph.hpp"
#include "vindex/error.hpp"
#include "vindex/synthetic.hpp"

namespace vindex {
namespace {

Paper paper(std::string id, std::vector<std::string> authors, std::vector<std::string> refs = {},
            std::optional<std::string> venue = std::nullopt) {
  Paper p;
  p.id = std::move(id);
  p.authors = std::move(authors);
  p.refs = std::move(refs);
  p.venue = std::move(venue);
  return p;
}

TEST(Classify, AuthorIntersection) {
  const Corpus c({paper("q", {"B", "C"}), paper("p", {"A", "B"}, {"q"}),
                  paper("r", {"A"}, {"q"})});
  const auto self = classify_citation(c, "p", "q", EntityMode::author);
  EXPECT_TRUE(self.is_self());
  EXPECT_EQ(self.citing, "p");
  EXPECT_EQ(self.cited, "q");
  EXPECT_FALSE(classify_citation(c, "r", "q", EntityMode::author).is_self());
}

TEST(Classify, JournalVenues) {
  const Corpus c({paper("q", {"x"}, {}, "J1"), paper("p", {"y"}, {"q"}, "J1"),
                  paper("r", {"z"}, {"q"}, "J2"), paper("s", {"w"}, {"q"})});
  EXPECT_TRUE(classify_citation(c, "p", "q", EntityMode::journal).is_self());
  EXPECT_FALSE(classify_citation(c, "r", "q", EntityMode::journal).is_self());
  const auto missing = classify_citation(c, "s", "q", EntityMode::journal);
  EXPECT_FALSE(missing.is_self());
  EXPECT_TRUE(missing.missing_venue);
  EXPECT_FALSE(classify_citation(c, "s", "q", EntityMode::author).missing_venue);
}

TEST(Classify, LookupErrors) {
  const Corpus c({paper("q", {"B"}), paper("p", {"A"}, {"q", "gone"})});
  EXPECT_THROW(classify_citation(c, "nope", "q", EntityMode::author), LookupError);
  EXPECT_THROW(classify_citation(c, "p", "gone", EntityMode::author), LookupError);
  EXPECT_THROW(classify_citation(c, "q", "p", EntityMode::author), LookupError);  // no such edge
}

TEST(Classify, IsPureFunctionOfPapers) {
  const Corpus c = generate_synthetic_corpus(5, 80, 10, 0.5);
  for (const auto& p : c.papers()) {
    for (const auto& r : p.refs) {
      for (auto mode : {EntityMode::author, EntityMode::journal}) {
        ASSERT_EQ(classify_citation(c, p.id, r, mode), classify_citation(c, p.id, r, mode));
      }
    }
  }
}

TEST(Aggregate, SingleGenuineCitation) {
  const Corpus c({paper("p1", {"X"}), paper("p2", {"Y"}, {"p1"})});
  const auto a = aggregate_entity(c, "X", EntityMode::author);
  EXPECT_EQ(a.cd, 1u);
  EXPECT_EQ(a.c, 1u);
  EXPECT_EQ(a.sc, 0u);
  EXPECT_EQ(a.h, 1u);
  EXPECT_EQ(a.h_star, 1u);
}

TEST(Aggregate, PureSelfCitationCollapsesHStar) {
  const Corpus c({paper("p1", {"X"}), paper("p2", {"X"}, {"p1"})});
  const auto a = aggregate_entity(c, "X", EntityMode::author);
  ASSERT_EQ(a.per_paper.size(), 2u);
  EXPECT_EQ(a.per_paper[0], (PaperCitations{"p1", 1, 1}));
  EXPECT_EQ(a.h, 1u);
  EXPECT_EQ(a.h_star, 0u);
}

TEST(Aggregate, SelfCitationViaCoauthorCountsForEveryOwner) {
  // p cites q; they share Y only. The edge is a self-citation, and it is
  // counted in X's aggregate too because X owns q.
  const Corpus c({paper("q", {"X", "Y"}), paper("p", {"Y"}, {"q"})});
  EXPECT_EQ(aggregate_entity(c, "X", EntityMode::author).sc, 1u);
  EXPECT_EQ(aggregate_entity(c, "Y", EntityMode::author).sc, 1u);
}

TEST(Aggregate, UnknownEntity) {
  const Corpus c({paper("p1", {"X"}, {}, "J")});
  EXPECT_THROW(aggregate_entity(c, "Z", EntityMode::author), LookupError);
  EXPECT_THROW(aggregate_entity(c, "X", EntityMode::journal), LookupError);
}

TEST(AggregateAll, EmptyCorpus) {
  EXPECT_TRUE(aggregate_all(Corpus{}, EntityMode::author).empty());
  EXPECT_TRUE(aggregate_all(Corpus{}, EntityMode::journal).empty());
}

TEST(AggregateAll, MatchesSingleEntityCalls) {
  const Corpus c({paper("p1", {"B"}), paper("p2", {"A"}, {"p1"})});
  const auto all = aggregate_all(c, EntityMode::author);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].entity_id, "A");
  EXPECT_EQ(all[1].entity_id, "B");
  EXPECT_EQ(all[0], aggregate_entity(c, "A", EntityMode::author));
  EXPECT_EQ(all[1], aggregate_entity(c, "B", EntityMode::author));

  const Corpus big = generate_synthetic_corpus(3, 120, 15, 0.6);
  for (auto mode : {EntityMode::author, EntityMode::journal}) {
    for (const auto& a : aggregate_all(big, mode)) {
      ASSERT_EQ(a, aggregate_entity(big, a.entity_id, mode));
    }
  }
}

TEST(AggregateAll, InvariantsAndSelfEdgeLowerBound) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Corpus c = generate_synthetic_corpus(seed, 60, 8, 0.5);
    const auto all = aggregate_all(c, EntityMode::author);
    Count total_sc = 0;
    for (const auto& a : all) {
      Count c_sum = 0, sc_sum = 0;
      for (const auto& p : a.per_paper) {
        ASSERT_LE(p.self_citations_received, p.citations_received);
        c_sum += p.citations_received;
        sc_sum += p.self_citations_received;
      }
      ASSERT_EQ(a.c, c_sum);
      ASSERT_EQ(a.sc, sc_sum);
      ASSERT_LE(a.h_star, a.h);
      total_sc += a.sc;
    }
    const auto self_edges = oracle::count_self_edges(c.papers(), oracle::authors_intersect);
    ASSERT_GE(total_sc, self_edges);
    ASSERT_EQ(summarize_edges(c, EntityMode::author).self_edges, self_edges);
  }
}

TEST(AggregateEntity, HStarMatchesFilteredGraphOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Corpus c = generate_synthetic_corpus(rng(), 50, 2 + rng() % 12, (rng() % 11) / 10.0);
    const auto filtered = oracle::drop_self_edges(c.papers(), oracle::authors_intersect);
    for (const auto& a : aggregate_all(c, EntityMode::author)) {
      auto owns = [&](const Paper& p) {
        return std::find(p.authors.begin(), p.authors.end(), a.entity_id) != p.authors.end();
      };
      ASSERT_EQ(a.h, oracle::entity_h(c.papers(), owns));
      ASSERT_EQ(a.h_star, oracle::entity_h(filtered, owns)) << a.entity_id;
    }
  }
}

TEST(SummarizeEdges, JournalModeCountsMissingVenues) {
  const Corpus c({paper("q", {"x"}, {}, "J1"), paper("p", {"y"}, {"q"}, "J1"),
                  paper("s", {"w"}, {"q"})});
  const auto s = summarize_edges(c, EntityMode::journal);
  EXPECT_EQ(s.edges, 2u);
  EXPECT_EQ(s.self_edges, 1u);
  EXPECT_EQ(s.missing_venue, 1u);
  EXPECT_DOUBLE_EQ(s.self_fraction(), 0.5);
}

TEST(EntityMode, Parsing) {
  EXPECT_EQ(parse_entity_mode("author"), EntityMode::author);
  EXPECT_EQ(parse_entity_mode("journal"), EntityMode::journal);
  EXPECT_THROW(parse_entity_mode("country"), ParseError);
}

}  // namespace
}  // namespace vindex
