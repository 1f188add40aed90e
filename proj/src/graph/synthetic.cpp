#include "vindex/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "vindex/error.hpp"

namespace vindex {
namespace {

// std::uniform_*_distribution output is implementation-defined, so the draws
// are done by hand on top of the fully specified mt19937_64 stream.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, n), n > 0, by rejection.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kMaxAuthorsPerPaper = 4;
constexpr std::size_t kMaxRefsPerPaper = 8;
constexpr int kDuplicateRetries = 16;

}  // namespace

Corpus generate_synthetic_corpus(std::uint64_t seed, std::size_t n_papers,
                                 std::size_t n_authors, double self_cite_bias) {
  if (n_papers == 0) throw DomainError("n_papers must be >= 1");
  if (n_authors == 0) throw DomainError("n_authors must be >= 1");
  if (!(self_cite_bias >= 0.0 && self_cite_bias <= 1.0)) {
    throw DomainError("self_cite_bias must lie in [0, 1]");
  }

  Draw draw(seed);
  const std::size_t n_venues = (n_authors + 4) / 5;
  std::vector<Paper> papers(n_papers);
  std::vector<std::vector<std::size_t>> by_author(n_authors);

  for (std::size_t i = 0; i < n_papers; ++i) {
    Paper& paper = papers[i];
    paper.id = "p" + std::to_string(i + 1);

    const std::size_t k = std::min(1 + draw.below(kMaxAuthorsPerPaper), n_authors);
    std::vector<std::size_t> authors;
    while (authors.size() < k) {
      const std::size_t a = draw.below(n_authors);
      if (std::find(authors.begin(), authors.end(), a) == authors.end()) authors.push_back(a);
    }
    for (std::size_t a : authors) paper.authors.push_back("a" + std::to_string(a + 1));
    paper.venue = "v" + std::to_string(draw.below(n_venues) + 1);
    paper.year = 1990 + static_cast<int>(i * 30 / n_papers);

    if (i > 0) {
      std::vector<std::size_t> same_author;
      for (std::size_t a : authors) {
        same_author.insert(same_author.end(), by_author[a].begin(), by_author[a].end());
      }
      std::sort(same_author.begin(), same_author.end());
      same_author.erase(std::unique(same_author.begin(), same_author.end()), same_author.end());

      const std::size_t n_refs = draw.below(std::min(i, kMaxRefsPerPaper) + 1);
      std::unordered_set<std::size_t> cited;
      for (std::size_t r = 0; r < n_refs; ++r) {
        const bool want_self = draw.unit() < self_cite_bias && !same_author.empty();
        for (int attempt = 0; attempt < kDuplicateRetries; ++attempt) {
          const std::size_t target =
              want_self ? same_author[draw.below(same_author.size())] : draw.below(i);
          if (cited.insert(target).second) {
            paper.refs.push_back(papers[target].id);
            break;
          }
        }
      }
    }
    for (std::size_t a : authors) by_author[a].push_back(i);
  }
  return Corpus(std::move(papers));
}

}  // namespace vindex
