#pragma once

#include <cstddef>
#include <cstdint>

#include "vindex/corpus.hpp"

namespace vindex {

/// Builds a reproducible random corpus for testing and demos.
///
/// Papers "p1".."pN" are generated in order. Each gets 1-4 distinct authors
/// drawn uniformly from "a1".."aM", a venue from "v1".."vK" with
/// K = ceil(M / 5), and between 0 and min(i, 8) references to earlier papers.
/// Each reference targets a paper sharing an author with probability
/// `self_cite_bias` (when such a paper exists) and a uniformly chosen earlier
/// paper otherwise. No self-loops, no duplicate refs.
///
/// The output depends only on the arguments, on every platform. Throws
/// DomainError when n_papers or n_authors is 0 or the bias is outside [0, 1].
Corpus generate_synthetic_corpus(std::uint64_t seed, std::size_t n_papers,
                                 std::size_t n_authors, double self_cite_bias);

}  // namespace vindex
