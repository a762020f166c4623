#pragma once

#include <string>
#include <vector>

#include "pals/lcs_heuristic.hpp"
#include "pals/metrics.hpp"
#include "pals/scs_heuristic.hpp"
#include "pals/seqcore.hpp"

namespace pals {

struct MappedPattern {
    std::string source_id;
    Pattern pattern;
};

struct PalsParams {
    DepositionParams deposition;
    std::size_t pool_size = 8;
};

// Maps a common subsequence back onto the dataset. Embeddings are leftmost;
// a gap slot gets a wildcard in every mapped pattern when at least one
// sequence has unmatched characters there, so the mapped patterns share one
// star structure and each still matches its source sequence.
std::vector<MappedPattern> patternize_alpha(const Dataset& d, const Sequence& lcs);

// Maps every sequence onto a common supersequence. A supersequence position
// stays literal only when every sequence consumes it; the rest collapse to
// single wildcards.
std::vector<MappedPattern> patternize_beta(const Dataset& d, const Sequence& scs);

// All distinct longest common substrings of the rendered patterns ('*' is an
// ordinary character here), normalized with outer stars, sorted by rendering.
// No common substring at all yields the universal pattern.
std::vector<Pattern> longest_common_substrings(const std::vector<Pattern>& patterns);

PatternReport pals_lcs(const Dataset& d, const PalsParams& params = {});
PatternReport pals_scs(const Dataset& d, const PalsParams& params = {});

// Same pipelines starting from a precomputed heuristic value.
PatternReport pals_lcs_from(const Dataset& d, const Sequence& lcs,
                            const PalsParams& params = {});
PatternReport pals_scs_from(const Dataset& d, const Sequence& scs,
                            const PalsParams& params = {});

}  // namespace pals
