#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pals/lcs_heuristic.hpp"
#include "pals/seqcore.hpp"

namespace pals {

struct TemplateEntry {
    Sequence value;
    std::string provenance;
};

struct TemplatePool {
    std::vector<TemplateEntry> templates;
};

// |Sigma|-approximation: the alphabet string repeated max-length times.
Sequence alphabet_supersequence(const Dataset& d);

// Character-by-character merges. SH emits the symbol matched by the most
// fronts; MH follows the front of the longest remaining sequence.
Sequence sum_height_merge(const Dataset& d);
Sequence min_height_merge(const Dataset& d);

// Deletes characters left to right while the remainder stays a common
// supersequence; the result is 1-minimal.
Sequence reduce_template(const Dataset& d, const Sequence& t);

TemplatePool build_template_pool(const Dataset& d, std::size_t pool_size,
                                 std::uint64_t seed);

// Deposition-and-Reduction: reduce every pool template, keep the shortest
// (ties: lexicographic).
HeuristicResult heuristic_scs(const Dataset& d, std::size_t pool_size = 8,
                              std::uint64_t seed = 0);

}  // namespace pals
