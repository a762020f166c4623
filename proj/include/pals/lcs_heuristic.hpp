#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pals/seqcore.hpp"

namespace pals {

struct DepositionParams {
    std::size_t window = 0;  // 0 = auto: 2 * |alphabet|
    std::uint64_t seed = 0;
    std::size_t max_window_growth = 4;
};

struct HeuristicResult {
    Sequence value;
    std::string algorithm;
    DepositionParams params;
    double elapsed_s = 0.0;
    bool fallback = false;
};

// Character-by-character deposition: at each step pick a symbol visible in
// the lookahead window of every cursor, minimizing total cursor advance
// (ties: smaller max advance, then alphabet order, perturbed when seed != 0).
HeuristicResult deposit_common_subsequence(const Dataset& d,
                                           const DepositionParams& params = {});

// Grows `base` by symbol insertions until no insertion keeps it a common
// subsequence. `base` must itself be a common subsequence.
Sequence extend_to_maximal(const Dataset& d, const Sequence& base);

HeuristicResult heuristic_lcs(const Dataset& d, const DepositionParams& params = {});

// Multi-candidate mode: seeds params.seed .. params.seed + count - 1,
// distinct results only, longest first.
std::vector<HeuristicResult> heuristic_lcs_candidates(const Dataset& d,
                                                      const DepositionParams& params,
                                                      std::size_t count);

}  // namespace pals
