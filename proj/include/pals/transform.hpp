#pragma once

#include <cstdint>
#include <vector>

#include "pals/pals.hpp"

namespace pals {

// Turns a heuristic SCS into a heuristic LCS by anchoring the derived
// pattern's literal segments in every sequence and taking the LCS of the
// aligned gap regions; the construction preserves the subsequence contract.
HeuristicResult scs_to_lcs(const Dataset& d, const HeuristicResult& scs,
                           const PalsParams& params = {});

// Mirror image: gap regions get their SCS and the literal anchors stay.
HeuristicResult lcs_to_scs(const Dataset& d, const HeuristicResult& lcs,
                           const PalsParams& params = {});

struct RefinementState {
    HeuristicResult best_lcs;
    HeuristicResult best_scs;
    PatternReport best_patterns;
    std::size_t rounds = 0;
    // (|best_lcs|, |best_scs|) after initialization and after each round.
    std::vector<std::pair<std::size_t, std::size_t>> round_lengths;
    std::vector<std::string> initial_lcs_candidates;
};

// Iterative transformation loop: starts from multi-seeded heuristics, swaps
// LCS<->SCS through patterns, accepts only strict improvements, stops when a
// round improves nothing.
RefinementState refine(const Dataset& d, std::size_t max_rounds, std::size_t candidates,
                       std::uint64_t seed, const PalsParams& params = {});

}  // namespace pals
