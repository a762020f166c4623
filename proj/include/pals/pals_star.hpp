#pragma once

#include <cstddef>
#include <vector>

#include "pals/metrics.hpp"
#include "pals/pals.hpp"
#include "pals/seqcore.hpp"

namespace pals {

struct StarParams {
    double min_sensitivity = 1.0;  // fraction of sequences a pattern must keep
    std::size_t max_rounds = 64;

    // Support floor m = ceil(min_sensitivity * n), clamped to [1, n].
    std::size_t support_floor(std::size_t n) const;
};

enum class PalsBase { Lcs, Scs };

// Deletes wildcards whose removal keeps the pattern matching at least m
// sequences; sweeps to a fixpoint.
Pattern remove_redundant_stars(const Dataset& d, const Pattern& p, const StarParams& sp);

// Hops single characters across an adjacent wildcard when the displaced
// wildcards collapse (star count drops) and support holds.
Pattern swap_merge_stars(const Dataset& d, const Pattern& p, const StarParams& sp);

// Pattern-driven refinement: greedy descent over single-move
// specializations, keeping support >= m, ranked by model specificity
// (then support, floating form, star count, rendering).
Pattern pd_refine(const Dataset& d, const Pattern& p, const StarParams& sp);

// Full post-processing on top of a PALS run. Each pattern is refined at a
// descending ladder of sensitivity floors down to min_sensitivity and the
// most specific surviving candidate is selected, so reported LS never
// exceeds the plain PALS value and never rises as the floor loosens.
PatternReport pals_star(const Dataset& d, PalsBase base, const StarParams& sp,
                        const PalsParams& params = {});

}  // namespace pals
