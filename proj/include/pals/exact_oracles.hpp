#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pals/seqcore.hpp"

namespace pals {

// Thrown when an exact computation would exceed its enumeration budget.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    std::size_t max_sequences = 4;
    std::size_t max_length = 12;
    std::size_t max_language_len = 20;
};

// Standard pairwise dynamic programs. Witnesses are deterministic: on ties
// the reconstruction prefers a matching step, then advancing in `a`.
std::string exact_lcs_pair(std::string_view a, std::string_view b);
std::string exact_scs_pair(std::string_view a, std::string_view b);

// Exhaustive multi-sequence LCS: enumerates subsequences of the shortest
// input, longest first, in lexicographic position order.
std::string brute_lcs(const Dataset& d, const OracleLimits& limits = {});

// Exact multi-sequence SCS: breadth-first search over the tuple of consumed
// prefix lengths, so the result length is globally minimal.
std::string brute_scs(const Dataset& d, const OracleLimits& limits = {});

// Number of strings of length exactly `len` in L(p), counted on the
// determinized pattern automaton (paths there are distinct strings).
std::uint64_t language_count(const Pattern& p, std::size_t len,
                             const OracleLimits& limits = {});

}  // namespace pals
