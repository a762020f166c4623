#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pals/seqcore.hpp"

namespace pals {

// Parameters of the language-size model: estimate = |Sigma|^(l - p) where l
// is the mean sequence length and p the pattern's literal count. q is carried
// for reporting only; the model ignores it.
struct LanguageModel {
    std::size_t alphabet_size = 1;
    double avg_seq_len = 0.0;
    std::size_t literal_count = 0;  // p
    std::size_t star_count = 0;     // q

    static LanguageModel for_dataset(const Dataset& d);
    LanguageModel with_pattern(const Pattern& p) const;
};

// log10 of the model estimate; floored at 0 when the pattern is longer than
// the average sequence.
double log10_language_size(const Pattern& p, const LanguageModel& model);
double language_size_estimate(const Pattern& p, const LanguageModel& model);

struct PatternReport {
    std::vector<Pattern> patterns;
    double sensitivity = 0.0;
    double ls = 0.0;
    std::size_t support = 0;
    double elapsed_s = 0.0;
    std::string algorithm;
    std::string source_value;  // heuristic LCS/SCS the patterns came from
    std::map<std::string, double> phase_s;
};

double sensitivity(const Dataset& d, const std::vector<Pattern>& patterns);
std::size_t support_count(const Dataset& d, const Pattern& p);

// LS = -log10(covered / sum of estimated language sizes), in log domain.
// Zero coverage reports +infinity.
double ls_score(const Dataset& d, const std::vector<Pattern>& patterns,
                const LanguageModel& model);

// Single-move specializations used by pattern-driven refinement: replace a
// star with a literal, grow a segment edge across a star boundary, extend a
// pinned end, or delete a star. Deduplicated, no-ops removed.
std::vector<Pattern> refinement_moves(const Pattern& p);

// True when no single refinement move is strictly more specific while
// covering exactly the same sequences.
bool check_one_step_maximal(const Dataset& d, const Pattern& p);

}  // namespace pals
