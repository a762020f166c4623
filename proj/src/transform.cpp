#include "pals/transform.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace pals {

namespace {

using Clock = std::chrono::steady_clock;

// Pick the anchor pattern: most literals, then lexicographic rendering.
const Pattern& anchor_pattern(const std::vector<Pattern>& patterns) {
    const Pattern* best = &patterns.front();
    for (const auto& p : patterns) {
        if (p.literal_count() > best->literal_count() ||
            (p.literal_count() == best->literal_count() && p.render() < best->render())) {
            best = &p;
        }
    }
    return *best;
}

// Splits every sequence at the pattern's literal anchors. Returns one gap
// dataset per slot (segments + 1 slots), or false when placement fails.
bool split_at_anchors(const Dataset& d, const Pattern& p,
                      std::vector<std::vector<std::string>>& gaps) {
    const std::size_t slots = p.segments().size() + 1;
    gaps.assign(slots, {});
    std::vector<std::pair<std::size_t, std::size_t>> placed;
    for (const auto& s : d.sequences()) {
        if (!pattern_match_positions(p, s.symbols(), placed)) return false;
        std::size_t prev_end = 0;
        for (std::size_t j = 0; j < placed.size(); ++j) {
            gaps[j].push_back(
                s.symbols().substr(prev_end, placed[j].first - prev_end));
            prev_end = placed[j].first + placed[j].second;
        }
        gaps[p.segments().size()].push_back(s.symbols().substr(prev_end));
    }
    return true;
}

}  // namespace

HeuristicResult scs_to_lcs(const Dataset& d, const HeuristicResult& scs,
                           const PalsParams& params) {
    const auto t0 = Clock::now();
    const PatternReport report = pals_scs_from(d, scs.value, params);
    const Pattern& p = anchor_pattern(report.patterns);

    std::vector<std::vector<std::string>> gaps;
    std::string out;
    bool ok = split_at_anchors(d, p, gaps);
    if (ok) {
        for (std::size_t j = 0; j < gaps.size(); ++j) {
            DepositionParams dp = params.deposition;
            dp.seed = params.deposition.seed + j;
            const Dataset gap_set = Dataset::from_strings(d.alphabet(), gaps[j]);
            out += heuristic_lcs(gap_set, dp).value.symbols();
            if (j < p.segments().size()) out += p.segments()[j];
        }
        ok = is_common_subsequence(d, out);
    }
    if (!ok) {
        HeuristicResult direct = heuristic_lcs(d, params.deposition);
        direct.algorithm = "scs-to-lcs";
        direct.fallback = true;
        return direct;
    }
    return {Sequence("", std::move(out), d.alphabet()), "scs-to-lcs", params.deposition,
            std::chrono::duration<double>(Clock::now() - t0).count(), false};
}

HeuristicResult lcs_to_scs(const Dataset& d, const HeuristicResult& lcs,
                           const PalsParams& params) {
    const auto t0 = Clock::now();
    const PatternReport report = pals_lcs_from(d, lcs.value, params);
    const Pattern& p = anchor_pattern(report.patterns);

    std::vector<std::vector<std::string>> gaps;
    std::string out;
    bool ok = split_at_anchors(d, p, gaps);
    if (ok) {
        for (std::size_t j = 0; j < gaps.size(); ++j) {
            const Dataset gap_set = Dataset::from_strings(d.alphabet(), gaps[j]);
            out += heuristic_scs(gap_set, params.pool_size,
                                 params.deposition.seed + j)
                       .value.symbols();
            if (j < p.segments().size()) out += p.segments()[j];
        }
        ok = is_common_supersequence(d, out);
    }
    if (!ok) {
        HeuristicResult direct = heuristic_scs(d, params.pool_size, params.deposition.seed);
        direct.algorithm = "lcs-to-scs";
        direct.fallback = true;
        return direct;
    }
    return {Sequence("", std::move(out), d.alphabet()), "lcs-to-scs", params.deposition,
            std::chrono::duration<double>(Clock::now() - t0).count(), false};
}

RefinementState refine(const Dataset& d, std::size_t max_rounds, std::size_t candidates,
                       std::uint64_t seed, const PalsParams& params) {
    if (max_rounds < 1) throw std::invalid_argument("refine: max_rounds must be >= 1");
    if (candidates < 1) throw std::invalid_argument("refine: candidates must be >= 1");

    DepositionParams dp = params.deposition;
    dp.seed = seed;
    auto lcs_cands = heuristic_lcs_candidates(d, dp, candidates);

    RefinementState state{lcs_cands.front(),
                          heuristic_scs(d, params.pool_size, seed),
                          {},
                          0,
                          {},
                          {}};
    for (const auto& c : lcs_cands) state.initial_lcs_candidates.push_back(c.value.symbols());
    for (std::size_t i = 1; i < candidates; ++i) {
        HeuristicResult scs = heuristic_scs(d, params.pool_size, seed + i);
        if (scs.value.length() < state.best_scs.value.length() ||
            (scs.value.length() == state.best_scs.value.length() &&
             scs.value.symbols() < state.best_scs.value.symbols())) {
            state.best_scs = std::move(scs);
        }
    }

    PalsParams pp = params;
    pp.deposition.seed = seed;
    state.best_patterns = pals_lcs_from(d, state.best_lcs.value, pp);
    {
        PatternReport scs_report = pals_scs_from(d, state.best_scs.value, pp);
        if (scs_report.ls < state.best_patterns.ls &&
            scs_report.sensitivity >= state.best_patterns.sensitivity) {
            state.best_patterns = std::move(scs_report);
        }
    }
    state.round_lengths.emplace_back(state.best_lcs.value.length(),
                                     state.best_scs.value.length());

    for (std::size_t round = 1; round <= max_rounds; ++round) {
        state.rounds = round;
        bool improved = false;

        HeuristicResult lcs_cand = scs_to_lcs(d, state.best_scs, pp);
        HeuristicResult scs_cand = lcs_to_scs(d, state.best_lcs, pp);

        if (lcs_cand.value.length() > state.best_lcs.value.length()) {
            state.best_lcs = std::move(lcs_cand);
            improved = true;
        }
        if (scs_cand.value.length() < state.best_scs.value.length()) {
            state.best_scs = std::move(scs_cand);
            improved = true;
        }
        PatternReport pat_lcs = pals_lcs_from(d, state.best_lcs.value, pp);
        PatternReport pat_scs = pals_scs_from(d, state.best_scs.value, pp);
        for (PatternReport* cand : {&pat_lcs, &pat_scs}) {
            if (cand->ls < state.best_patterns.ls &&
                cand->sensitivity >= state.best_patterns.sensitivity) {
                state.best_patterns = std::move(*cand);
                improved = true;
            }
        }

        state.round_lengths.emplace_back(state.best_lcs.value.length(),
                                         state.best_scs.value.length());
        if (!improved) break;
    }
    return state;
}

}  // namespace pals
