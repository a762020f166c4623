#include "pals/pals_star.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace pals {

namespace {

std::string star_late_key(const Pattern& p) {
    // Lexicographic key that ranks '*' behind every literal, so floating
    // forms do not win ties merely because '*' has a small code point.
    std::string key = p.render();
    for (char& c : key) {
        if (c == kWildcard) c = '\x7f';
    }
    return key;
}

struct RefineKey {
    double log_size;
    bool floating;
    std::size_t stars;
    std::size_t support;
    std::string lex;

    static RefineKey of(const Dataset& d, const Pattern& p, const LanguageModel& model) {
        return {log10_language_size(p, model), p.is_floating(), p.star_count(),
                support_count(d, p), star_late_key(p)};
    }

    bool better_than(const RefineKey& o) const {
        constexpr double eps = 1e-12;
        if (log_size < o.log_size - eps) return true;
        if (log_size > o.log_size + eps) return false;
        if (floating != o.floating) return floating;
        if (stars != o.stars) return stars < o.stars;
        if (support != o.support) return support > o.support;
        return lex < o.lex;
    }
};

// Final selection ranks by the per-pattern score itself (ties: fewer stars,
// higher support), so the winner is never worse than the pattern it started
// from and identical sequences end up with their bare literal.
struct SelectKey {
    double ls;
    std::size_t stars;
    std::size_t support;
    std::string lex;

    static SelectKey of(const Dataset& d, const Pattern& p, const LanguageModel& model) {
        const std::size_t support = support_count(d, p);
        const double ls = support == 0
                              ? std::numeric_limits<double>::infinity()
                              : log10_language_size(p, model) -
                                    std::log10(static_cast<double>(support));
        return {ls, p.star_count(), support, star_late_key(p)};
    }

    bool better_than(const SelectKey& o) const {
        constexpr double eps = 1e-12;
        if (ls < o.ls - eps) return true;
        if (ls > o.ls + eps) return false;
        if (stars != o.stars) return stars < o.stars;
        if (support != o.support) return support > o.support;
        return lex < o.lex;
    }
};

std::vector<PatternToken> tokens_of(const Pattern& p) {
    std::vector<PatternToken> tokens;
    if (p.leading_star()) tokens.push_back(PatternToken::star());
    const auto& segs = p.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i > 0) tokens.push_back(PatternToken::star());
        tokens.push_back(PatternToken::text(segs[i]));
    }
    if (p.trailing_star() && !(segs.empty() && p.leading_star())) {
        tokens.push_back(PatternToken::star());
    }
    return tokens;
}

}  // namespace

std::size_t StarParams::support_floor(std::size_t n) const {
    if (!(min_sensitivity > 0.0) || min_sensitivity > 1.0) {
        throw std::invalid_argument("min_sensitivity must be in (0, 1]");
    }
    const double raw = min_sensitivity * static_cast<double>(n);
    auto m = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    return std::clamp<std::size_t>(m, 1, n);
}

Pattern remove_redundant_stars(const Dataset& d, const Pattern& p, const StarParams& sp) {
    const std::size_t m = sp.support_floor(d.size());
    Pattern cur = p;
    bool changed = true;
    while (changed) {
        changed = false;
        auto tokens = tokens_of(cur);
        for (std::size_t t = 0; t < tokens.size(); ++t) {
            if (!tokens[t].is_star) continue;
            auto trial = tokens;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(t));
            Pattern q = Pattern::from_tokens(trial, cur.alphabet());
            if (support_count(d, q) >= m) {
                cur = std::move(q);
                tokens = std::move(trial);
                changed = true;
                --t;  // the next token shifted into this slot
            }
        }
    }
    return cur;
}

Pattern swap_merge_stars(const Dataset& d, const Pattern& p, const StarParams& sp) {
    const std::size_t m = sp.support_floor(d.size());
    Pattern cur = p;
    bool changed = true;
    while (changed) {
        changed = false;
        auto tokens = tokens_of(cur);
        for (std::size_t t = 1; t + 1 < tokens.size(); ++t) {
            if (tokens[t].is_star || tokens[t].literal.size() != 1) continue;
            if (!tokens[t - 1].is_star || !tokens[t + 1].is_star) continue;
            // *x* -> x* (hop left) or *x (hop right); either way the two
            // wildcards collapse into one.
            auto hop = [&](bool left) {
                auto trial = tokens;
                PatternToken ch = trial[t];
                trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(t));
                const std::size_t star = left ? t - 1 : t;  // surviving star index
                if (left) {
                    trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(star), ch);
                } else {
                    trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(star) + 1, ch);
                }
                return Pattern::from_tokens(trial, cur.alphabet());
            };
            for (bool left : {true, false}) {
                Pattern q = hop(left);
                if (q.star_count() < cur.star_count() && support_count(d, q) >= m) {
                    cur = std::move(q);
                    changed = true;
                    break;
                }
            }
            if (changed) break;  // token indices are stale now; restart sweep
        }
    }
    return cur;
}

Pattern pd_refine(const Dataset& d, const Pattern& p, const StarParams& sp) {
    const std::size_t m = sp.support_floor(d.size());
    const LanguageModel model = LanguageModel::for_dataset(d);

    Pattern cur = p;
    RefineKey cur_key = RefineKey::of(d, cur, model);
    for (std::size_t round = 0; round < sp.max_rounds; ++round) {
        const Pattern* best = nullptr;
        RefineKey best_key{};
        std::vector<Pattern> moves = refinement_moves(cur);
        for (const Pattern& q : moves) {
            const std::size_t sup = support_count(d, q);
            if (sup < m) continue;
            RefineKey key = RefineKey::of(d, q, model);
            if (best == nullptr || key.better_than(best_key)) {
                best = &q;
                best_key = std::move(key);
            }
        }
        if (best == nullptr || !best_key.better_than(cur_key)) break;
        cur = *best;
        cur_key = std::move(best_key);
    }
    return cur;
}

PatternReport pals_star(const Dataset& d, PalsBase base, const StarParams& sp,
                        const PalsParams& params) {
    const auto t0 = std::chrono::steady_clock::now();
    PatternReport seed =
        base == PalsBase::Lcs ? pals_lcs(d, params) : pals_scs(d, params);

    // Floors descend from 1.0 in steps of 0.1 down to the requested
    // minimum, deduplicated by the support count they induce. A looser
    // request only ever adds candidates, which keeps LS monotone in the
    // floor and never above the plain PALS score.
    std::vector<std::size_t> floors;
    for (double f = 1.0; f > sp.min_sensitivity + 1e-9; f -= 0.1) {
        floors.push_back(StarParams{f, sp.max_rounds}.support_floor(d.size()));
    }
    floors.push_back(sp.support_floor(d.size()));
    std::sort(floors.begin(), floors.end(), std::greater<>());
    floors.erase(std::unique(floors.begin(), floors.end()), floors.end());

    const LanguageModel model = LanguageModel::for_dataset(d);
    std::vector<Pattern> refined;
    std::set<std::string> seen;
    for (const Pattern& p : seed.patterns) {
        Pattern best = p;
        SelectKey best_key = SelectKey::of(d, best, model);
        for (std::size_t m : floors) {
            StarParams sub = sp;
            sub.min_sensitivity =
                static_cast<double>(m) / static_cast<double>(d.size());
            Pattern q = remove_redundant_stars(d, p, sub);
            q = swap_merge_stars(d, q, sub);
            q = pd_refine(d, q, sub);
            SelectKey key = SelectKey::of(d, q, model);
            if (key.better_than(best_key)) {
                best = std::move(q);
                best_key = std::move(key);
            }
        }
        if (seen.insert(best.render()).second) refined.push_back(std::move(best));
    }

    PatternReport r;
    r.patterns = std::move(refined);
    r.algorithm = base == PalsBase::Lcs ? "pals*-lcs" : "pals*-scs";
    r.source_value = seed.source_value;
    r.sensitivity = sensitivity(d, r.patterns);
    r.ls = ls_score(d, r.patterns, model);
    r.support = d.size();
    for (const auto& p : r.patterns) r.support = std::min(r.support, support_count(d, p));
    r.phase_s = seed.phase_s;
    r.phase_s["post_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() -
        seed.elapsed_s;
    r.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace pals
