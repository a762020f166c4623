#include "pals/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace pals {

LanguageModel LanguageModel::for_dataset(const Dataset& d) {
    LanguageModel m;
    m.alphabet_size = d.alphabet().size();
    m.avg_seq_len = d.mean_length();
    return m;
}

LanguageModel LanguageModel::with_pattern(const Pattern& p) const {
    LanguageModel m = *this;
    m.literal_count = p.literal_count();
    m.star_count = p.star_count();
    return m;
}

double log10_language_size(const Pattern& p, const LanguageModel& model) {
    const double exponent = model.avg_seq_len - static_cast<double>(p.literal_count());
    if (exponent <= 0.0) return 0.0;  // floor at exact-match size
    return exponent * std::log10(static_cast<double>(model.alphabet_size));
}

double language_size_estimate(const Pattern& p, const LanguageModel& model) {
    return std::pow(10.0, log10_language_size(p, model));
}

double sensitivity(const Dataset& d, const std::vector<Pattern>& patterns) {
    if (d.size() == 0) throw std::invalid_argument("sensitivity: empty dataset");
    std::size_t covered = 0;
    for (const auto& s : d.sequences()) {
        for (const auto& p : patterns) {
            if (pattern_matches(p, s)) {
                ++covered;
                break;
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(d.size());
}

std::size_t support_count(const Dataset& d, const Pattern& p) {
    std::size_t n = 0;
    for (const auto& s : d.sequences()) {
        if (pattern_matches(p, s)) ++n;
    }
    return n;
}

double ls_score(const Dataset& d, const std::vector<Pattern>& patterns,
                const LanguageModel& model) {
    const double covered = sensitivity(d, patterns) * static_cast<double>(d.size());
    if (covered < 0.5) return std::numeric_limits<double>::infinity();

    // log10 of the summed language sizes via log-sum-exp.
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(patterns.size());
    for (const auto& p : patterns) {
        logs.push_back(log10_language_size(p, model));
        max_log = std::max(max_log, logs.back());
    }
    double sum = 0.0;
    for (double lg : logs) sum += std::pow(10.0, lg - max_log);
    const double log_total = max_log + std::log10(sum);
    return log_total - std::log10(covered);
}

std::vector<Pattern> refinement_moves(const Pattern& p) {
    const auto& alphabet = p.alphabet();
    const auto& segs = p.segments();
    std::vector<Pattern> out;
    std::set<std::string> seen{p.render()};

    auto emit = [&](const std::vector<PatternToken>& tokens) {
        Pattern q = Pattern::from_tokens(tokens, alphabet);
        if (seen.insert(q.render()).second) out.push_back(std::move(q));
    };

    // Token view of p: optional leading star, segments with stars between,
    // optional trailing star.
    std::vector<PatternToken> base;
    if (p.leading_star()) base.push_back(PatternToken::star());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i > 0) base.push_back(PatternToken::star());
        base.push_back(PatternToken::text(segs[i]));
    }
    if (p.trailing_star() && !(segs.empty() && p.leading_star())) {
        base.push_back(PatternToken::star());
    }

    for (std::size_t t = 0; t < base.size(); ++t) {
        if (!base[t].is_star) continue;
        // delete the star
        {
            auto tokens = base;
            tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(t));
            emit(tokens);
        }
        for (char c : alphabet.symbols()) {
            auto replaced = base;
            replaced[t] = PatternToken::text(std::string(1, c));
            emit(replaced);

            auto left = base;  // literal grows on the star's left side
            left.insert(left.begin() + static_cast<std::ptrdiff_t>(t),
                        PatternToken::text(std::string(1, c)));
            emit(left);

            auto right = base;
            right.insert(right.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                         PatternToken::text(std::string(1, c)));
            emit(right);
        }
    }

    // Pinned ends can still grow outward.
    if (!segs.empty()) {
        for (char c : alphabet.symbols()) {
            if (!p.leading_star()) {
                auto tokens = base;
                tokens.insert(tokens.begin(), PatternToken::text(std::string(1, c)));
                emit(tokens);
            }
            if (!p.trailing_star()) {
                auto tokens = base;
                tokens.push_back(PatternToken::text(std::string(1, c)));
                emit(tokens);
            }
        }
    }
    return out;
}

bool check_one_step_maximal(const Dataset& d, const Pattern& p) {
    std::vector<bool> covered(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        covered[i] = pattern_matches(p, d.sequences()[i]);
    }
    for (const Pattern& q : refinement_moves(p)) {
        const bool more_specific =
            q.literal_count() > p.literal_count() ||
            (q.literal_count() == p.literal_count() && q.star_count() < p.star_count());
        if (!more_specific) continue;
        bool same_coverage = true;
        for (std::size_t i = 0; i < d.size() && same_coverage; ++i) {
            same_coverage = covered[i] == pattern_matches(q, d.sequences()[i]);
        }
        if (same_coverage) return false;
    }
    return true;
}

}  // namespace pals
