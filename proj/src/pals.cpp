#include "pals/pals.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pals {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::size_t> leftmost_embedding(std::string_view needle, std::string_view hay) {
    std::vector<std::size_t> positions;
    positions.reserve(needle.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < needle.size(); ++i) {
        while (j < hay.size() && hay[j] != needle[i]) ++j;
        if (j == hay.size()) return {};
        positions.push_back(j++);
    }
    return positions;
}

PatternReport finish_report(const Dataset& d, std::vector<Pattern> patterns,
                            std::string algorithm, std::string source_value,
                            Clock::time_point t0, std::map<std::string, double> phases) {
    PatternReport r;
    r.patterns = std::move(patterns);
    r.algorithm = std::move(algorithm);
    r.source_value = std::move(source_value);
    r.sensitivity = sensitivity(d, r.patterns);
    r.ls = ls_score(d, r.patterns, LanguageModel::for_dataset(d));
    r.support = d.size();
    for (const auto& p : r.patterns) {
        r.support = std::min(r.support, support_count(d, p));
    }
    r.phase_s = std::move(phases);
    r.elapsed_s = seconds_since(t0);
    return r;
}

}  // namespace

std::vector<MappedPattern> patternize_alpha(const Dataset& d, const Sequence& lcs) {
    const std::string& core = lcs.symbols();
    std::vector<std::vector<std::size_t>> embeddings;
    embeddings.reserve(d.size());
    for (const auto& s : d.sequences()) {
        auto pos = leftmost_embedding(core, s.symbols());
        if (core.size() > 0 && pos.empty()) {
            throw std::invalid_argument("patternize_alpha: value is not a common subsequence");
        }
        embeddings.push_back(std::move(pos));
    }

    // Gap slot j sits before core[j]; slot |core| trails the last character.
    std::vector<bool> starred(core.size() + 1, false);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& pos = embeddings[i];
        const std::size_t len = d.sequences()[i].length();
        for (std::size_t j = 0; j <= core.size(); ++j) {
            const std::size_t lo = (j == 0) ? 0 : pos[j - 1] + 1;
            const std::size_t hi = (j == core.size()) ? len : pos[j];
            if (hi > lo) starred[j] = true;
        }
    }

    std::vector<PatternToken> tokens;
    for (std::size_t j = 0; j < core.size(); ++j) {
        if (starred[j]) tokens.push_back(PatternToken::star());
        tokens.push_back(PatternToken::text(std::string(1, core[j])));
    }
    if (starred[core.size()]) tokens.push_back(PatternToken::star());
    const Pattern shared = Pattern::from_tokens(tokens, d.alphabet());

    std::vector<MappedPattern> out;
    out.reserve(d.size());
    for (const auto& s : d.sequences()) out.push_back({s.id(), shared});
    return out;
}

std::vector<MappedPattern> patternize_beta(const Dataset& d, const Sequence& scs) {
    const std::string& super = scs.symbols();
    std::vector<bool> common(super.size(), true);
    for (const auto& s : d.sequences()) {
        auto pos = leftmost_embedding(s.symbols(), super);
        if (s.length() > 0 && pos.empty()) {
            throw std::invalid_argument("patternize_beta: value is not a common supersequence");
        }
        std::vector<bool> matched(super.size(), false);
        for (std::size_t p : pos) matched[p] = true;
        for (std::size_t j = 0; j < super.size(); ++j) {
            if (!matched[j]) common[j] = false;
        }
    }

    std::vector<PatternToken> tokens;
    for (std::size_t j = 0; j < super.size(); ++j) {
        if (common[j]) {
            tokens.push_back(PatternToken::text(std::string(1, super[j])));
        } else {
            tokens.push_back(PatternToken::star());
        }
    }
    const Pattern shared = Pattern::from_tokens(tokens, d.alphabet());

    std::vector<MappedPattern> out;
    out.reserve(d.size());
    for (const auto& s : d.sequences()) out.push_back({s.id(), shared});
    return out;
}

std::vector<Pattern> longest_common_substrings(const std::vector<Pattern>& patterns) {
    if (patterns.empty()) {
        throw std::invalid_argument("longest_common_substrings: no patterns");
    }
    const Alphabet alphabet = patterns.front().alphabet();

    std::vector<std::string> rendered;
    rendered.reserve(patterns.size());
    for (const auto& p : patterns) rendered.push_back(p.render());

    std::size_t shortest = 0;
    bool all_equal = true;
    for (std::size_t i = 0; i < rendered.size(); ++i) {
        if (rendered[i].size() < rendered[shortest].size()) shortest = i;
        all_equal = all_equal && rendered[i] == rendered.front();
    }

    std::vector<std::string> found;
    if (all_equal && !rendered.front().empty()) {
        found.push_back(rendered.front());
    } else {
        const std::string& base = rendered[shortest];
        for (std::size_t len = base.size(); len > 0 && found.empty(); --len) {
            std::unordered_set<std::string> tried;
            for (std::size_t start = 0; start + len <= base.size(); ++start) {
                std::string cand = base.substr(start, len);
                if (!tried.insert(cand).second) continue;
                bool everywhere = true;
                for (const auto& r : rendered) {
                    if (r.find(cand) == std::string::npos) {
                        everywhere = false;
                        break;
                    }
                }
                if (everywhere) found.push_back(std::move(cand));
            }
        }
    }

    std::set<std::string> renders;
    std::vector<Pattern> out;
    if (found.empty()) {
        out.push_back(Pattern::universal(alphabet));
        return out;
    }
    for (const auto& text : found) {
        Pattern p = normalize(Pattern::parse(text, alphabet), NormalizeMode::FinalOutput);
        if (renders.insert(p.render()).second) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const Pattern& a, const Pattern& b) { return a.render() < b.render(); });
    return out;
}

PatternReport pals_lcs_from(const Dataset& d, const Sequence& lcs, const PalsParams&) {
    const auto t0 = Clock::now();
    std::map<std::string, double> phases;
    phases["heuristic_s"] = 0.0;

    auto t1 = Clock::now();
    auto mapped = patternize_alpha(d, lcs);
    phases["patternize_s"] = seconds_since(t1);

    t1 = Clock::now();
    std::vector<Pattern> raw;
    raw.reserve(mapped.size());
    for (auto& m : mapped) raw.push_back(std::move(m.pattern));
    auto patterns = longest_common_substrings(raw);
    phases["substring_s"] = seconds_since(t1);

    return finish_report(d, std::move(patterns), "pals-lcs", lcs.symbols(), t0,
                         std::move(phases));
}

PatternReport pals_lcs(const Dataset& d, const PalsParams& params) {
    const auto t0 = Clock::now();
    HeuristicResult h = heuristic_lcs(d, params.deposition);
    PatternReport r = pals_lcs_from(d, h.value, params);
    r.phase_s["heuristic_s"] = h.elapsed_s;
    r.elapsed_s = seconds_since(t0);
    return r;
}

PatternReport pals_scs_from(const Dataset& d, const Sequence& scs, const PalsParams& params) {
    const auto t0 = Clock::now();
    std::map<std::string, double> phases;
    phases["heuristic_s"] = 0.0;

    auto t1 = Clock::now();
    auto mapped = patternize_beta(d, scs);
    phases["patternize_s"] = seconds_since(t1);

    // Run the LCS heuristic over the rendered patterns with '*' as an
    // ordinary symbol; the wildcard stands in for a free alphabet member.
    t1 = Clock::now();
    char placeholder = 0;
    for (char c : std::string_view(".#~!%&=+-0123456789abcdefgh")) {
        if (!d.alphabet().contains(c)) {
            placeholder = c;
            break;
        }
    }
    const Alphabet extended(d.alphabet().symbols() + placeholder);
    std::vector<std::string> pattern_strings;
    pattern_strings.reserve(mapped.size());
    for (const auto& m : mapped) {
        std::string r = m.pattern.render();
        std::replace(r.begin(), r.end(), kWildcard, placeholder);
        pattern_strings.push_back(std::move(r));
    }
    const Dataset pattern_set = Dataset::from_strings(extended, pattern_strings);
    std::string core = heuristic_lcs(pattern_set, params.deposition).value.symbols();
    std::replace(core.begin(), core.end(), placeholder, kWildcard);
    Pattern result =
        normalize(Pattern::parse(core, d.alphabet()), NormalizeMode::FinalOutput);
    phases["substring_s"] = seconds_since(t1);

    return finish_report(d, {std::move(result)}, "pals-scs", scs.symbols(), t0,
                         std::move(phases));
}

PatternReport pals_scs(const Dataset& d, const PalsParams& params) {
    const auto t0 = Clock::now();
    HeuristicResult h = heuristic_scs(d, params.pool_size, params.deposition.seed);
    PatternReport r = pals_scs_from(d, h.value, params);
    r.phase_s["heuristic_s"] = h.elapsed_s;
    r.elapsed_s = seconds_since(t0);
    return r;
}

}  // namespace pals
