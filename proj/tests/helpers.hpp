#pragma once

#include <random>
#include <string>
#include <vector>

#include "pals/seqcore.hpp"

namespace pals::testing {

inline Dataset dataset(const std::string& alphabet, const std::vector<std::string>& rows) {
    return Dataset::from_strings(Alphabet(alphabet), rows);
}

inline std::string random_string(std::mt19937_64& rng, const std::string& alphabet,
                                 std::size_t max_len, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(len(rng), alphabet[0]);
    for (auto& c : s) c = alphabet[pick(rng)];
    return s;
}

inline Dataset random_dataset(std::mt19937_64& rng, const std::string& alphabet,
                              std::size_t max_n, std::size_t max_len,
                              std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::vector<std::string> rows(nd(rng));
    for (auto& row : rows) row = random_string(rng, alphabet, max_len, min_len);
    return dataset(alphabet, rows);
}

// Existential matcher over raw tokens: tries every split point instead of
// the greedy leftmost one. Independent oracle for the production matcher.
inline bool brute_match_tokens(const std::vector<PatternToken>& tokens, std::string_view s,
                               std::size_t t = 0, std::size_t pos = 0) {
    if (t == tokens.size()) return pos == s.size();
    if (tokens[t].is_star) {
        for (std::size_t skip = pos; skip <= s.size(); ++skip) {
            if (brute_match_tokens(tokens, s, t + 1, skip)) return true;
        }
        return false;
    }
    const auto& lit = tokens[t].literal;
    if (pos + lit.size() > s.size() || s.compare(pos, lit.size(), lit) != 0) return false;
    return brute_match_tokens(tokens, s, t + 1, pos + lit.size());
}

inline std::vector<PatternToken> tokens_of_pattern(const Pattern& p) {
    std::vector<PatternToken> tokens;
    if (p.leading_star()) tokens.push_back(PatternToken::star());
    for (std::size_t i = 0; i < p.segments().size(); ++i) {
        if (i > 0) tokens.push_back(PatternToken::star());
        tokens.push_back(PatternToken::text(p.segments()[i]));
    }
    if (p.trailing_star() && !(p.segments().empty() && p.leading_star())) {
        tokens.push_back(PatternToken::star());
    }
    return tokens;
}

inline bool brute_match(const Pattern& p, std::string_view s) {
    return brute_match_tokens(tokens_of_pattern(p), s);
}

// Exhaustive order-preserving embedding search, no greedy shortcut.
inline bool brute_embeds(std::string_view a, std::string_view b, std::size_t i = 0,
                         std::size_t j = 0) {
    if (i == a.size()) return true;
    for (std::size_t k = j; k < b.size(); ++k) {
        if (b[k] == a[i] && brute_embeds(a, b, i + 1, k + 1)) return true;
    }
    return false;
}

inline std::vector<std::string> enumerate_strings(const std::string& alphabet,
                                                  std::size_t max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> frontier{""};
    for (std::size_t l = 0; l < max_len; ++l) {
        std::vector<std::string> next;
        for (const auto& s : frontier) {
            for (char c : alphabet) {
                next.push_back(s + c);
                out.push_back(next.back());
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace pals::testing
