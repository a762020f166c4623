#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pals {

// Reserved wildcard character; never a member of any Alphabet.
constexpr char kWildcard = '*';

class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    static Alphabet dna() { return Alphabet("ACGT"); }

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }
    bool contains(char c) const { return member_[static_cast<unsigned char>(c)]; }
    bool contains_all(std::string_view s) const;
    // Position of c in the declared symbol order.
    std::size_t index_of(char c) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::string symbols_;
    std::array<bool, 256> member_{};
};

class Sequence {
public:
    Sequence(std::string id, std::string symbols, Alphabet alphabet);

    const std::string& id() const { return id_; }
    const std::string& symbols() const { return symbols_; }
    std::size_t length() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    std::string id_;
    std::string symbols_;
    Alphabet alphabet_;
};

class Dataset {
public:
    Dataset(Alphabet alphabet, std::vector<Sequence> sequences);

    // Convenience constructor; sequences get ids s1..sn.
    static Dataset from_strings(const Alphabet& alphabet,
                                const std::vector<std::string>& symbols);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Sequence>& sequences() const { return sequences_; }
    std::size_t size() const { return sequences_.size(); }
    std::size_t max_length() const;
    double mean_length() const;

private:
    Alphabet alphabet_;
    std::vector<Sequence> sequences_;
};

struct PatternToken {
    bool is_star = false;
    std::string literal;

    static PatternToken star() { return {true, {}}; }
    static PatternToken text(std::string s) { return {false, std::move(s)}; }
};

// A wildcard pattern over Sigma + '*'. Stored canonically: literal segments
// with implicit single stars between them, plus leading/trailing star flags.
// Adjacent stars collapse and adjacent literals merge at construction, so
// structural invariants (no empty segment, no double star) always hold.
class Pattern {
public:
    static Pattern parse(std::string_view text, Alphabet alphabet);
    static Pattern from_tokens(const std::vector<PatternToken>& tokens, Alphabet alphabet);
    static Pattern universal(Alphabet alphabet);
    static Pattern literal(std::string_view text, Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& segments() const { return segments_; }
    bool leading_star() const { return leading_star_; }
    bool trailing_star() const { return trailing_star_; }

    bool is_universal() const { return segments_.empty() && leading_star_; }
    bool is_empty() const { return segments_.empty() && !leading_star_; }
    // Pattern floats when both ends are wildcards (no prefix/suffix pin).
    bool is_floating() const { return leading_star_ && trailing_star_; }

    std::size_t literal_count() const;  // p: total non-wildcard characters
    std::size_t star_count() const;     // q: stars in the rendered form

    std::string render() const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.leading_star_ == b.leading_star_ && a.trailing_star_ == b.trailing_star_ &&
               a.segments_ == b.segments_ && a.alphabet_ == b.alphabet_;
    }

private:
    Pattern(Alphabet alphabet, std::vector<std::string> segments, bool lead, bool trail);

    Alphabet alphabet_;
    std::vector<std::string> segments_;
    bool leading_star_ = false;
    bool trailing_star_ = false;
};

// Raw embedding test: a occurs in b as an order-preserving subsequence.
bool is_subsequence(std::string_view a, std::string_view b);

bool is_subsequence(const Sequence& a, const Sequence& b);
bool is_supersequence(const Sequence& a, const Sequence& b);

bool is_common_subsequence(const Dataset& d, std::string_view s);
bool is_common_supersequence(const Dataset& d, std::string_view s);

bool pattern_matches(const Pattern& p, std::string_view s);
bool pattern_matches(const Pattern& p, const Sequence& s);

// Leftmost placement of each literal segment; empty when s is not in L(p).
// Each entry is (start, length) of a segment occurrence, in pattern order.
bool pattern_match_positions(const Pattern& p, std::string_view s,
                             std::vector<std::pair<std::size_t, std::size_t>>& out);

Sequence strip_wildcards(const Pattern& p);

enum class NormalizeMode { Library, FinalOutput };

// Library mode is the canonical form (identity here); FinalOutput pads the
// pattern with leading/trailing stars the way discovery pipelines emit it.
Pattern normalize(const Pattern& p, NormalizeMode mode = NormalizeMode::Library);

}  // namespace pals
