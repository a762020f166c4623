#include "pals/seqcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pals {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    require(!symbols_.empty(), "alphabet must contain at least one symbol");
    for (char c : symbols_) {
        require(c != kWildcard, "alphabet must not contain the wildcard '*'");
        auto& seen = member_[static_cast<unsigned char>(c)];
        require(!seen, "alphabet symbols must be distinct");
        seen = true;
    }
}

bool Alphabet::contains_all(std::string_view s) const {
    return std::all_of(s.begin(), s.end(), [&](char c) { return contains(c); });
}

std::size_t Alphabet::index_of(char c) const {
    auto pos = symbols_.find(c);
    require(pos != std::string::npos, "symbol not in alphabet");
    return pos;
}

Sequence::Sequence(std::string id, std::string symbols, Alphabet alphabet)
    : id_(std::move(id)), symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
    for (char c : symbols_) {
        require(alphabet_.contains(c),
                "sequence '" + id_ + "' contains symbol outside its alphabet");
    }
}

Dataset::Dataset(Alphabet alphabet, std::vector<Sequence> sequences)
    : alphabet_(std::move(alphabet)), sequences_(std::move(sequences)) {
    require(!sequences_.empty(), "dataset must contain at least one sequence");
    for (const auto& s : sequences_) {
        require(s.alphabet() == alphabet_, "all sequences must share the dataset alphabet");
    }
}

Dataset Dataset::from_strings(const Alphabet& alphabet,
                              const std::vector<std::string>& symbols) {
    std::vector<Sequence> seqs;
    seqs.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        seqs.emplace_back("s" + std::to_string(i + 1), symbols[i], alphabet);
    }
    return Dataset(alphabet, std::move(seqs));
}

std::size_t Dataset::max_length() const {
    std::size_t best = 0;
    for (const auto& s : sequences_) best = std::max(best, s.length());
    return best;
}

double Dataset::mean_length() const {
    std::size_t total = 0;
    for (const auto& s : sequences_) total += s.length();
    return static_cast<double>(total) / static_cast<double>(sequences_.size());
}

Pattern::Pattern(Alphabet alphabet, std::vector<std::string> segments, bool lead, bool trail)
    : alphabet_(std::move(alphabet)),
      segments_(std::move(segments)),
      leading_star_(lead),
      trailing_star_(trail) {
    if (segments_.empty() && (leading_star_ || trailing_star_)) {
        leading_star_ = trailing_star_ = true;  // canonical "*"
    }
}

Pattern Pattern::from_tokens(const std::vector<PatternToken>& tokens, Alphabet alphabet) {
    std::vector<std::string> segments;
    bool lead = false, trail = false;
    bool star_pending = false;
    for (const auto& t : tokens) {
        if (t.is_star) {
            star_pending = true;  // adjacent stars collapse here
            continue;
        }
        if (t.literal.empty()) continue;
        require(alphabet.contains_all(t.literal), "pattern literal outside alphabet");
        require(t.literal.find(kWildcard) == std::string::npos,
                "literal token must not contain '*'");
        if (segments.empty()) {
            lead = star_pending;
            segments.push_back(t.literal);
        } else if (star_pending) {
            segments.push_back(t.literal);
        } else {
            segments.back() += t.literal;  // adjacent literals merge
        }
        star_pending = false;
    }
    trail = star_pending;
    return Pattern(std::move(alphabet), std::move(segments), lead, trail);
}

Pattern Pattern::parse(std::string_view text, Alphabet alphabet) {
    std::vector<PatternToken> tokens;
    std::string run;
    for (char c : text) {
        if (c == kWildcard) {
            if (!run.empty()) tokens.push_back(PatternToken::text(std::move(run)));
            run.clear();
            tokens.push_back(PatternToken::star());
        } else {
            run.push_back(c);
        }
    }
    if (!run.empty()) tokens.push_back(PatternToken::text(std::move(run)));
    return from_tokens(tokens, std::move(alphabet));
}

Pattern Pattern::universal(Alphabet alphabet) {
    return Pattern(std::move(alphabet), {}, true, true);
}

Pattern Pattern::literal(std::string_view text, Alphabet alphabet) {
    return parse(text, std::move(alphabet));  // text without '*' yields a pinned literal
}

std::size_t Pattern::literal_count() const {
    std::size_t n = 0;
    for (const auto& seg : segments_) n += seg.size();
    return n;
}

std::size_t Pattern::star_count() const {
    if (segments_.empty()) return leading_star_ ? 1 : 0;
    return segments_.size() - 1 + (leading_star_ ? 1 : 0) + (trailing_star_ ? 1 : 0);
}

std::string Pattern::render() const {
    if (segments_.empty()) return leading_star_ ? std::string(1, kWildcard) : std::string();
    std::string out;
    if (leading_star_) out.push_back(kWildcard);
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i > 0) out.push_back(kWildcard);
        out += segments_[i];
    }
    if (trailing_star_) out.push_back(kWildcard);
    return out;
}

bool is_subsequence(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < a.size() && j < b.size(); ++j) {
        if (a[i] == b[j]) ++i;
    }
    return i == a.size();
}

bool is_subsequence(const Sequence& a, const Sequence& b) {
    if (!(a.alphabet() == b.alphabet())) {
        throw std::invalid_argument("is_subsequence: alphabet mismatch");
    }
    return is_subsequence(a.symbols(), b.symbols());
}

bool is_supersequence(const Sequence& a, const Sequence& b) {
    return is_subsequence(b, a);
}

bool is_common_subsequence(const Dataset& d, std::string_view s) {
    return std::all_of(d.sequences().begin(), d.sequences().end(),
                       [&](const Sequence& t) { return is_subsequence(s, t.symbols()); });
}

bool is_common_supersequence(const Dataset& d, std::string_view s) {
    return std::all_of(d.sequences().begin(), d.sequences().end(),
                       [&](const Sequence& t) { return is_subsequence(t.symbols(), s); });
}

bool pattern_match_positions(const Pattern& p, std::string_view s,
                             std::vector<std::pair<std::size_t, std::size_t>>& out) {
    out.clear();
    const auto& segs = p.segments();
    if (segs.empty()) {
        return p.leading_star() ? true : s.empty();
    }

    std::size_t pos = 0;
    std::size_t first = 0;
    if (!p.leading_star()) {
        if (s.substr(0, segs[0].size()) != segs[0]) return false;
        out.emplace_back(0, segs[0].size());
        pos = segs[0].size();
        first = 1;
        if (segs.size() == 1) {
            if (!p.trailing_star() && s.size() != segs[0].size()) {
                out.clear();
                return false;
            }
            return true;
        }
    }

    // Greedy leftmost placement for every segment except a pinned suffix.
    const std::size_t stop = p.trailing_star() ? segs.size() : segs.size() - 1;
    for (std::size_t i = first; i < stop; ++i) {
        auto found = s.find(segs[i], pos);
        if (found == std::string_view::npos) {
            out.clear();
            return false;
        }
        out.emplace_back(found, segs[i].size());
        pos = found + segs[i].size();
    }

    if (!p.trailing_star()) {
        const auto& last = segs.back();
        if (s.size() < pos + last.size() ||
            s.compare(s.size() - last.size(), last.size(), last) != 0) {
            out.clear();
            return false;
        }
        out.emplace_back(s.size() - last.size(), last.size());
    }
    return true;
}

bool pattern_matches(const Pattern& p, std::string_view s) {
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    return pattern_match_positions(p, s, positions);
}

bool pattern_matches(const Pattern& p, const Sequence& s) {
    if (!(p.alphabet() == s.alphabet())) {
        throw std::invalid_argument("pattern_matches: alphabet mismatch");
    }
    return pattern_matches(p, s.symbols());
}

Sequence strip_wildcards(const Pattern& p) {
    std::string out;
    for (const auto& seg : p.segments()) out += seg;
    return Sequence("", std::move(out), p.alphabet());
}

Pattern normalize(const Pattern& p, NormalizeMode mode) {
    if (mode == NormalizeMode::Library) return p;
    std::vector<PatternToken> tokens;
    tokens.push_back(PatternToken::star());
    for (const auto& seg : p.segments()) {
        tokens.push_back(PatternToken::text(seg));
        tokens.push_back(PatternToken::star());
    }
    return Pattern::from_tokens(tokens, p.alphabet());
}

}  // namespace pals
