#include "pals/lcs_heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <stdexcept>

namespace pals {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Per-sequence, per-symbol occurrence positions for O(log k) lookahead.
struct OccurrenceIndex {
    std::vector<std::vector<std::vector<std::size_t>>> pos;  // [seq][symbol][occ]

    OccurrenceIndex(const Dataset& d) {
        const auto& sigma = d.alphabet().symbols();
        pos.resize(d.size(), std::vector<std::vector<std::size_t>>(sigma.size()));
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::string& s = d.sequences()[i].symbols();
            for (std::size_t j = 0; j < s.size(); ++j) {
                pos[i][d.alphabet().index_of(s[j])].push_back(j);
            }
        }
    }

    // First occurrence of symbol `ci` in sequence `i` at index >= from, or npos.
    std::size_t next(std::size_t i, std::size_t ci, std::size_t from) const {
        const auto& v = pos[i][ci];
        auto it = std::lower_bound(v.begin(), v.end(), from);
        return it == v.end() ? std::string::npos : *it;
    }

    // Last occurrence strictly below `before`, or npos.
    std::size_t prev(std::size_t i, std::size_t ci, std::size_t before) const {
        const auto& v = pos[i][ci];
        auto it = std::lower_bound(v.begin(), v.end(), before);
        return it == v.begin() ? std::string::npos : *(it - 1);
    }
};

}  // namespace

HeuristicResult deposit_common_subsequence(const Dataset& d, const DepositionParams& params) {
    const auto t0 = Clock::now();
    const auto& sigma = d.alphabet().symbols();
    const std::size_t base_window = params.window ? params.window : 2 * sigma.size();
    if (base_window < 1) throw std::invalid_argument("deposition window must be >= 1");

    OccurrenceIndex occ(d);
    std::mt19937_64 rng(params.seed);

    std::vector<std::size_t> cursor(d.size(), 0);
    std::string out;

    auto exhausted = [&] {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (cursor[i] >= d.sequences()[i].length()) return true;
        }
        return false;
    };

    while (!exhausted()) {
        struct Candidate {
            std::size_t total;
            std::size_t max_adv;
            std::size_t symbol;
        };
        std::vector<Candidate> found;
        std::size_t window = base_window;
        for (std::size_t growth = 0; growth <= params.max_window_growth; ++growth) {
            for (std::size_t ci = 0; ci < sigma.size(); ++ci) {
                std::size_t total = 0, max_adv = 0;
                bool ok = true;
                for (std::size_t i = 0; i < d.size() && ok; ++i) {
                    std::size_t p = occ.next(i, ci, cursor[i]);
                    if (p == std::string::npos || p >= cursor[i] + window) {
                        ok = false;
                        break;
                    }
                    const std::size_t adv = p - cursor[i] + 1;
                    total += adv;
                    max_adv = std::max(max_adv, adv);
                }
                if (ok) found.push_back({total, max_adv, ci});
            }
            if (!found.empty()) break;
            window *= 2;
        }
        if (found.empty()) break;

        std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
            if (a.total != b.total) return a.total < b.total;
            if (a.max_adv != b.max_adv) return a.max_adv < b.max_adv;
            return a.symbol < b.symbol;
        });
        std::size_t pick = 0;
        if (params.seed != 0) {
            std::size_t ties = 1;
            while (ties < found.size() && found[ties].total == found[0].total &&
                   found[ties].max_adv == found[0].max_adv) {
                ++ties;
            }
            pick = rng() % ties;
        }
        const std::size_t ci = found[pick].symbol;
        for (std::size_t i = 0; i < d.size(); ++i) {
            cursor[i] = occ.next(i, ci, cursor[i]) + 1;
        }
        out.push_back(sigma[ci]);
    }

    HeuristicResult r{Sequence("", std::move(out), d.alphabet()), "deposit", params,
                      seconds_since(t0), false};
    return r;
}

Sequence extend_to_maximal(const Dataset& d, const Sequence& base) {
    if (!is_common_subsequence(d, base.symbols())) {
        throw std::invalid_argument("extend_to_maximal: base is not a common subsequence");
    }
    const auto& sigma = d.alphabet().symbols();
    const std::size_t n = d.size();
    OccurrenceIndex occ(d);

    std::string cur = base.symbols();
    // fwd[i][j]: chars of s_i consumed after greedily embedding cur[0..j);
    // bwd[i][j]: maximal start from which cur[j..) still embeds in s_i.
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    auto recompute = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& s = d.sequences()[i].symbols();
            fwd[i].assign(cur.size() + 1, 0);
            for (std::size_t j = 0; j < cur.size(); ++j) {
                const std::size_t p = occ.next(i, d.alphabet().index_of(cur[j]), fwd[i][j]);
                fwd[i][j + 1] = p + 1;  // guaranteed to exist: cur embeds in s
            }
            bwd[i].assign(cur.size() + 1, 0);
            bwd[i][cur.size()] = s.size();
            for (std::size_t j = cur.size(); j-- > 0;) {
                bwd[i][j] = occ.prev(i, d.alphabet().index_of(cur[j]), bwd[i][j + 1]);
            }
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        recompute();
        for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
            for (std::size_t ci = 0; ci < sigma.size(); ++ci) {
                bool ok = true;
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t p = occ.next(i, ci, fwd[i][pos]);
                    if (p == std::string::npos || p >= bwd[i][pos]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos), sigma[ci]);
                    changed = true;
                    recompute();
                    break;
                }
            }
        }
    }
    return Sequence(base.id(), std::move(cur), d.alphabet());
}

HeuristicResult heuristic_lcs(const Dataset& d, const DepositionParams& params) {
    const auto t0 = Clock::now();
    HeuristicResult dep = deposit_common_subsequence(d, params);
    Sequence value = extend_to_maximal(d, dep.value);
    if (!is_common_subsequence(d, value.symbols())) {
        throw std::logic_error("heuristic_lcs: output violates the subsequence contract");
    }
    return {std::move(value), "dep-ext", params, seconds_since(t0), false};
}

std::vector<HeuristicResult> heuristic_lcs_candidates(const Dataset& d,
                                                      const DepositionParams& params,
                                                      std::size_t count) {
    std::vector<HeuristicResult> out;
    for (std::size_t i = 0; i < count; ++i) {
        DepositionParams p = params;
        p.seed = params.seed + i;
        HeuristicResult r = heuristic_lcs(d, p);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const HeuristicResult& o) {
            return o.value.symbols() == r.value.symbols();
        });
        if (!dup) out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const HeuristicResult& a, const HeuristicResult& b) {
        return a.value.length() > b.value.length();
    });
    return out;
}

}  // namespace pals
