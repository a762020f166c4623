#include "pals/scs_heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace pals {

namespace {

using Clock = std::chrono::steady_clock;

std::string merge_step_loop(const Dataset& d, bool min_height, std::mt19937_64* rng) {
    const auto& sigma = d.alphabet().symbols();
    const auto& seqs = d.sequences();
    std::vector<std::size_t> cursor(seqs.size(), 0);
    std::string out;

    while (true) {
        std::vector<std::size_t> front_count(sigma.size(), 0);
        std::size_t active = 0;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (cursor[i] >= seqs[i].length()) continue;
            ++active;
            ++front_count[d.alphabet().index_of(seqs[i].symbols()[cursor[i]])];
        }
        if (active == 0) break;

        std::size_t chosen = sigma.size();
        if (min_height) {
            // Candidates: fronts of the sequences with the longest remainder.
            std::size_t longest = 0;
            for (std::size_t i = 0; i < seqs.size(); ++i) {
                if (cursor[i] >= seqs[i].length()) continue;
                longest = std::max(longest, seqs[i].length() - cursor[i]);
            }
            for (std::size_t i = 0; i < seqs.size(); ++i) {
                if (cursor[i] >= seqs[i].length()) continue;
                if (seqs[i].length() - cursor[i] != longest) continue;
                const std::size_t ci = d.alphabet().index_of(seqs[i].symbols()[cursor[i]]);
                if (chosen == sigma.size() || front_count[ci] > front_count[chosen] ||
                    (front_count[ci] == front_count[chosen] && ci < chosen)) {
                    chosen = ci;
                }
            }
        } else {
            std::vector<std::size_t> ties;
            for (std::size_t ci = 0; ci < sigma.size(); ++ci) {
                if (front_count[ci] == 0) continue;
                if (chosen == sigma.size() || front_count[ci] > front_count[chosen]) {
                    chosen = ci;
                    ties.assign(1, ci);
                } else if (front_count[ci] == front_count[chosen]) {
                    ties.push_back(ci);
                }
            }
            if (rng && ties.size() > 1) chosen = ties[(*rng)() % ties.size()];
        }

        out.push_back(sigma[chosen]);
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (cursor[i] < seqs[i].length() &&
                seqs[i].symbols()[cursor[i]] == sigma[chosen]) {
                ++cursor[i];
            }
        }
    }
    return out;
}

}  // namespace

Sequence alphabet_supersequence(const Dataset& d) {
    std::string out;
    const std::size_t k = d.max_length();
    out.reserve(k * d.alphabet().size());
    for (std::size_t i = 0; i < k; ++i) out += d.alphabet().symbols();
    return Sequence("", std::move(out), d.alphabet());
}

Sequence sum_height_merge(const Dataset& d) {
    return Sequence("", merge_step_loop(d, false, nullptr), d.alphabet());
}

Sequence min_height_merge(const Dataset& d) {
    return Sequence("", merge_step_loop(d, true, nullptr), d.alphabet());
}

Sequence reduce_template(const Dataset& d, const Sequence& t) {
    if (!is_common_supersequence(d, t.symbols())) {
        throw std::invalid_argument("reduce_template: not a common supersequence");
    }
    const auto& seqs = d.sequences();
    const std::size_t n = seqs.size();
    std::string cur = t.symbols();

    // fwd[i][j]: chars of s_i consumed scanning cur[0..j) forward;
    // bwd[i][j]: chars consumable scanning cur[j..) backward from the end.
    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    auto recompute = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& s = seqs[i].symbols();
            fwd[i].assign(cur.size() + 1, 0);
            for (std::size_t j = 0; j < cur.size(); ++j) {
                fwd[i][j + 1] =
                    fwd[i][j] + (fwd[i][j] < s.size() && s[fwd[i][j]] == cur[j] ? 1 : 0);
            }
            bwd[i].assign(cur.size() + 1, 0);
            for (std::size_t j = cur.size(); j-- > 0;) {
                bwd[i][j] =
                    bwd[i][j + 1] +
                    (bwd[i][j + 1] < s.size() && s[s.size() - 1 - bwd[i][j + 1]] == cur[j] ? 1 : 0);
            }
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;
        recompute();
        std::size_t j = 0;
        while (j < cur.size()) {
            bool deletable = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (fwd[i][j] + bwd[i][j + 1] < seqs[i].length()) {
                    deletable = false;
                    break;
                }
            }
            if (deletable) {
                cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                recompute();
            } else {
                ++j;
            }
        }
    }
    return Sequence(t.id(), std::move(cur), d.alphabet());
}

TemplatePool build_template_pool(const Dataset& d, std::size_t pool_size, std::uint64_t seed) {
    if (pool_size < 1) throw std::invalid_argument("pool_size must be >= 1");
    TemplatePool pool;
    pool.templates.push_back({alphabet_supersequence(d), "alphabet"});
    if (pool.templates.size() < pool_size) {
        pool.templates.push_back({sum_height_merge(d), "sh"});
    }
    if (pool.templates.size() < pool_size) {
        pool.templates.push_back({min_height_merge(d), "mh"});
    }
    std::size_t variant = 0;
    while (pool.templates.size() < pool_size) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (variant + 1));
        pool.templates.push_back(
            {Sequence("", merge_step_loop(d, false, &rng), d.alphabet()),
             "sh-rand" + std::to_string(variant)});
        ++variant;
    }
    return pool;
}

HeuristicResult heuristic_scs(const Dataset& d, std::size_t pool_size, std::uint64_t seed) {
    const auto t0 = Clock::now();
    TemplatePool pool = build_template_pool(d, pool_size, seed);

    std::string best;
    bool have = false;
    for (const auto& entry : pool.templates) {
        const std::string reduced = reduce_template(d, entry.value).symbols();
        if (!have || reduced.size() < best.size() ||
            (reduced.size() == best.size() && reduced < best)) {
            best = reduced;
            have = true;
        }
    }
    if (!is_common_supersequence(d, best)) {
        throw std::logic_error("heuristic_scs: output violates the supersequence contract");
    }
    DepositionParams params;
    params.seed = seed;
    return {Sequence("", std::move(best), d.alphabet()), "dep-redn", params,
            std::chrono::duration<double>(Clock::now() - t0).count(), false};
}

}  // namespace pals
