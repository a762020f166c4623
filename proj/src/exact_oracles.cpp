#include "pals/exact_oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>
#include <vector>

namespace pals {

namespace {

std::vector<std::vector<int>> lcs_table(std::string_view a, std::string_view b) {
    // dp[i][j] = LCS length of a[i..], b[j..]
    std::vector<std::vector<int>> dp(a.size() + 1, std::vector<int>(b.size() + 1, 0));
    for (std::size_t i = a.size(); i-- > 0;) {
        for (std::size_t j = b.size(); j-- > 0;) {
            if (a[i] == b[j]) {
                dp[i][j] = dp[i + 1][j + 1] + 1;
            } else {
                dp[i][j] = std::max(dp[i + 1][j], dp[i][j + 1]);
            }
        }
    }
    return dp;
}

}  // namespace

std::string exact_lcs_pair(std::string_view a, std::string_view b) {
    auto dp = lcs_table(a, b);
    std::string out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (dp[i + 1][j] >= dp[i][j + 1]) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

std::string exact_scs_pair(std::string_view a, std::string_view b) {
    const std::string lcs = exact_lcs_pair(a, b);
    std::string out;
    std::size_t i = 0, j = 0;
    for (char c : lcs) {
        while (i < a.size() && a[i] != c) out.push_back(a[i++]);
        while (j < b.size() && b[j] != c) out.push_back(b[j++]);
        out.push_back(c);
        ++i;
        ++j;
    }
    out.append(a.substr(i));
    out.append(b.substr(j));
    return out;
}

std::string brute_lcs(const Dataset& d, const OracleLimits& limits) {
    if (d.size() > limits.max_sequences) {
        throw LimitError("brute_lcs: too many sequences for exhaustive search");
    }
    if (d.max_length() > limits.max_length) {
        throw LimitError("brute_lcs: sequence too long for exhaustive search");
    }

    const Sequence* shortest = &d.sequences().front();
    for (const auto& s : d.sequences()) {
        if (s.length() < shortest->length()) shortest = &s;
    }
    const std::string& base = shortest->symbols();

    for (std::size_t len = base.size() + 1; len-- > 0;) {
        std::unordered_set<std::string> seen;
        // Position combinations of size `len` in lexicographic order.
        std::vector<std::size_t> idx(len);
        for (std::size_t i = 0; i < len; ++i) idx[i] = i;
        while (true) {
            std::string cand;
            cand.reserve(len);
            for (std::size_t i : idx) cand.push_back(base[i]);
            if (seen.insert(cand).second && is_common_subsequence(d, cand)) {
                return cand;
            }
            // next combination
            std::size_t k = len;
            while (k-- > 0) {
                if (idx[k] + (len - k) < base.size()) break;
                if (k == 0) {
                    k = std::size_t(-1);
                    break;
                }
            }
            if (k == std::size_t(-1) || len == 0) break;
            ++idx[k];
            for (std::size_t i = k + 1; i < len; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (len == 0) break;
    }
    return "";
}

std::string brute_scs(const Dataset& d, const OracleLimits& limits) {
    if (d.size() > limits.max_sequences) {
        throw LimitError("brute_scs: too many sequences for state-space search");
    }
    if (d.max_length() > limits.max_length) {
        throw LimitError("brute_scs: sequence too long for state-space search");
    }

    const auto& seqs = d.sequences();
    const std::size_t n = seqs.size();
    std::vector<std::size_t> radix(n);
    std::size_t states = 1;
    for (std::size_t i = 0; i < n; ++i) {
        radix[i] = seqs[i].length() + 1;
        states *= radix[i];
    }
    auto encode = [&](const std::vector<std::size_t>& pos) {
        std::size_t id = 0;
        for (std::size_t i = n; i-- > 0;) id = id * radix[i] + pos[i];
        return id;
    };

    const std::size_t unseen = states;  // sentinel
    std::vector<std::size_t> parent(states, unseen);
    std::vector<char> via(states, 0);
    std::vector<std::size_t> pos(n, 0), next(n);

    const std::size_t start = encode(pos);
    std::size_t goal = 0;
    {
        std::vector<std::size_t> end(n);
        for (std::size_t i = 0; i < n; ++i) end[i] = seqs[i].length();
        goal = encode(end);
    }

    std::queue<std::vector<std::size_t>> queue;
    queue.push(pos);
    parent[start] = start;
    while (!queue.empty()) {
        pos = queue.front();
        queue.pop();
        const std::size_t id = encode(pos);
        if (id == goal) break;
        for (char c : d.alphabet().symbols()) {
            bool progress = false;
            for (std::size_t i = 0; i < n; ++i) {
                next[i] = pos[i];
                if (pos[i] < seqs[i].length() && seqs[i].symbols()[pos[i]] == c) {
                    ++next[i];
                    progress = true;
                }
            }
            if (!progress) continue;
            const std::size_t nid = encode(next);
            if (parent[nid] != unseen) continue;
            parent[nid] = id;
            via[nid] = c;
            queue.push(next);
        }
    }

    std::string out;
    for (std::size_t id = goal; id != start; id = parent[id]) out.push_back(via[id]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::uint64_t language_count(const Pattern& p, std::size_t len, const OracleLimits& limits) {
    if (len > limits.max_language_len) {
        throw LimitError("language_count: length exceeds enumeration limit");
    }

    const std::string r = p.render();
    const std::string& sigma = p.alphabet().symbols();

    // NFA over positions 0..|r|; a star loops on every symbol and advances
    // silently. Closure saturates chains of stars.
    auto closure = [&](std::vector<std::size_t> set) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            std::size_t q = set[i];
            if (q < r.size() && r[q] == kWildcard &&
                std::find(set.begin(), set.end(), q + 1) == set.end()) {
                set.push_back(q + 1);
            }
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };

    std::map<std::vector<std::size_t>, std::size_t> dfa_id;
    std::vector<std::vector<std::size_t>> dfa_states;
    std::vector<std::vector<std::size_t>> delta;  // [state][symbol index]
    std::vector<bool> accepting;

    auto intern = [&](std::vector<std::size_t> set) {
        auto [it, fresh] = dfa_id.try_emplace(std::move(set), dfa_states.size());
        if (fresh) {
            dfa_states.push_back(it->first);
            delta.emplace_back();
            accepting.push_back(std::find(it->first.begin(), it->first.end(), r.size()) !=
                                it->first.end());
        }
        return it->second;
    };

    const std::size_t dead = intern({});
    const std::size_t start = intern(closure({0}));
    for (std::size_t s = 0; s < dfa_states.size(); ++s) {
        delta[s].assign(sigma.size(), dead);
        for (std::size_t ci = 0; ci < sigma.size(); ++ci) {
            std::vector<std::size_t> moved;
            for (std::size_t q : dfa_states[s]) {
                if (q >= r.size()) continue;
                if (r[q] == kWildcard) {
                    moved.push_back(q);  // star consumes and stays
                } else if (r[q] == sigma[ci]) {
                    moved.push_back(q + 1);
                }
            }
            delta[s][ci] = intern(closure(std::move(moved)));
        }
    }

    std::vector<std::uint64_t> count(dfa_states.size(), 0);
    count[start] = 1;
    for (std::size_t step = 0; step < len; ++step) {
        std::vector<std::uint64_t> next(dfa_states.size(), 0);
        for (std::size_t s = 0; s < count.size(); ++s) {
            if (count[s] == 0) continue;
            for (std::size_t ci = 0; ci < sigma.size(); ++ci) {
                next[delta[s][ci]] += count[s];
            }
        }
        count = std::move(next);
    }

    std::uint64_t total = 0;
    for (std::size_t s = 0; s < count.size(); ++s) {
        if (accepting[s]) total += count[s];
    }
    return total;
}

}  // namespace pals
