#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pals/bench.hpp"
#include "pals/cli.hpp"
#include "pals/exact_oracles.hpp"
#include "pals/io.hpp"
#include "pals/pals_star.hpp"
#include "pals/transform.hpp"

namespace py = pybind11;

namespace {

using namespace pals;

Alphabet resolve_alphabet(const std::optional<std::string>& alphabet,
                          const std::vector<std::string>& seqs) {
    if (alphabet) return Alphabet(*alphabet);
    std::set<char> symbols;
    for (const auto& s : seqs) symbols.insert(s.begin(), s.end());
    if (symbols.empty()) throw std::invalid_argument("cannot infer an alphabet");
    return Alphabet(std::string(symbols.begin(), symbols.end()));
}

Dataset make_dataset(const std::vector<std::string>& seqs,
                     const std::optional<std::string>& alphabet) {
    return Dataset::from_strings(resolve_alphabet(alphabet, seqs), seqs);
}

Alphabet pattern_alphabet(const std::string& pattern,
                          const std::optional<std::string>& alphabet) {
    if (alphabet) return Alphabet(*alphabet);
    std::set<char> symbols;
    for (char c : pattern) {
        if (c != kWildcard) symbols.insert(c);
    }
    if (symbols.empty()) return Alphabet::dna();
    return Alphabet(std::string(symbols.begin(), symbols.end()));
}

py::dict heuristic_dict(const HeuristicResult& r) {
    py::dict d;
    d["value"] = r.value.symbols();
    d["algorithm"] = r.algorithm;
    d["seed"] = r.params.seed;
    d["elapsed_s"] = r.elapsed_s;
    d["fallback"] = r.fallback;
    return d;
}

py::dict report_dict(const PatternReport& r) {
    py::dict d;
    py::list patterns;
    for (const auto& p : r.patterns) patterns.append(p.render());
    d["patterns"] = patterns;
    d["sensitivity"] = r.sensitivity;
    d["ls"] = r.ls;
    d["support"] = r.support;
    d["algorithm"] = r.algorithm;
    d["source_value"] = r.source_value;
    d["elapsed_s"] = r.elapsed_s;
    return d;
}

PalsParams params_for(std::uint64_t seed, std::size_t window, std::size_t pool_size) {
    PalsParams p;
    p.deposition.seed = seed;
    p.deposition.window = window;
    p.pool_size = pool_size;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Heuristic LCS/SCS computation and wildcard pattern discovery";
    m.attr("__version__") = kToolVersion;

    m.def(
        "is_subsequence",
        [](const std::string& a, const std::string& b) { return is_subsequence(a, b); },
        py::arg("a"), py::arg("b"));
    m.def(
        "is_supersequence",
        [](const std::string& a, const std::string& b) { return is_subsequence(b, a); },
        py::arg("a"), py::arg("b"));

    m.def(
        "pattern_matches",
        [](const std::string& pattern, const std::string& s,
           const std::optional<std::string>& alphabet) {
            const Alphabet a = pattern_alphabet(pattern + s, alphabet);
            return pattern_matches(Pattern::parse(pattern, a), s);
        },
        py::arg("pattern"), py::arg("s"), py::arg("alphabet") = std::nullopt);
    m.def(
        "strip_wildcards",
        [](const std::string& pattern, const std::optional<std::string>& alphabet) {
            const Alphabet a = pattern_alphabet(pattern, alphabet);
            return strip_wildcards(Pattern::parse(pattern, a)).symbols();
        },
        py::arg("pattern"), py::arg("alphabet") = std::nullopt);
    m.def(
        "normalize_pattern",
        [](const std::string& pattern, bool final_output,
           const std::optional<std::string>& alphabet) {
            const Alphabet a = pattern_alphabet(pattern, alphabet);
            const Pattern p = Pattern::parse(pattern, a);
            return normalize(p, final_output ? NormalizeMode::FinalOutput
                                             : NormalizeMode::Library)
                .render();
        },
        py::arg("pattern"), py::arg("final_output") = false,
        py::arg("alphabet") = std::nullopt);

    m.def("exact_lcs_pair",
          [](const std::string& a, const std::string& b) { return exact_lcs_pair(a, b); });
    m.def("exact_scs_pair",
          [](const std::string& a, const std::string& b) { return exact_scs_pair(a, b); });
    m.def(
        "brute_lcs",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& alphabet) {
            return brute_lcs(make_dataset(seqs, alphabet));
        },
        py::arg("seqs"), py::arg("alphabet") = std::nullopt);
    m.def(
        "brute_scs",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& alphabet) {
            return brute_scs(make_dataset(seqs, alphabet));
        },
        py::arg("seqs"), py::arg("alphabet") = std::nullopt);
    m.def(
        "language_count",
        [](const std::string& pattern, std::size_t length, const std::string& alphabet) {
            return language_count(Pattern::parse(pattern, Alphabet(alphabet)), length);
        },
        py::arg("pattern"), py::arg("length"), py::arg("alphabet"));

    m.def(
        "heuristic_lcs",
        [](const std::vector<std::string>& seqs, std::uint64_t seed, std::size_t window,
           const std::optional<std::string>& alphabet) {
            return heuristic_dict(
                heuristic_lcs(make_dataset(seqs, alphabet), params_for(seed, window, 8).deposition));
        },
        py::arg("seqs"), py::arg("seed") = 0, py::arg("window") = 0,
        py::arg("alphabet") = std::nullopt);
    m.def(
        "heuristic_scs",
        [](const std::vector<std::string>& seqs, std::size_t pool_size, std::uint64_t seed,
           const std::optional<std::string>& alphabet) {
            return heuristic_dict(heuristic_scs(make_dataset(seqs, alphabet), pool_size, seed));
        },
        py::arg("seqs"), py::arg("pool_size") = 8, py::arg("seed") = 0,
        py::arg("alphabet") = std::nullopt);
    m.def(
        "alphabet_supersequence",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& alphabet) {
            return alphabet_supersequence(make_dataset(seqs, alphabet)).symbols();
        },
        py::arg("seqs"), py::arg("alphabet") = std::nullopt);
    m.def(
        "sum_height_merge",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& alphabet) {
            return sum_height_merge(make_dataset(seqs, alphabet)).symbols();
        },
        py::arg("seqs"), py::arg("alphabet") = std::nullopt);
    m.def(
        "min_height_merge",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& alphabet) {
            return min_height_merge(make_dataset(seqs, alphabet)).symbols();
        },
        py::arg("seqs"), py::arg("alphabet") = std::nullopt);

    m.def(
        "pals",
        [](const std::vector<std::string>& seqs, const std::string& base, std::uint64_t seed,
           const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            const PalsParams params = params_for(seed, 0, 8);
            return report_dict(base == "scs" ? pals_scs(d, params) : pals_lcs(d, params));
        },
        py::arg("seqs"), py::arg("base") = "lcs", py::arg("seed") = 0,
        py::arg("alphabet") = std::nullopt);
    m.def(
        "pals_star",
        [](const std::vector<std::string>& seqs, const std::string& base,
           double min_sensitivity, std::uint64_t seed,
           const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            return report_dict(pals_star(d, base == "scs" ? PalsBase::Scs : PalsBase::Lcs,
                                         StarParams{min_sensitivity}, params_for(seed, 0, 8)));
        },
        py::arg("seqs"), py::arg("base") = "lcs", py::arg("min_sensitivity") = 1.0,
        py::arg("seed") = 0, py::arg("alphabet") = std::nullopt);

    m.def(
        "scs_to_lcs",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& scs,
           std::uint64_t seed, const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            const PalsParams params = params_for(seed, 0, 8);
            HeuristicResult source =
                scs ? HeuristicResult{Sequence("", *scs, d.alphabet()), "given",
                                      params.deposition, 0.0, false}
                    : heuristic_scs(d, params.pool_size, seed);
            return heuristic_dict(scs_to_lcs(d, source, params));
        },
        py::arg("seqs"), py::arg("scs") = std::nullopt, py::arg("seed") = 0,
        py::arg("alphabet") = std::nullopt);
    m.def(
        "lcs_to_scs",
        [](const std::vector<std::string>& seqs, const std::optional<std::string>& lcs,
           std::uint64_t seed, const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            const PalsParams params = params_for(seed, 0, 8);
            HeuristicResult source =
                lcs ? HeuristicResult{Sequence("", *lcs, d.alphabet()), "given",
                                      params.deposition, 0.0, false}
                    : heuristic_lcs(d, params.deposition);
            return heuristic_dict(lcs_to_scs(d, source, params));
        },
        py::arg("seqs"), py::arg("lcs") = std::nullopt, py::arg("seed") = 0,
        py::arg("alphabet") = std::nullopt);
    m.def(
        "refine",
        [](const std::vector<std::string>& seqs, std::size_t rounds, std::size_t candidates,
           std::uint64_t seed, const std::optional<std::string>& alphabet) {
            const RefinementState s =
                refine(make_dataset(seqs, alphabet), rounds, candidates, seed);
            py::dict d;
            d["best_lcs"] = heuristic_dict(s.best_lcs);
            d["best_scs"] = heuristic_dict(s.best_scs);
            d["best_patterns"] = report_dict(s.best_patterns);
            d["rounds"] = s.rounds;
            d["initial_lcs_candidates"] = s.initial_lcs_candidates;
            return d;
        },
        py::arg("seqs"), py::arg("rounds") = 4, py::arg("candidates") = 3,
        py::arg("seed") = 0, py::arg("alphabet") = std::nullopt);

    m.def(
        "sensitivity",
        [](const std::vector<std::string>& seqs, const std::vector<std::string>& patterns,
           const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            std::vector<Pattern> ps;
            ps.reserve(patterns.size());
            for (const auto& t : patterns) ps.push_back(Pattern::parse(t, d.alphabet()));
            return sensitivity(d, ps);
        },
        py::arg("seqs"), py::arg("patterns"), py::arg("alphabet") = std::nullopt);
    m.def(
        "ls_score",
        [](const std::vector<std::string>& seqs, const std::vector<std::string>& patterns,
           const std::optional<std::string>& alphabet) {
            const Dataset d = make_dataset(seqs, alphabet);
            std::vector<Pattern> ps;
            ps.reserve(patterns.size());
            for (const auto& t : patterns) ps.push_back(Pattern::parse(t, d.alphabet()));
            return ls_score(d, ps, LanguageModel::for_dataset(d));
        },
        py::arg("seqs"), py::arg("patterns"), py::arg("alphabet") = std::nullopt);

    m.def(
        "generate",
        [](std::size_t n, std::size_t k, std::uint64_t seed, std::size_t replicates,
           const std::string& alphabet) {
            GeneratorSpec spec{n, k, Alphabet(alphabet), seed, replicates};
            std::vector<std::vector<std::string>> out;
            for (const auto& d : generate(spec)) {
                std::vector<std::string> rows;
                rows.reserve(d.size());
                for (const auto& s : d.sequences()) rows.push_back(s.symbols());
                out.push_back(std::move(rows));
            }
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("seed") = 0, py::arg("replicates") = 1,
        py::arg("alphabet") = "ACGT");
}
