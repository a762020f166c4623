#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "pals/exact_oracles.hpp"
#include "pals/lcs_heuristic.hpp"

using namespace pals;
using namespace pals::testing;

TEST_CASE("deposition reproduces the worked instance") {
    DepositionParams params;
    params.window = 4;
    CHECK(deposit_common_subsequence(dataset("ACGT", {"ACGT", "CGGT", "CGTC"}), params)
              .value.symbols() == "CGT");
    CHECK(deposit_common_subsequence(dataset("ACGT", {"GATTACA"})).value.symbols() ==
          "GATTACA");
    CHECK(deposit_common_subsequence(dataset("AC", {"AAAA", "CCCC"})).value.symbols() == "");
}

TEST_CASE("extension grows a seed to a maximal common subsequence") {
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CGTC"});
    CHECK(extend_to_maximal(d, Sequence("", "CG", d.alphabet())).symbols() == "CGT");
    CHECK(extend_to_maximal(d, Sequence("", "CGT", d.alphabet())).symbols() == "CGT");

    const Dataset two = dataset("AC", {"AC", "CA"});
    CHECK(extend_to_maximal(two, Sequence("", "", two.alphabet())).symbols() == "A");

    CHECK_THROWS_AS(extend_to_maximal(d, Sequence("", "TTT", d.alphabet())),
                    std::invalid_argument);
}

TEST_CASE("heuristic_lcs output satisfies its contract on random data") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 150; ++t) {
        const Dataset d = random_dataset(rng, t % 2 ? "ACGT" : "AC", 6, 20);
        const auto r = heuristic_lcs(d);
        CHECK(is_common_subsequence(d, r.value.symbols()));

        // One-step maximality: no single insertion stays a common subsequence.
        const std::string& cur = r.value.symbols();
        for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
            for (char c : d.alphabet().symbols()) {
                std::string grown = cur;
                grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), c);
                CHECK_FALSE(is_common_subsequence(d, grown));
            }
        }
    }
}

TEST_CASE("heuristic_lcs never beats the exact oracle") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 80; ++t) {
        const Dataset d = random_dataset(rng, "AC", 3, 10);
        CHECK(heuristic_lcs(d).value.length() <= brute_lcs(d).size());
    }
}

TEST_CASE("heuristic_lcs is deterministic for a fixed seed") {
    std::mt19937_64 rng(71);
    const Dataset d = random_dataset(rng, "ACGT", 5, 25, 5);
    DepositionParams params;
    params.seed = 9;
    CHECK(heuristic_lcs(d, params).value.symbols() ==
          heuristic_lcs(d, params).value.symbols());
}

TEST_CASE("the worked refinement instance keeps its contract") {
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CTGC"});
    const auto r = heuristic_lcs(d);
    CHECK(r.value.length() >= 1);
    CHECK(is_common_subsequence(d, r.value.symbols()));
}

TEST_CASE("multi-candidate mode returns distinct values, longest first") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 20; ++t) {
        const Dataset d = random_dataset(rng, "ACGT", 4, 15, 3);
        const auto cands = heuristic_lcs_candidates(d, {}, 5);
        CHECK(!cands.empty());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            CHECK(is_common_subsequence(d, cands[i].value.symbols()));
            if (i > 0) CHECK(cands[i - 1].value.length() >= cands[i].value.length());
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                CHECK(cands[i].value.symbols() != cands[j].value.symbols());
            }
        }
    }
}
