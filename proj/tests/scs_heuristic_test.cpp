#include <doctest.h>

#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "pals/exact_oracles.hpp"
#include "pals/scs_heuristic.hpp"

using namespace pals;
using namespace pals::testing;

TEST_CASE("alphabet_supersequence repeats the alphabet to the max length") {
    CHECK(alphabet_supersequence(dataset("ACGT", {"AC", "GT"})).symbols() == "ACGTACGT");
    CHECK(alphabet_supersequence(dataset("A", {"AAA"})).symbols() == "AAA");
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CTGC"});
    CHECK(alphabet_supersequence(d).length() == 16);
    CHECK(is_common_supersequence(d, alphabet_supersequence(d).symbols()));
}

TEST_CASE("sum height merge follows the majority front") {
    CHECK(sum_height_merge(dataset("AB", {"AB", "AB"})).symbols() == "AB");
    CHECK(sum_height_merge(dataset("AB", {"AB", "BA"})).symbols() == "ABA");
    CHECK(sum_height_merge(dataset("ACGT", {"GATTACA"})).symbols() == "GATTACA");
}

TEST_CASE("min height merge follows the longest remainder") {
    CHECK(min_height_merge(dataset("AB", {"AB", "AB"})).symbols() == "AB");
    CHECK(min_height_merge(dataset("AB", {"AAB", "BA"})).symbols().front() == 'A');
    CHECK(min_height_merge(dataset("ACGT", {"GATTACA"})).symbols() == "GATTACA");
}

TEST_CASE("merges always produce common supersequences") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 150; ++t) {
        const Dataset d = random_dataset(rng, t % 2 ? "ACGT" : "AC", 6, 20);
        CHECK(is_common_supersequence(d, sum_height_merge(d).symbols()));
        CHECK(is_common_supersequence(d, min_height_merge(d).symbols()));
    }
}

TEST_CASE("reduce_template reaches a 1-minimal supersequence") {
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CTGC"});
    const Sequence reduced = reduce_template(d, alphabet_supersequence(d));
    CHECK(is_common_supersequence(d, reduced.symbols()));
    CHECK(reduced.length() <= 16);
    CHECK(reduced.length() >= brute_scs(d).size());
    for (std::size_t i = 0; i < reduced.length(); ++i) {
        std::string shorter = reduced.symbols();
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
        CHECK_FALSE(is_common_supersequence(d, shorter));
    }

    // An optimal supersequence is already 1-minimal.
    const std::string optimal = brute_scs(d);
    CHECK(reduce_template(d, Sequence("", optimal, d.alphabet())).symbols() == optimal);

    const Dataset single = dataset("X", {"X"});
    CHECK(reduce_template(single, Sequence("", "XX", single.alphabet())).symbols() == "X");

    CHECK_THROWS_AS(reduce_template(d, Sequence("", "ACGT", d.alphabet())),
                    std::invalid_argument);
}

TEST_CASE("reduce_template is idempotent") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 60; ++t) {
        const Dataset d = random_dataset(rng, "AC", 4, 10);
        std::string merged;
        for (const auto& s : d.sequences()) merged += s.symbols();
        const Sequence once = reduce_template(d, Sequence("", merged, d.alphabet()));
        CHECK(reduce_template(d, once).symbols() == once.symbols());
    }
}

TEST_CASE("heuristic_scs worked instances") {
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CTGC"});
    const auto r = heuristic_scs(d);
    CHECK(is_common_supersequence(d, r.value.symbols()));
    CHECK(r.value.length() <= 8);
    CHECK(heuristic_scs(dataset("ACGT", {"GATTACA"})).value.symbols() == "GATTACA");
    CHECK(heuristic_scs(dataset("AB", {"AB", "BA"})).value.length() == 3);
}

TEST_CASE("heuristic_scs sits between the oracle and the alphabet bound") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 80; ++t) {
        const Dataset d = random_dataset(rng, "AC", 3, 10);
        const auto r = heuristic_scs(d);
        CHECK(is_common_supersequence(d, r.value.symbols()));
        CHECK(r.value.length() >= brute_scs(d).size());
        CHECK(r.value.length() <= alphabet_supersequence(d).length());
    }
}

TEST_CASE("identical sequences merge to themselves") {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 50; ++t) {
        const std::string s = random_string(rng, "ACGT", 12, 1);
        const Dataset d = dataset("ACGT", {s, s, s});
        CHECK(sum_height_merge(d).symbols() == s);
        CHECK(heuristic_scs(d).value.symbols() == s);
    }
}

TEST_CASE("template pool entries are all common supersequences") {
    std::mt19937_64 rng(101);
    const Dataset d = random_dataset(rng, "ACGT", 5, 12, 1);
    const TemplatePool pool = build_template_pool(d, 8, 5);
    CHECK(pool.templates.size() == 8);
    for (const auto& entry : pool.templates) {
        CHECK(is_common_supersequence(d, entry.value.symbols()));
    }
    CHECK_THROWS_AS(build_template_pool(d, 0, 0), std::invalid_argument);
}
