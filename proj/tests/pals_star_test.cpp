#include <doctest.h>

#include <queue>
#include <stdexcept>
#include <random>
#include <set>

#include "helpers.hpp"
#include "pals/pals_star.hpp"

using namespace pals;
using namespace pals::testing;

namespace {

Pattern pat(const std::string& text, const std::string& alphabet = "ACGT") {
    return Pattern::parse(text, Alphabet(alphabet));
}

// Breadth-first reachability in the move graph under a support floor.
bool reachable(const Dataset& d, const Pattern& from, const std::string& target,
               std::size_t m, std::size_t depth) {
    std::set<std::string> seen{from.render()};
    std::queue<std::pair<Pattern, std::size_t>> frontier;
    frontier.emplace(from, 0);
    while (!frontier.empty()) {
        auto [p, dist] = frontier.front();
        frontier.pop();
        if (p.render() == target) return true;
        if (dist == depth) continue;
        for (const Pattern& q : refinement_moves(p)) {
            if (support_count(d, q) < m) continue;
            if (seen.insert(q.render()).second) frontier.emplace(q, dist + 1);
        }
    }
    return false;
}

}  // namespace

TEST_CASE("support floor derivation") {
    StarParams sp;
    CHECK(sp.support_floor(10) == 10);
    sp.min_sensitivity = 0.9;
    CHECK(sp.support_floor(10) == 9);
    CHECK(sp.support_floor(100) == 90);
    sp.min_sensitivity = 2.0 / 3.0;
    CHECK(sp.support_floor(3) == 2);
    sp.min_sensitivity = 0.0;
    CHECK_THROWS_AS(sp.support_floor(3), std::invalid_argument);
}

TEST_CASE("remove_redundant_stars worked examples") {
    CHECK(remove_redundant_stars(dataset("X", {"X"}), pat("*X*", "X"), StarParams{1.0})
              .render() == "X");
    const Dataset d = dataset("ABX", {"AB", "AXB"});
    CHECK(remove_redundant_stars(d, pat("*A*B*", "ABX"), StarParams{1.0}).render() == "A*B");
    // Fixpoint: nothing removable without dropping support.
    const Dataset mix = dataset("ABX", {"AXB", "BXA"});
    CHECK(remove_redundant_stars(mix, pat("*A*", "ABX"), StarParams{1.0}).render() == "*A*");
}

TEST_CASE("swap_merge_stars worked examples") {
    const Dataset d = dataset("AXY", {"AX", "AY"});
    CHECK(swap_merge_stars(d, pat("*A*", "AXY"), StarParams{1.0}).render() == "A*");
    const Dataset blocked = dataset("AXY", {"XA", "AY"});
    CHECK(swap_merge_stars(blocked, pat("*A*", "AXY"), StarParams{1.0}).render() == "*A*");
}

TEST_CASE("swap_merge never raises the star count") {
    std::mt19937_64 rng(131);
    for (int t = 0; t < 60; ++t) {
        const Dataset d = random_dataset(rng, "AC", 5, 8, 1);
        std::vector<PatternToken> tokens{PatternToken::star()};
        for (int i = 0; i < 3; ++i) {
            tokens.push_back(PatternToken::text(random_string(rng, "AC", 1, 1)));
            tokens.push_back(PatternToken::star());
        }
        Pattern p = Pattern::from_tokens(tokens, Alphabet("AC"));
        const std::size_t m = support_count(d, p);
        if (m == 0) continue;
        const StarParams sp{static_cast<double>(m) / static_cast<double>(d.size())};
        const Pattern q = swap_merge_stars(d, p, sp);
        CHECK(q.star_count() <= p.star_count());
        CHECK(support_count(d, q) >= m);
    }
}

TEST_CASE("pd_refine specializes the universal pattern to the exact string") {
    const Dataset d = dataset("AC", {"AA", "AA"});
    CHECK(pd_refine(d, Pattern::universal(d.alphabet()), StarParams{1.0}).render() == "AA");
}

TEST_CASE("pd_refine leaves a maximal pattern unchanged") {
    const Dataset d = dataset("ACGT", {"GAT"});
    CHECK(pd_refine(d, pat("GAT"), StarParams{1.0}).render() == "GAT");
}

TEST_CASE("pd_refine reaches the literal-core pattern when one mismatch is allowed") {
    // One allowed mismatch = floor 2/3. The target *CGT* keeps two of the
    // three sequences and is the refinement fixpoint here.
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CGTC"});
    const StarParams sp{2.0 / 3.0};
    CHECK(support_count(d, pat("*CGT*")) == 2);
    CHECK(reachable(d, pat("*C*G*"), "*CGT*", sp.support_floor(3), 4));
    CHECK(pd_refine(d, pat("*C*G*"), sp).render() == "*CGT*");
}

TEST_CASE("pd_refine keeps the support floor and never loosens the estimate") {
    std::mt19937_64 rng(137);
    for (int t = 0; t < 40; ++t) {
        const Dataset d = random_dataset(rng, "AC", 6, 10, 1);
        const LanguageModel model = LanguageModel::for_dataset(d);
        const Pattern start = Pattern::universal(d.alphabet());
        for (double floor : {1.0, 0.8}) {
            const StarParams sp{floor};
            const Pattern q = pd_refine(d, start, sp);
            CHECK(support_count(d, q) >= sp.support_floor(d.size()));
            CHECK(log10_language_size(q, model) <=
                  log10_language_size(start, model) + 1e-9);
        }
    }
}

TEST_CASE("pals_star collapses identical sequences to the literal sequence") {
    const Dataset d = dataset("ACGT", {"GATC", "GATC", "GATC"});
    const PatternReport r = pals_star(d, PalsBase::Lcs, StarParams{1.0});
    REQUIRE(r.patterns.size() == 1);
    CHECK(r.patterns.front().render() == "GATC");
    CHECK(r.sensitivity == doctest::Approx(1.0));
}

TEST_CASE("pals_star with floor 1 keeps full sensitivity on random data") {
    std::mt19937_64 rng(139);
    for (int t = 0; t < 25; ++t) {
        const Dataset d = random_dataset(rng, "ACGT", 6, 12, 1);
        for (PalsBase base : {PalsBase::Lcs, PalsBase::Scs}) {
            const PatternReport r = pals_star(d, base, StarParams{1.0});
            CHECK(r.sensitivity == doctest::Approx(1.0));
            CHECK(r.support == d.size());
            for (const auto& p : r.patterns) {
                for (const auto& s : d.sequences()) CHECK(pattern_matches(p, s));
            }
        }
    }
}

TEST_CASE("pals_star never scores worse than pals and improves with looser floors") {
    std::mt19937_64 rng(149);
    for (int t = 0; t < 12; ++t) {
        const Dataset d = random_dataset(rng, "ACGT", 8, 14, 4);
        for (PalsBase base : {PalsBase::Lcs, PalsBase::Scs}) {
            const PatternReport plain =
                base == PalsBase::Lcs ? pals_lcs(d) : pals_scs(d);
            double prev_ls = plain.ls;
            for (double floor : {1.0, 0.9, 0.8}) {
                const PatternReport starred = pals_star(d, base, StarParams{floor});
                CHECK(starred.ls <= plain.ls + 1e-9);
                CHECK(starred.ls <= prev_ls + 1e-9);
                CHECK(starred.sensitivity >= floor - 1e-9);
                prev_ls = starred.ls;
            }
        }
    }
}
