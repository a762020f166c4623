#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "pals/cli.hpp"
#include "pals/io.hpp"
#include "pals/metrics.hpp"

using namespace pals;
using namespace pals::testing;
using nlohmann::json;

namespace {

Dataset parse(const std::string& text) {
    std::istringstream in(text);
    return read_fasta(in, std::nullopt, "test.fa");
}

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_fasta(const std::string& name, const Dataset& d) {
    const auto path = std::filesystem::temp_directory_path() / name;
    write_fasta_file(path, d);
    return path;
}

json strip_timings(json j) {
    j.erase("seed");
    for (auto& r : j["results"]) {
        r.erase("elapsed_s");
        r.erase("timings");
    }
    return j;
}

}  // namespace

TEST_CASE("fasta parsing worked examples") {
    const Dataset one = parse(">s1\nACGT\n");
    CHECK(one.size() == 1);
    CHECK(one.sequences().front().symbols() == "ACGT");

    const Dataset multi = parse(">s1\nACG\nT\nGG\n");
    CHECK(multi.sequences().front().symbols() == "ACGTGG");

    const Dataset lower = parse(">s1\nacgt\n");
    CHECK(lower.sequences().front().symbols() == "ACGT");
}

TEST_CASE("fasta errors carry line numbers") {
    auto message = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("ACGT\n").find("test.fa:1") == 0);
    CHECK(message(">\nACGT\n").find("test.fa:1") == 0);
    CHECK(message("").find("no FASTA records") != std::string::npos);
    CHECK(message(">s1\nAC*T\n").find("test.fa:2") == 0);

    std::istringstream in(">s1\nACGU\n");
    CHECK_THROWS_AS(read_fasta(in, Alphabet("ACGT"), "x.fa"), ParseError);
}

TEST_CASE("fasta round-trips") {
    const Dataset d = dataset("ACGT", {"ACGT", "", "GATTACA"});
    std::ostringstream out;
    write_fasta(out, d);
    // An empty record has no symbols to infer from; pin the alphabet.
    std::istringstream in(out.str());
    const Dataset back = read_fasta(in, Alphabet("ACGT"));
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(back.sequences()[i].id() == d.sequences()[i].id());
        CHECK(back.sequences()[i].symbols() == d.sequences()[i].symbols());
    }
}

TEST_CASE("generator is deterministic and respects its spec") {
    GeneratorSpec spec;
    spec.n = 10;
    spec.k = 100;
    spec.seed = 1;
    spec.replicates = 10;
    const auto a = generate(spec);
    const auto b = generate(spec);
    REQUIRE(a.size() == 10);
    for (std::size_t r = 0; r < a.size(); ++r) {
        CHECK(a[r].size() == 10);
        for (std::size_t i = 0; i < a[r].size(); ++i) {
            CHECK(a[r].sequences()[i].length() == 100);
            CHECK(a[r].sequences()[i].symbols() == b[r].sequences()[i].symbols());
        }
    }
    CHECK(dataset_digest(a[0]) != dataset_digest(a[1]));

    GeneratorSpec mono = spec;
    mono.alphabet = Alphabet("A");
    mono.replicates = 1;
    CHECK(generate(mono)[0].sequences()[0].symbols() == std::string(100, 'A'));
}

TEST_CASE("cli pals json golden run") {
    const auto path = temp_fasta("pals_golden.fa", dataset("ACGT", {"ACGT", "CGGT", "CGTC"}));
    const CliRun run = cli({"pals", "--base", "lcs", "-i", path.string(), "--format", "json"});
    REQUIRE(run.status == 0);
    const json j = json::parse(run.out);
    CHECK(j["results"][0]["patterns"] == json::array({"*CG*T*"}));
    CHECK(j["results"][0]["sensitivity"] == 1.0);
    CHECK(std::abs(j["results"][0]["ls"].get<double>() + std::log10(0.75)) < 1e-9);
}

TEST_CASE("cli reports are reproducible modulo timings") {
    const auto path = temp_fasta("pals_repro.fa", dataset("ACGT", {"ACGT", "CGGT", "CTGC"}));
    const CliRun a = cli({"pals", "--base", "scs", "-i", path.string(), "--seed", "3"});
    const CliRun b = cli({"pals", "--base", "scs", "-i", path.string(), "--seed", "3"});
    REQUIRE(a.status == 0);
    CHECK(strip_timings(json::parse(a.out)) == strip_timings(json::parse(b.out)));
}

TEST_CASE("cli report metrics are recomputable from the dataset") {
    const Dataset d = dataset("ACGT", {"ACGT", "CGGT", "CGTC"});
    const auto path = temp_fasta("pals_recompute.fa", d);
    const CliRun run = cli({"pals-star", "--base", "lcs", "-i", path.string(),
                            "--min-sensitivity", "0.9"});
    REQUIRE(run.status == 0);
    const json j = json::parse(run.out);
    CHECK(j["dataset"]["digest"] == dataset_digest_hex(d));
    std::vector<Pattern> ps;
    for (const auto& text : j["results"][0]["patterns"]) {
        ps.push_back(Pattern::parse(text.get<std::string>(), d.alphabet()));
    }
    CHECK(j["results"][0]["sensitivity"].get<double>() ==
          doctest::Approx(sensitivity(d, ps)));
    CHECK(j["results"][0]["ls"].get<double>() ==
          doctest::Approx(ls_score(d, ps, LanguageModel::for_dataset(d))));
}

TEST_CASE("cli gen emits deterministic fasta") {
    const CliRun a = cli({"gen", "--n", "4", "--k", "12", "--seed", "5"});
    const CliRun b = cli({"gen", "--n", "4", "--k", "12", "--seed", "5"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    const Dataset d = read_fasta(in);
    CHECK(d.size() == 4);
    CHECK(d.sequences().front().length() == 12);
}

TEST_CASE("cli eval reports a pass table") {
    const CliRun run = cli({"eval", "--trials", "20", "--max-len", "8", "--seed", "2"});
    CHECK(run.status == 0);
    CHECK(run.out.find("PASS") != std::string::npos);
    CHECK(run.out.find("FAIL") == std::string::npos);

    const CliRun over = cli({"eval", "--max-len", "40"});
    CHECK(over.status != 0);
    CHECK(over.err.find("oracle limits") != std::string::npos);
}

TEST_CASE("cli rejects unknown verbs and missing files") {
    CHECK(cli({"frobnicate"}).status != 0);
    CHECK(cli({"pals", "-i", "/nonexistent/file.fa"}).status == 1);
    CHECK(cli({}).status != 0);
}

TEST_CASE("cli transform and refine verbs run end to end") {
    const auto path = temp_fasta("transform.fa", dataset("ACGT", {"ACGT", "CGGT", "CTGC"}));
    const CliRun t = cli({"transform", "--from", "scs", "-i", path.string()});
    REQUIRE(t.status == 0);
    const json tj = json::parse(t.out);
    CHECK(tj["results"][0]["result"]["value"].is_string());

    const CliRun r = cli({"refine", "--rounds", "3", "--candidates", "2", "-i", path.string()});
    REQUIRE(r.status == 0);
    const json rj = json::parse(r.out);
    CHECK(rj["results"]["rounds"].get<int>() >= 1);
}
