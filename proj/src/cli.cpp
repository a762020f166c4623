#include "pals/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pals/bench.hpp"
#include "pals/exact_oracles.hpp"
#include "pals/io.hpp"
#include "pals/pals_star.hpp"
#include "pals/transform.hpp"

namespace pals {

namespace {

using nlohmann::json;

json json_number_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

json report_to_json(const PatternReport& r) {
    json j;
    json patterns = json::array();
    for (const auto& p : r.patterns) patterns.push_back(p.render());
    j["algorithm"] = r.algorithm;
    j["patterns"] = patterns;
    j["sensitivity"] = r.sensitivity;
    j["ls"] = json_number_or_inf(r.ls);
    j["support"] = r.support;
    j["source_value"] = r.source_value;
    j["elapsed_s"] = r.elapsed_s;
    j["timings"] = r.phase_s;
    return j;
}

json heuristic_to_json(const HeuristicResult& h) {
    json j;
    j["algorithm"] = h.algorithm;
    j["value"] = h.value.symbols();
    j["length"] = h.value.length();
    j["seed"] = h.params.seed;
    j["fallback"] = h.fallback;
    j["elapsed_s"] = h.elapsed_s;
    return j;
}

json dataset_to_json(const Dataset& d) {
    json j;
    j["digest"] = dataset_digest_hex(d);
    j["n"] = d.size();
    j["alphabet"] = d.alphabet().symbols();
    j["mean_length"] = d.mean_length();
    return j;
}

struct OutputSink {
    std::string path;
    std::ostream& fallback;

    void write(const std::string& text) const {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw ParseError("cannot open '" + path + "' for writing");
        f << text;
    }
};

std::string tsv_line(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += '\t';
        line += c;
    }
    line += '\n';
    return line;
}

std::string fmt(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream s;
    s << v;
    return s.str();
}

std::string report_to_tsv(const PatternReport& r, const Dataset& d) {
    std::string out = tsv_line({"base", "n", "k", "patterns", "ls", "sensitivity", "time_s"});
    out += tsv_line({r.algorithm, std::to_string(d.size()),
                     std::to_string(static_cast<std::size_t>(d.mean_length())),
                     std::to_string(r.patterns.size()), fmt(r.ls), fmt(r.sensitivity),
                     fmt(r.elapsed_s)});
    out += tsv_line({"# pattern"});
    for (const auto& p : r.patterns) out += p.render() + "\n";
    return out;
}

json wrap(const std::string& command, std::uint64_t seed, const Dataset& d, json body) {
    json j;
    j["tool"] = {{"name", "pals"}, {"version", kToolVersion}};
    j["command"] = command;
    j["seed"] = seed;
    j["dataset"] = dataset_to_json(d);
    j["results"] = std::move(body);
    return j;
}

struct EvalCounters {
    std::size_t pass = 0;
    std::size_t fail = 0;

    void note(std::ostream& out, const std::string& name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << '\t' << name << '\n';
        ++(ok ? pass : fail);
    }
};

int run_eval(std::size_t trials, std::size_t max_seqs, std::size_t max_len,
             std::uint64_t seed, std::ostream& out) {
    OracleLimits limits;
    if (max_seqs > limits.max_sequences || max_len > limits.max_length) {
        throw std::invalid_argument("eval: requested size exceeds the oracle limits");
    }
    std::mt19937_64 rng(seed);
    EvalCounters counters;

    bool lcs_ok = true, scs_ok = true, sandwich_ok = true, pairwise_ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        const Alphabet alphabet = (t % 2 == 0) ? Alphabet("AC") : Alphabet::dna();
        std::uniform_int_distribution<std::size_t> nd(1, max_seqs), kd(0, max_len);
        std::uniform_int_distribution<std::size_t> cd(0, alphabet.size() - 1);
        std::vector<std::string> rows(nd(rng));
        for (auto& row : rows) {
            row.resize(kd(rng));
            for (auto& c : row) c = alphabet.symbols()[cd(rng)];
        }
        const Dataset d = Dataset::from_strings(alphabet, rows);

        const auto hl = heuristic_lcs(d);
        const auto hs = heuristic_scs(d);
        lcs_ok = lcs_ok && is_common_subsequence(d, hl.value.symbols());
        scs_ok = scs_ok && is_common_supersequence(d, hs.value.symbols());
        const auto bl = brute_lcs(d);
        const auto bs = brute_scs(d);
        sandwich_ok = sandwich_ok && hl.value.length() <= bl.size() &&
                      bs.size() <= hs.value.length() &&
                      hs.value.length() <= alphabet_supersequence(d).length();

        const std::string& a = d.sequences().front().symbols();
        const std::string& b = d.sequences().back().symbols();
        pairwise_ok = pairwise_ok && exact_scs_pair(a, b).size() + exact_lcs_pair(a, b).size() ==
                                         a.size() + b.size();
    }
    counters.note(out, "heuristic LCS outputs are common subsequences", lcs_ok);
    counters.note(out, "heuristic SCS outputs are common supersequences", scs_ok);
    counters.note(out, "heuristic lengths sit inside the exact bounds", sandwich_ok);
    counters.note(out, "pairwise |LCS|+|SCS| identity", pairwise_ok);

    out << counters.pass << " passed, " << counters.fail << " failed\n";
    return counters.fail == 0 ? 0 : 1;
}

std::string trend_to_tsv(const TrendResult& t) {
    std::string out =
        tsv_line({"base", "axis", "setting", "mean_ls", "mean_sensitivity", "mean_time_s"});
    for (const auto& p : t.points) {
        out += tsv_line({t.base, t.axis, fmt(p.setting), fmt(p.mean_ls),
                         fmt(p.mean_sensitivity), fmt(p.mean_time_s)});
    }
    out += tsv_line({"# sensitivity_ok", t.sensitivity_ok ? "true" : "false"});
    out += tsv_line({"# ls_trend_ok", t.ls_trend_ok ? "true" : "false"});
    return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern discovery from heuristic common sub/supersequences"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the verb

    std::uint64_t seed = 0;
    std::string alphabet_text;
    std::string format = "json";
    std::string out_path;
    app.add_option("--seed", seed, "Random seed")->envname("PALS_SEED");
    app.add_option("--alphabet", alphabet_text, "Expected alphabet, e.g. ACGT");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--out", out_path, "Write the report to this path");

    auto alphabet_opt = [&]() -> std::optional<Alphabet> {
        if (alphabet_text.empty()) return std::nullopt;
        return Alphabet(alphabet_text);
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Generate random FASTA datasets");
    std::size_t gen_n = 10, gen_k = 100, gen_reps = 1;
    gen->add_option("--n", gen_n, "Sequences per dataset");
    gen->add_option("--k", gen_k, "Sequence length");
    gen->add_option("--replicates", gen_reps, "Number of datasets");

    // verbs that read a dataset
    std::string in_path;
    std::size_t window = 0, growth = 4, pool_size = 8;
    std::string scs_algo = "depredn";
    std::string base_name = "lcs";
    double min_sensitivity = 1.0;
    std::size_t star_rounds = 64;
    std::string from_name = "scs";
    std::size_t refine_rounds = 4, refine_candidates = 3;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("-i,--in", in_path, "Input FASTA file")->required();
    };

    auto* lcs = app.add_subcommand("lcs", "Heuristic longest common subsequence");
    add_input(lcs);
    lcs->add_option("--window", window, "Deposition window (0 = 2|alphabet|)");
    lcs->add_option("--growth", growth, "Window doublings before giving up");

    auto* scs = app.add_subcommand("scs", "Heuristic shortest common supersequence");
    add_input(scs);
    scs->add_option("--algo", scs_algo, "Algorithm")
        ->check(CLI::IsMember({"alphabet", "sh", "mh", "depredn"}));
    scs->add_option("--pool-size", pool_size, "Template pool size");

    auto* pals_cmd = app.add_subcommand("pals", "Pattern discovery");
    add_input(pals_cmd);
    pals_cmd->add_option("--base", base_name, "Heuristic base")
        ->check(CLI::IsMember({"lcs", "scs"}));

    auto* star = app.add_subcommand("pals-star", "Pattern discovery with post-processing");
    add_input(star);
    star->add_option("--base", base_name, "Heuristic base")
        ->check(CLI::IsMember({"lcs", "scs"}));
    star->add_option("--min-sensitivity", min_sensitivity, "Sensitivity floor in (0,1]");
    star->add_option("--max-rounds", star_rounds, "Refinement round cap");

    auto* transform_cmd = app.add_subcommand("transform", "Transform between LCS and SCS");
    add_input(transform_cmd);
    transform_cmd->add_option("--from", from_name, "Source side")
        ->check(CLI::IsMember({"lcs", "scs"}));

    auto* refine_cmd = app.add_subcommand("refine", "Iterative LCS/SCS/pattern refinement");
    add_input(refine_cmd);
    refine_cmd->add_option("--rounds", refine_rounds, "Maximum rounds");
    refine_cmd->add_option("--candidates", refine_candidates, "Seeded candidates");

    auto* eval_cmd = app.add_subcommand("eval", "Check heuristics against exact oracles");
    std::size_t eval_trials = 50, eval_max_seqs = 3, eval_max_len = 10;
    eval_cmd->add_option("--trials", eval_trials, "Random instances");
    eval_cmd->add_option("--max-seqs", eval_max_seqs, "Sequences per instance");
    eval_cmd->add_option("--max-len", eval_max_len, "Maximum sequence length");

    auto* bench_cmd = app.add_subcommand("bench", "Trend harness over generated datasets");
    std::string bench_axis = "n";
    std::string bench_settings = "10,100";
    std::size_t bench_n = 10, bench_k = 100, bench_reps = 3;
    bench_cmd->add_option("--base", base_name, "Heuristic base")
        ->check(CLI::IsMember({"lcs", "scs"}));
    bench_cmd->add_option("--axis", bench_axis, "Swept axis")
        ->check(CLI::IsMember({"n", "k", "min_sensitivity"}));
    bench_cmd->add_option("--settings", bench_settings, "Comma-separated axis values");
    bench_cmd->add_option("--n", bench_n, "Sequences per dataset");
    bench_cmd->add_option("--k", bench_k, "Sequence length");
    bench_cmd->add_option("--replicates", bench_reps, "Datasets per setting");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        OutputSink sink{out_path, out};
        PalsParams params;
        params.deposition.seed = seed;
        params.deposition.window = window;
        params.deposition.max_window_growth = growth;
        params.pool_size = pool_size;
        const PalsBase base = base_name == "lcs" ? PalsBase::Lcs : PalsBase::Scs;

        auto emit_report = [&](const std::string& command, const Dataset& d,
                               const PatternReport& r) {
            if (format == "tsv") {
                sink.write(report_to_tsv(r, d));
            } else {
                sink.write(wrap(command, seed, d, json::array({report_to_json(r)})).dump(2) +
                           "\n");
            }
        };

        if (gen->parsed()) {
            GeneratorSpec spec{gen_n, gen_k,
                               alphabet_text.empty() ? Alphabet::dna() : Alphabet(alphabet_text),
                               seed, gen_reps};
            const auto datasets = generate(spec);
            if (datasets.size() == 1) {
                std::ostringstream buffer;
                write_fasta(buffer, datasets[0]);
                sink.write(buffer.str());
            } else {
                if (out_path.empty()) {
                    throw std::invalid_argument("gen: --out is required with --replicates > 1");
                }
                for (std::size_t r = 0; r < datasets.size(); ++r) {
                    write_fasta_file(out_path + ".r" + std::to_string(r), datasets[r]);
                }
            }
            return 0;
        }
        if (eval_cmd->parsed()) {
            return run_eval(eval_trials, eval_max_seqs, eval_max_len, seed, out);
        }

        if (lcs->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            const auto r = heuristic_lcs(d, params.deposition);
            sink.write(wrap("lcs", seed, d, json::array({heuristic_to_json(r)})).dump(2) + "\n");
            return 0;
        }
        if (scs->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            const HeuristicResult r = [&]() -> HeuristicResult {
                if (scs_algo == "alphabet") {
                    return {alphabet_supersequence(d), "alphabet", params.deposition, 0.0, false};
                }
                if (scs_algo == "sh") {
                    return {sum_height_merge(d), "sh", params.deposition, 0.0, false};
                }
                if (scs_algo == "mh") {
                    return {min_height_merge(d), "mh", params.deposition, 0.0, false};
                }
                return heuristic_scs(d, pool_size, seed);
            }();
            sink.write(wrap("scs", seed, d, json::array({heuristic_to_json(r)})).dump(2) + "\n");
            return 0;
        }
        if (pals_cmd->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            const PatternReport r = base == PalsBase::Lcs ? pals_lcs(d, params)
                                                          : pals_scs(d, params);
            emit_report("pals", d, r);
            return 0;
        }
        if (star->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            const PatternReport r =
                pals_star(d, base, StarParams{min_sensitivity, star_rounds}, params);
            emit_report("pals-star", d, r);
            return 0;
        }
        if (transform_cmd->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            json body = json::array();
            if (from_name == "scs") {
                const auto source = heuristic_scs(d, pool_size, seed);
                body.push_back({{"source", heuristic_to_json(source)},
                                {"result", heuristic_to_json(scs_to_lcs(d, source, params))}});
            } else {
                const auto source = heuristic_lcs(d, params.deposition);
                body.push_back({{"source", heuristic_to_json(source)},
                                {"result", heuristic_to_json(lcs_to_scs(d, source, params))}});
            }
            sink.write(wrap("transform", seed, d, std::move(body)).dump(2) + "\n");
            return 0;
        }
        if (refine_cmd->parsed()) {
            const Dataset d = read_fasta_file(in_path, alphabet_opt());
            const RefinementState state =
                refine(d, refine_rounds, refine_candidates, seed, params);
            json body;
            body["best_lcs"] = heuristic_to_json(state.best_lcs);
            body["best_scs"] = heuristic_to_json(state.best_scs);
            body["best_patterns"] = report_to_json(state.best_patterns);
            body["rounds"] = state.rounds;
            json lengths = json::array();
            for (auto [l, s] : state.round_lengths) {
                lengths.push_back({{"lcs", l}, {"scs", s}});
            }
            body["round_lengths"] = std::move(lengths);
            sink.write(wrap("refine", seed, d, std::move(body)).dump(2) + "\n");
            return 0;
        }
        if (bench_cmd->parsed()) {
            std::vector<double> settings;
            std::stringstream ss(bench_settings);
            for (std::string item; std::getline(ss, item, ',');) {
                settings.push_back(std::stod(item));
            }
            GeneratorSpec spec{bench_n, bench_k,
                               alphabet_text.empty() ? Alphabet::dna() : Alphabet(alphabet_text),
                               seed, bench_reps};
            const TrendResult t = run_trend(base, bench_axis, settings, spec, params);
            if (format == "tsv") {
                sink.write(trend_to_tsv(t));
            } else {
                json points = json::array();
                for (const auto& p : t.points) {
                    points.push_back({{"setting", p.setting},
                                      {"mean_ls", json_number_or_inf(p.mean_ls)},
                                      {"mean_sensitivity", p.mean_sensitivity},
                                      {"mean_time_s", p.mean_time_s}});
                }
                json j;
                j["tool"] = {{"name", "pals"}, {"version", kToolVersion}};
                j["command"] = "bench";
                j["seed"] = seed;
                j["base"] = t.base;
                j["axis"] = t.axis;
                j["points"] = std::move(points);
                j["sensitivity_ok"] = t.sensitivity_ok;
                j["ls_trend_ok"] = t.ls_trend_ok;
                sink.write(j.dump(2) + "\n");
            }
            return 0;
        }
        err << "error: no command given\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace pals
