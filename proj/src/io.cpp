#include "pals/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace pals {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Dataset read_fasta(std::istream& in, const std::optional<Alphabet>& alphabet,
                   const std::string& source_name) {
    std::vector<std::pair<std::string, std::string>> records;  // id, symbols
    std::vector<std::size_t> record_lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            std::string id = line.substr(1);
            const auto first = id.find_first_not_of(" \t");
            id = first == std::string::npos ? std::string() : id.substr(first);
            if (id.empty()) fail(source_name, lineno, "empty FASTA header");
            records.emplace_back(id, "");
            record_lines.push_back(lineno);
        } else {
            if (records.empty()) {
                fail(source_name, lineno, "sequence data before the first '>' header");
            }
            for (char& c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    fail(source_name, lineno, "whitespace inside sequence data");
                }
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                if (c == kWildcard) {
                    fail(source_name, lineno, "'*' is reserved and cannot appear in sequences");
                }
                if (alphabet && !alphabet->contains(c)) {
                    fail(source_name, lineno,
                         std::string("symbol '") + c + "' not in the declared alphabet");
                }
            }
            records.back().second += line;
        }
    }
    if (records.empty()) fail(source_name, lineno, "no FASTA records found");

    Alphabet effective = [&] {
        if (alphabet) return *alphabet;
        std::set<char> symbols;
        for (const auto& [id, seq] : records) symbols.insert(seq.begin(), seq.end());
        if (symbols.empty()) {
            fail(source_name, lineno, "cannot infer an alphabet from empty sequences");
        }
        return Alphabet(std::string(symbols.begin(), symbols.end()));
    }();

    std::vector<Sequence> seqs;
    seqs.reserve(records.size());
    for (auto& [id, seq] : records) {
        seqs.emplace_back(std::move(id), std::move(seq), effective);
    }
    return Dataset(std::move(effective), std::move(seqs));
}

Dataset read_fasta_file(const std::filesystem::path& path,
                        const std::optional<Alphabet>& alphabet) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return read_fasta(in, alphabet, path.string());
}

void write_fasta(std::ostream& out, const Dataset& d) {
    for (const auto& s : d.sequences()) {
        out << '>' << s.id() << '\n' << s.symbols() << '\n';
    }
}

void write_fasta_file(const std::filesystem::path& path, const Dataset& d) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
    write_fasta(out, d);
}

std::vector<Dataset> generate(const GeneratorSpec& spec) {
    if (spec.n < 1 || spec.k < 1 || spec.replicates < 1) {
        throw std::invalid_argument("generator spec fields must be >= 1");
    }
    std::mt19937_64 rng(spec.seed);
    const std::string& sigma = spec.alphabet.symbols();
    std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);

    std::vector<Dataset> out;
    out.reserve(spec.replicates);
    for (std::size_t r = 0; r < spec.replicates; ++r) {
        std::vector<Sequence> seqs;
        seqs.reserve(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::string symbols(spec.k, sigma[0]);
            for (auto& c : symbols) c = sigma[pick(rng)];
            seqs.emplace_back("s" + std::to_string(i + 1), std::move(symbols),
                              spec.alphabet);
        }
        out.emplace_back(spec.alphabet, std::move(seqs));
    }
    return out;
}

std::uint64_t dataset_digest(const Dataset& d) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= 0x1f;
        h *= 1099511628211ULL;
    };
    mix(d.alphabet().symbols());
    for (const auto& s : d.sequences()) {
        mix(s.id());
        mix(s.symbols());
    }
    return h;
}

std::string dataset_digest_hex(const Dataset& d) {
    std::ostringstream out;
    out << "fnv1a:" << std::hex << dataset_digest(d);
    return out.str();
}

}  // namespace pals
