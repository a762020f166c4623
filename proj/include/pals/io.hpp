#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pals/seqcore.hpp"

namespace pals {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FASTA reader: '>' headers become ids, body lines concatenate and uppercase.
// Without an explicit alphabet the symbol set is inferred (sorted, distinct).
// Malformed input reports the offending line number.
Dataset read_fasta(std::istream& in, const std::optional<Alphabet>& alphabet = {},
                   const std::string& source_name = "<stream>");
Dataset read_fasta_file(const std::filesystem::path& path,
                        const std::optional<Alphabet>& alphabet = {});

void write_fasta(std::ostream& out, const Dataset& d);
void write_fasta_file(const std::filesystem::path& path, const Dataset& d);

struct GeneratorSpec {
    std::size_t n = 1;
    std::size_t k = 1;
    Alphabet alphabet = Alphabet::dna();
    std::uint64_t seed = 0;
    std::size_t replicates = 1;
};

// Uniform i.i.d. sequences, byte-deterministic for a fixed spec.
std::vector<Dataset> generate(const GeneratorSpec& spec);

// FNV-1a over alphabet, ids and symbols; stable across platforms.
std::uint64_t dataset_digest(const Dataset& d);
std::string dataset_digest_hex(const Dataset& d);

}  // namespace pals
