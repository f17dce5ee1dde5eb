#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z4trace/trace_codes.hpp"

namespace z4trace {

// A bit word packed into 64-bit blocks, low index = low bit of block 0.
struct BitWord {
    std::vector<std::uint64_t> blocks;
    auto operator<=>(const BitWord&) const = default;
};

BitWord pack_bits(std::span<const std::uint8_t> bits);
std::uint32_t weight(const BitWord& w);
BitWord xor_words(const BitWord& a, const BitWord& b);
std::string to_hex(const BitWord& w, std::uint32_t length);

enum class Tri { Yes, No, Unknown };

const char* to_string(Tri t);

// Explicitly stored binary code, possibly nonlinear. `words` is sorted and
// deduplicated; `family_size` counts the generating family with
// multiplicity when the code came from a Z4 enumeration (0 otherwise).
struct BinaryCode {
    std::uint32_t length = 0;
    std::vector<BitWord> words;
    std::uint64_t family_size = 0;
    Tri linear = Tri::Unknown;
    std::optional<int> dimension;  // set when linear == Yes

    bool contains(const BitWord& w) const;
};

struct HammingWeightDistribution {
    std::map<std::uint32_t, std::uint64_t> counts;  // over the distinct word set
};

// Symbolwise Gray map r + 2q -> (q, r + q), concatenated: the q-vector
// then the (r+q)-vector. Doubles the length and turns Lee weight into
// Hamming weight.
std::vector<std::uint8_t> gray_map(std::span<const std::uint8_t> z4vec);

// phi(C) for the whole a-indexed family; family_size = 4^m.
BinaryCode gray_image(const TraceCode& code, const Budget& budget = Budget::from_env());

// XOR-closure on the stored word set.
bool is_linear_direct(const BinaryCode& code);

// phi(C) is linear iff 2(alpha * beta) in C for all codewords alpha, beta
// (componentwise product). Must agree with the direct method.
bool is_linear_z4_criterion(const TraceCode& code, const Budget& budget = Budget::from_env());

// C mod 2, deduplicated; always linear.
BinaryCode residue_code(const TraceCode& code, const Budget& budget = Budget::from_env());

// { x : 2x in C }; always linear.
BinaryCode torsion_code(const TraceCode& code, const Budget& budget = Budget::from_env());

std::uint64_t griesmer_bound(int k, std::uint64_t d, int q);
bool meets_griesmer(std::uint64_t n, int k, std::uint64_t d, int q);

// Minimum pairwise Hamming distance; equals the minimum nonzero weight
// when the code is linear. Throws EmptyCode on an empty word set; a
// single-word code reports 0.
std::uint32_t min_distance(const BinaryCode& code);

HammingWeightDistribution weight_distribution(const BinaryCode& code);

int gf2_rank(const std::vector<BitWord>& words);

// True iff the code has dimension m and every nonzero word has weight
// exactly 2^(2m-2), the constant-weight signature of 2^(m-1) stacked
// copies of the [2^m-1, m, 2^(m-1)] simplex code.
bool simplex_replication_check(const BinaryCode& tor, int m);

}  // namespace z4trace
