#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "z4trace/gf2m.hpp"
#include "z4trace/gr4m.hpp"

// Hot loops, each in two flavors: an OpenMP-parallel kernel used by the
// library and a straightforward serial reference kept as the test oracle.
// Results are exact integers and independent of the thread count.
namespace z4trace::kernels {

// Lee-weight histogram of the trace code with defining multiset D: entry w
// counts the a in R whose codeword (Tr(a d_1), ..., Tr(a d_n)) has Lee
// weight w. Size 2n+1.
std::vector<std::uint64_t> lee_weight_histogram(const GaloisRing& ring,
                                                std::span<const RingElem> d);
std::vector<std::uint64_t> lee_weight_histogram_serial(const GaloisRing& ring,
                                                       std::span<const RingElem> d);

// Codewords of the basis monomials: rows[j][i] = Tr(xi^j * d_i). Any
// codeword is the Z4 digit combination of these rows.
std::vector<std::vector<std::uint8_t>> generator_rows(const GaloisRing& ring,
                                                      std::span<const RingElem> d);
std::vector<std::uint8_t> combine_rows(const std::vector<std::vector<std::uint8_t>>& rows,
                                       RingElem a);

// Walsh-Hadamard spectrum indexed by w (field element index):
// W[w] = sum_x (-1)^(f(x) + tr(wx)). The fast version runs the butterfly
// over bit indices and reindexes through the trace form; at the supported
// sizes (m <= 12) it needs no threading to beat the naive sum.
std::vector<std::int32_t> walsh_spectrum(const BinaryField& field,
                                         std::span<const std::uint8_t> table);
std::vector<std::int32_t> walsh_spectrum_serial(const BinaryField& field,
                                                std::span<const std::uint8_t> table);

// Minimum pairwise Hamming distance over distinct words; words are packed
// in consecutive runs of `blocks` 64-bit limbs. Requires >= 2 words.
std::uint32_t min_pairwise_distance(std::span<const std::uint64_t> flat,
                                    std::size_t word_count, std::size_t blocks);
std::uint32_t min_pairwise_distance_serial(std::span<const std::uint64_t> flat,
                                           std::size_t word_count, std::size_t blocks);

}  // namespace z4trace::kernels
