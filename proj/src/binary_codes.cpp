#include "z4trace/binary_codes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "z4trace/kernels.hpp"

namespace z4trace {

const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

BitWord pack_bits(std::span<const std::uint8_t> bits) {
    BitWord w;
    w.blocks.assign((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) w.blocks[i / 64] |= 1ull << (i % 64);
    return w;
}

std::uint32_t weight(const BitWord& w) {
    std::uint32_t s = 0;
    for (auto b : w.blocks) s += static_cast<std::uint32_t>(std::popcount(b));
    return s;
}

BitWord xor_words(const BitWord& a, const BitWord& b) {
    assert(a.blocks.size() == b.blocks.size());
    BitWord r = a;
    for (std::size_t i = 0; i < r.blocks.size(); ++i) r.blocks[i] ^= b.blocks[i];
    return r;
}

std::string to_hex(const BitWord& w, std::uint32_t length) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::uint32_t k = 0; k < length; k += 4) {
        int nib = 0;
        for (std::uint32_t b = 0; b < 4; ++b) {
            std::uint32_t i = k + b;
            int bit = 0;
            if (i < length) bit = (w.blocks[i / 64] >> (i % 64)) & 1;
            nib = (nib << 1) | bit;
        }
        out += digits[nib];
    }
    return out;
}

bool BinaryCode::contains(const BitWord& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

std::vector<std::uint8_t> gray_map(std::span<const std::uint8_t> z4vec) {
    std::size_t n = z4vec.size();
    std::vector<std::uint8_t> bits(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t r = z4vec[i] & 1;
        std::uint8_t q = (z4vec[i] >> 1) & 1;
        bits[i] = q;
        bits[n + i] = r ^ q;
    }
    return bits;
}

namespace {

void check_budget(const TraceCode& code, const Budget& budget) {
    int cap = budget.cap_for(code.defining_set().kind);
    if (code.ring().m() > cap)
        throw BudgetExceeded("codebook enumeration capped at m = " + std::to_string(cap) +
                             " (set Z4TRACE_MAX_ENUM_M to override)");
}

// Stream all 4^m codewords without materializing the full list.
template <typename Fn>
void for_each_codeword(const TraceCode& code, Fn fn) {
    auto rows = kernels::generator_rows(code.ring(), code.defining_set().elements);
    for (std::uint32_t v = 0; v < code.ring().size(); ++v)
        fn(kernels::combine_rows(rows, RingElem{v}));
}

void sort_dedup(std::vector<BitWord>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

BinaryCode gray_image(const TraceCode& code, const Budget& budget) {
    check_budget(code, budget);
    BinaryCode out;
    out.length = 2 * code.n();
    out.family_size = code.ring().size();
    out.words.reserve(code.ring().size());
    for_each_codeword(code,
                      [&](const auto& cw) { out.words.push_back(pack_bits(gray_map(cw))); });
    sort_dedup(out.words);
    return out;
}

bool is_linear_direct(const BinaryCode& code) {
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            if (!code.contains(xor_words(code.words[i], code.words[j]))) return false;
    return true;
}

bool is_linear_z4_criterion(const TraceCode& code, const Budget& budget) {
    check_budget(code, budget);
    std::vector<std::vector<std::uint8_t>> dedup;
    for_each_codeword(code, [&](const auto& cw) { dedup.push_back(cw); });
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());

    const std::size_t n = code.n();
    std::vector<std::uint8_t> prod(n);
    for (std::size_t i = 0; i < dedup.size(); ++i) {
        for (std::size_t j = i; j < dedup.size(); ++j) {
            for (std::size_t k = 0; k < n; ++k)
                prod[k] = static_cast<std::uint8_t>((2u * dedup[i][k] * dedup[j][k]) & 3u);
            if (!std::binary_search(dedup.begin(), dedup.end(), prod)) return false;
        }
    }
    return true;
}

BinaryCode residue_code(const TraceCode& code, const Budget& budget) {
    check_budget(code, budget);
    // c_a mod 2 = (tr(abar dbar_i))_i depends only on the residue of a.
    const GaloisRing& ring = code.ring();
    const BinaryField& field = ring.field();
    std::vector<FieldElem> dbar;
    for (RingElem d : code.defining_set().elements) dbar.push_back(ring.reduce_mod2(d));

    BinaryCode out;
    out.length = code.n();
    std::vector<std::uint8_t> bits(code.n());
    for (FieldElem b = 0; b < field.size(); ++b) {
        for (std::size_t i = 0; i < dbar.size(); ++i)
            bits[i] = static_cast<std::uint8_t>(field.trace(field.mul(b, dbar[i])));
        out.words.push_back(pack_bits(bits));
    }
    sort_dedup(out.words);
    out.linear = Tri::Yes;
    out.dimension = gf2_rank(out.words);
    return out;
}

BinaryCode torsion_code(const TraceCode& code, const Budget& budget) {
    check_budget(code, budget);
    BinaryCode out;
    out.length = code.n();
    std::vector<std::uint8_t> bits(code.n());
    for_each_codeword(code, [&](const auto& cw) {
        for (std::uint8_t s : cw)
            if (s & 1) return;
        for (std::size_t i = 0; i < cw.size(); ++i) bits[i] = (cw[i] >> 1) & 1;
        out.words.push_back(pack_bits(bits));
    });
    sort_dedup(out.words);
    out.linear = Tri::Yes;
    out.dimension = gf2_rank(out.words);
    return out;
}

std::uint64_t griesmer_bound(int k, std::uint64_t d, int q) {
    if (k < 1 || d < 1 || q < 2) throw std::invalid_argument("griesmer_bound needs k,d >= 1, q >= 2");
    std::uint64_t sum = 0;
    std::uint64_t qi = 1;
    for (int i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;  // ceil(d / q^i)
        qi *= static_cast<std::uint64_t>(q);
    }
    return sum;
}

bool meets_griesmer(std::uint64_t n, int k, std::uint64_t d, int q) {
    return n == griesmer_bound(k, d, q);
}

std::uint32_t min_distance(const BinaryCode& code) {
    if (code.words.empty()) throw EmptyCode("minimum distance of an empty code");
    if (code.words.size() == 1) return 0;
    if (code.linear == Tri::Yes) {
        std::uint32_t best = UINT32_MAX;
        for (const auto& w : code.words) {
            std::uint32_t wt = weight(w);
            if (wt > 0) best = std::min(best, wt);
        }
        return best == UINT32_MAX ? 0 : best;
    }
    std::size_t blocks = code.words[0].blocks.size();
    std::vector<std::uint64_t> flat;
    flat.reserve(code.words.size() * blocks);
    for (const auto& w : code.words)
        flat.insert(flat.end(), w.blocks.begin(), w.blocks.end());
    return kernels::min_pairwise_distance(flat, code.words.size(), blocks);
}

HammingWeightDistribution weight_distribution(const BinaryCode& code) {
    HammingWeightDistribution dist;
    for (const auto& w : code.words) ++dist.counts[weight(w)];
    return dist;
}

int gf2_rank(const std::vector<BitWord>& words) {
    auto leading = [](const BitWord& w) -> int {
        for (int b = static_cast<int>(w.blocks.size()) - 1; b >= 0; --b)
            if (w.blocks[b]) return b * 64 + 63 - std::countl_zero(w.blocks[b]);
        return -1;
    };
    std::map<int, BitWord> basis;  // leading bit -> reduced row
    int rank = 0;
    for (const auto& w : words) {
        BitWord cur = w;
        int lead;
        while ((lead = leading(cur)) >= 0) {
            auto it = basis.find(lead);
            if (it == basis.end()) {
                basis.emplace(lead, cur);
                ++rank;
                break;
            }
            cur = xor_words(cur, it->second);
        }
    }
    return rank;
}

bool simplex_replication_check(const BinaryCode& tor, int m) {
    if (tor.linear != Tri::Yes || !tor.dimension || *tor.dimension != m) return false;
    std::uint32_t want = 1u << (2 * m - 2);
    for (const auto& w : tor.words) {
        std::uint32_t wt = weight(w);
        if (wt != 0 && wt != want) return false;
    }
    return true;
}

}  // namespace z4trace
