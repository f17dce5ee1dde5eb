#include "z4trace/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace z4trace::kernels {

namespace {

constexpr std::uint8_t kLee[4] = {0, 1, 2, 1};

// Advance the codeword of index a to index a+1. Incrementing a base-4
// counter turns a run of trailing 3s into 0s (digit delta -3 == +1 mod 4)
// and bumps the next digit by +1, so the update adds one generator row per
// touched digit. Returns the new Lee weight.
inline std::uint32_t step_codeword(std::uint8_t* sym, std::uint8_t* dig, int m,
                                   const std::vector<std::vector<std::uint8_t>>& rows,
                                   std::size_t n, std::uint32_t weight) {
    for (int j = 0; j < m; ++j) {
        const std::uint8_t* row = rows[j].data();
        for (std::size_t i = 0; i < n; ++i) {
            std::uint8_t s = static_cast<std::uint8_t>((sym[i] + row[i]) & 3u);
            weight += kLee[s] - kLee[sym[i]];
            sym[i] = s;
        }
        if (dig[j] != 3) {
            ++dig[j];
            break;
        }
        dig[j] = 0;
    }
    return weight;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> generator_rows(const GaloisRing& ring,
                                                      std::span<const RingElem> d) {
    std::vector<std::vector<std::uint8_t>> rows(ring.m());
    for (int j = 0; j < ring.m(); ++j) {
        RingElem basis{1u << (2 * j)};
        rows[j].resize(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            rows[j][i] = static_cast<std::uint8_t>(ring.gen_trace(ring.mul(basis, d[i])));
    }
    return rows;
}

std::vector<std::uint8_t> combine_rows(const std::vector<std::vector<std::uint8_t>>& rows,
                                       RingElem a) {
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<std::uint8_t> sym(n, 0);
    std::uint32_t v = a.v;
    for (const auto& row : rows) {
        unsigned digit = v & 3u;
        v >>= 2;
        if (digit == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            sym[i] = static_cast<std::uint8_t>((sym[i] + digit * row[i]) & 3u);
    }
    return sym;
}

std::vector<std::uint64_t> lee_weight_histogram_serial(const GaloisRing& ring,
                                                       std::span<const RingElem> d) {
    std::vector<std::uint64_t> hist(2 * d.size() + 1, 0);
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        RingElem a{v};
        std::uint32_t w = 0;
        for (RingElem di : d) w += kLee[ring.gen_trace(ring.mul(a, di))];
        ++hist[w];
    }
    return hist;
}

std::vector<std::uint64_t> lee_weight_histogram(const GaloisRing& ring,
                                                std::span<const RingElem> d) {
    const std::size_t n = d.size();
    const std::uint32_t total = ring.size();
    const int m = ring.m();
    auto rows = generator_rows(ring, d);

    // Fixed chunking keeps the result independent of the thread count.
    const std::uint32_t chunks = total >= 4096 ? 256 : 1;
    const std::uint32_t per_chunk = total / chunks;
    std::vector<std::vector<std::uint64_t>> partial(chunks);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        std::vector<std::uint64_t> hist(2 * n + 1, 0);
        const std::uint32_t begin = static_cast<std::uint32_t>(c) * per_chunk;
        const std::uint32_t end = begin + per_chunk;

        std::vector<std::uint8_t> sym = combine_rows(rows, RingElem{begin});
        std::uint8_t dig[BinaryField::kMaxDegree] = {0};
        std::uint32_t v = begin;
        for (int j = 0; j < m; ++j, v >>= 2) dig[j] = static_cast<std::uint8_t>(v & 3u);

        std::uint32_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) weight += kLee[sym[i]];
        ++hist[weight];
        for (std::uint32_t idx = begin + 1; idx < end; ++idx) {
            weight = step_codeword(sym.data(), dig, m, rows, n, weight);
            ++hist[weight];
        }
        partial[c] = std::move(hist);
    }

    std::vector<std::uint64_t> hist(2 * n + 1, 0);
    for (const auto& part : partial)
        for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += part[w];
    return hist;
}

std::vector<std::int32_t> walsh_spectrum_serial(const BinaryField& field,
                                                std::span<const std::uint8_t> table) {
    const std::uint32_t size = field.size();
    std::vector<std::int32_t> spec(size, 0);
    for (FieldElem w = 0; w < size; ++w) {
        std::int32_t s = 0;
        for (FieldElem x = 0; x < size; ++x)
            s += ((table[x] ^ field.trace(field.mul(w, x))) & 1) ? -1 : 1;
        spec[w] = s;
    }
    return spec;
}

std::vector<std::int32_t> walsh_spectrum(const BinaryField& field,
                                         std::span<const std::uint8_t> table) {
    const int m = field.m();
    const std::uint32_t size = field.size();

    // Butterfly over bit indices, then reindex: tr(wx) = <u(w), x> with
    // u(w)_j = tr(w x^j), linear in w.
    std::vector<std::int32_t> f(size);
    for (FieldElem x = 0; x < size; ++x) f[x] = table[x] ? -1 : 1;
    for (std::uint32_t half = 1; half < size; half <<= 1) {
        for (std::uint32_t base = 0; base < size; base += 2 * half) {
            for (std::uint32_t i = 0; i < half; ++i) {
                std::int32_t lo = f[base + i];
                std::int32_t hi = f[base + i + half];
                f[base + i] = lo + hi;
                f[base + i + half] = lo - hi;
            }
        }
    }

    std::vector<std::uint32_t> u_of_w(size, 0);
    for (int k = 0; k < m; ++k) {
        std::uint32_t uk = 0;
        for (int j = 0; j < m; ++j)
            if (field.trace(field.alog(static_cast<std::uint64_t>(k) + j))) uk |= 1u << j;
        for (std::uint32_t t = 0; t < (1u << k); ++t)
            u_of_w[(1u << k) | t] = uk ^ u_of_w[t];
    }

    std::vector<std::int32_t> spec(size);
    for (FieldElem w = 0; w < size; ++w) spec[w] = f[u_of_w[w]];
    return spec;
}

std::uint32_t min_pairwise_distance_serial(std::span<const std::uint64_t> flat,
                                           std::size_t word_count, std::size_t blocks) {
    assert(word_count >= 2);
    std::uint32_t best = UINT32_MAX;
    for (std::size_t i = 0; i + 1 < word_count; ++i) {
        const std::uint64_t* wi = flat.data() + i * blocks;
        for (std::size_t j = i + 1; j < word_count; ++j) {
            const std::uint64_t* wj = flat.data() + j * blocks;
            std::uint32_t dist = 0;
            for (std::size_t b = 0; b < blocks && dist < best; ++b)
                dist += static_cast<std::uint32_t>(std::popcount(wi[b] ^ wj[b]));
            best = std::min(best, dist);
        }
    }
    return best;
}

std::uint32_t min_pairwise_distance(std::span<const std::uint64_t> flat,
                                    std::size_t word_count, std::size_t blocks) {
    assert(word_count >= 2);
    std::uint32_t best = UINT32_MAX;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(word_count) - 1; ++i) {
        const std::uint64_t* wi = flat.data() + i * blocks;
        for (std::size_t j = i + 1; j < word_count; ++j) {
            const std::uint64_t* wj = flat.data() + j * blocks;
            std::uint32_t dist = 0;
            for (std::size_t b = 0; b < blocks && dist < best; ++b)
                dist += static_cast<std::uint32_t>(std::popcount(wi[b] ^ wj[b]));
            best = std::min(best, dist);
        }
    }
    return best;
}

}  // namespace z4trace::kernels
