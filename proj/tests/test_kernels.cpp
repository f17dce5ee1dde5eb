#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "z4trace/kernels.hpp"
#include "z4trace/trace_codes.hpp"

using namespace z4trace;

TEST_CASE("generator rows reproduce codewords") {
    for (int m = 2; m <= 4; ++m) {
        GaloisRing ring(m);
        TraceCode code(ring, skew_set(ring));
        auto rows = kernels::generator_rows(ring, code.defining_set().elements);
        for (std::uint32_t v = 0; v < ring.size(); ++v) {
            RingElem a{v};
            CHECK(kernels::combine_rows(rows, a) == code.codeword(a));
        }
    }
}

TEST_CASE("parallel lee histogram equals the serial reference") {
    for (int m = 1; m <= 5; ++m) {
        GaloisRing ring(m);
        std::vector<DefiningSet> sets;
        sets.push_back(skew_set(ring));
        if (m >= 2) {
            BooleanFunction f0 = BooleanFunction::affine(ring.field(), 1, 0);
            BooleanFunction f1 = BooleanFunction::affine(ring.field(), 1, 1);
            sets.push_back(defining_set_support(ring, f0));
            sets.push_back(defining_set_support(ring, f1));
            sets.push_back(defining_set_support_plus(ring, f0));
        }
        for (const auto& d : sets) {
            auto serial = kernels::lee_weight_histogram_serial(ring, d.elements);
            auto parallel = kernels::lee_weight_histogram(ring, d.elements);
            CHECK(serial == parallel);
        }
    }
    // m = 6 crosses the chunked-dispatch threshold
    GaloisRing ring(6);
    DefiningSet d = skew_set(ring);
    CHECK(kernels::lee_weight_histogram_serial(ring, d.elements) ==
          kernels::lee_weight_histogram(ring, d.elements));
}

TEST_CASE("fast walsh equals the naive reference on random tables") {
    std::mt19937_64 rng(17);
    for (int m = 1; m <= 10; ++m) {
        BinaryField field(m);
        for (int k = 0; k < 3; ++k) {
            std::vector<std::uint8_t> table(field.size());
            for (auto& t : table) t = rng() & 1;
            CHECK(kernels::walsh_spectrum(field, table) ==
                  kernels::walsh_spectrum_serial(field, table));
        }
    }
}

TEST_CASE("min pairwise distance kernels agree") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 5; ++round) {
        std::size_t words = 50 + rng() % 200, blocks = 1 + rng() % 4;
        std::vector<std::uint64_t> flat(words * blocks);
        for (auto& x : flat) x = rng();
        CHECK(kernels::min_pairwise_distance(flat, words, blocks) ==
              kernels::min_pairwise_distance_serial(flat, words, blocks));
    }
}
