#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "z4trace/trace_codes.hpp"

using namespace z4trace;

TEST_CASE("support defining set") {
    GaloisRing ring(2);
    BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 0);  // tr(x)
    DefiningSet d = defining_set_support(ring, f);
    CHECK(d.kind == SetKind::Support);
    REQUIRE(d.elements.size() == 2);
    CHECK(d.elements[0] == ring.xi());
    CHECK(d.elements[1] == ring.parse("3,3"));  // xi^2

    // reduction recovers exactly the support
    std::set<FieldElem> red;
    for (RingElem e : d.elements) red.insert(ring.reduce_mod2(e));
    auto sup = f.support();
    CHECK(red == std::set<FieldElem>(sup.begin(), sup.end()));

    CHECK_THROWS_AS(defining_set_support(ring, BooleanFunction::zero(ring.field())),
                    EmptySupport);
}

TEST_CASE("support lift keeps zero exactly when f(0) = 1") {
    for (int m = 2; m <= 5; ++m) {
        GaloisRing ring(m);
        BooleanFunction f1 = BooleanFunction::affine(ring.field(), 1, 1);  // f(0) = 1
        DefiningSet d1 = defining_set_support(ring, f1);
        CHECK(d1.elements.size() == f1.support_size());
        CHECK(d1.elements.front().v == 0);
        TraceCode code(ring, d1);  // zero element tolerated here
        CHECK(code.n() == f1.support_size());

        BooleanFunction f0 = BooleanFunction::affine(ring.field(), 1, 0);
        for (RingElem e : defining_set_support(ring, f0).elements) CHECK(e.v != 0);
    }
}

TEST_CASE("custom sets reject zero and duplicates") {
    GaloisRing ring(2);
    CHECK_THROWS_AS(TraceCode(ring, custom_set({RingElem{0}})), std::invalid_argument);
    CHECK_THROWS_AS(TraceCode(ring, custom_set({RingElem{1}, RingElem{1}})),
                    std::invalid_argument);
}

TEST_CASE("support-plus defining set") {
    GaloisRing ring(2);
    BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 0);
    DefiningSet d = defining_set_support_plus(ring, f);
    CHECK(d.elements.size() == 8);  // 2^m * n_f = 4 * 2

    // lexicographic in (x, y): first block is xi + 2T in Teichmuller order
    const auto& teich = ring.teichmuller();
    for (int k = 0; k < 4; ++k)
        CHECK(d.elements[k] == ring.add(ring.xi(), ring.times_two(teich[k])));

    // every element is a unit when f(0) = 0
    for (RingElem e : d.elements) CHECK(ring.is_unit(e));

    for (int m = 2; m <= 4; ++m) {
        GaloisRing r(m);
        auto bent_or_affine = BooleanFunction::affine(r.field(), 1, 1);
        DefiningSet dp = defining_set_support_plus(r, bent_or_affine);
        CHECK(dp.elements.size() ==
              static_cast<std::size_t>(bent_or_affine.support_size()) * r.residue_size());
    }
}

TEST_CASE("skew sets partition the units with the ideal") {
    GaloisRing r1(1);
    DefiningSet d1 = skew_set(r1);
    REQUIRE(d1.elements.size() == 1);
    CHECK(d1.elements[0] == RingElem{1});

    for (int m = 1; m <= 6; ++m) {
        GaloisRing ring(m);
        auto check_partition = [&](const DefiningSet& d) {
            CHECK(d.elements.size() == ring.unit_count() / 2);
            std::vector<bool> seen(ring.size(), false);
            for (RingElem t : ring.elements(RingSubset::Ideal)) seen[t.v] = true;
            for (RingElem u : d.elements) {
                CHECK(ring.is_unit(u));
                CHECK_FALSE(seen[u.v]);
                seen[u.v] = true;
                RingElem nu = ring.neg(u);
                CHECK_FALSE(seen[nu.v]);
                seen[nu.v] = true;
            }
            for (std::uint32_t v = 0; v < ring.size(); ++v) CHECK(seen[v]);
        };
        check_partition(skew_set(ring));
        check_partition(skew_set_random(ring, 7));
        check_partition(skew_set_random(ring, 99));
    }

    GaloisRing r2(2);
    CHECK(skew_set(r2).elements.size() == 6);
}

TEST_CASE("random skew sets are deterministic per seed") {
    GaloisRing ring(3);
    CHECK(skew_set_random(ring, 5).elements == skew_set_random(ring, 5).elements);
    CHECK(skew_set_random(ring, 5).elements != skew_set_random(ring, 6).elements);
}

TEST_CASE("codewords") {
    GaloisRing ring(2);
    TraceCode code(ring, skew_set(ring));
    CHECK(code.n() == 6);

    auto zero = code.codeword(ring.from_z4(0));
    CHECK(lee_weight(zero) == 0);
    CHECK(std::all_of(zero.begin(), zero.end(), [](auto s) { return s == 0; }));

    auto c2 = code.codeword(ring.from_z4(2));
    CHECK(lee_weight(c2) == 8);

    // codebook closure under addition, exhaustive for m <= 3
    for (int m = 1; m <= 3; ++m) {
        GaloisRing r(m);
        TraceCode c(r, skew_set(r));
        for (std::uint32_t av = 0; av < r.size(); ++av)
            for (std::uint32_t bv = 0; bv < r.size(); ++bv) {
                auto ca = c.codeword(RingElem{av});
                auto cb = c.codeword(RingElem{bv});
                auto sum = c.codeword(r.add(RingElem{av}, RingElem{bv}));
                for (std::size_t i = 0; i < ca.size(); ++i)
                    CHECK(sum[i] == ((ca[i] + cb[i]) & 3));
            }
    }

    // linearity of a -> c_a, sampled triples
    for (int m = 2; m <= 5; ++m) {
        GaloisRing r(m);
        TraceCode c(r, skew_set(r));
        std::mt19937 rng(m);
        for (int k = 0; k < 40; ++k) {
            RingElem a{static_cast<std::uint32_t>(rng()) & (r.size() - 1)};
            RingElem b{static_cast<std::uint32_t>(rng()) & (r.size() - 1)};
            auto ca = c.codeword(a), cb = c.codeword(b), cab = c.codeword(r.add(a, b));
            for (std::size_t i = 0; i < ca.size(); ++i)
                CHECK(cab[i] == ((ca[i] + cb[i]) & 3));
        }
    }
}

TEST_CASE("symbol counts and lee weight") {
    std::vector<std::uint8_t> v{0, 1, 2, 3};
    auto n = symbol_counts(v);
    CHECK(n == std::array<std::uint32_t, 4>{1, 1, 1, 1});
    CHECK(lee_weight(v) == 4);

    std::vector<std::uint8_t> zeros(10, 0);
    CHECK(symbol_counts(zeros) == std::array<std::uint32_t, 4>{10, 0, 0, 0});
    CHECK(lee_weight(zeros) == 0);

    std::vector<std::uint8_t> twos(7, 2);
    CHECK(lee_weight(twos) == 14);

    // n - N0 + N2 identity on random vectors
    std::mt19937 rng(1);
    for (int k = 0; k < 100; ++k) {
        std::vector<std::uint8_t> w(32);
        for (auto& s : w) s = rng() & 3;
        auto c = symbol_counts(w);
        CHECK(lee_weight(w) == w.size() - c[0] + c[2]);
    }
}

TEST_CASE("weight via character sum equals the direct weight") {
    for (int m = 1; m <= 4; ++m) {
        GaloisRing ring(m);
        std::vector<TraceCode> codes;
        codes.emplace_back(ring, skew_set(ring));
        if (m >= 2) {
            BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 1);
            codes.emplace_back(ring, defining_set_support(ring, f));
            codes.emplace_back(ring, defining_set_support_plus(ring, f));
        }
        for (const auto& code : codes)
            for (std::uint32_t v = 0; v < ring.size(); ++v) {
                RingElem a{v};
                CHECK(weight_via_charsum(code, a) == lee_weight(code.codeword(a)));
            }
    }

    GaloisRing r2(2);
    TraceCode skew2(r2, skew_set(r2));
    CHECK(weight_via_charsum(skew2, r2.from_z4(2)) == 8);  // 6 - (-2)
    for (RingElem u : r2.elements(RingSubset::Units))
        CHECK(weight_via_charsum(skew2, u) == 6);

    // sampled beyond the exhaustive range
    for (int m = 6; m <= 8; ++m) {
        GaloisRing ring(m);
        BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 1);
        std::vector<TraceCode> codes;
        codes.emplace_back(ring, skew_set(ring));
        codes.emplace_back(ring, defining_set_support(ring, f));
        codes.emplace_back(ring, defining_set_support_plus(ring, f));
        std::mt19937_64 rng(m);
        for (const auto& code : codes)
            for (int k = 0; k < 50; ++k) {
                RingElem a{static_cast<std::uint32_t>(rng()) & (ring.size() - 1)};
                CHECK(weight_via_charsum(code, a) == lee_weight(code.codeword(a)));
            }
    }
}

TEST_CASE("enumerate_weights: m=2 skew distribution") {
    GaloisRing ring(2);
    TraceCode code(ring, skew_set(ring));
    LeeWeightEnumerator e = enumerate_weights(code);
    REQUIRE(e.counts.size() == 3);
    CHECK(e.counts.at(0) == 1);
    CHECK(e.counts.at(6) == 12);
    CHECK(e.counts.at(8) == 3);
    CHECK(e.total() == 16);
    CHECK(e.min_nonzero_weight() == 6);
}

TEST_CASE("enumerator invariants") {
    for (int m = 1; m <= 4; ++m) {
        GaloisRing ring(m);
        TraceCode code(ring, skew_set(ring));
        LeeWeightEnumerator e = enumerate_weights(code);
        CHECK(e.total() == ring.size());
        CHECK(e.counts.at(0) >= 1);
        for (const auto& [w, c] : e.counts) CHECK(w <= 2 * code.n());
    }
}

TEST_CASE("budget caps") {
    Budget tight;
    tight.max_m_skew = 2;
    GaloisRing ring(3);
    TraceCode code(ring, skew_set(ring));
    CHECK_THROWS_AS(enumerate_weights(code, tight), BudgetExceeded);
    CHECK(enumerate_weights(code).total() == ring.size());  // default cap allows m=3
}

TEST_CASE("analytic support distribution equals brute force") {
    for (int m = 2; m <= 4; ++m) {
        GaloisRing ring(m);
        std::vector<BooleanFunction> fns = {BooleanFunction::affine(ring.field(), 1, 0),
                                            BooleanFunction::affine(ring.field(), 1, 1),
                                            q_form_function(ring.field())};
        if (m == 4) {
            auto bent = find_bent(ring.field(), 6);
            REQUIRE(bent.has_value());
            fns.push_back(*bent);
        }
        for (const auto& f : fns) {
            TraceCode code(ring, defining_set_support(ring, f));
            CHECK(analytic_support(ring, f) == enumerate_weights(code));
        }
    }
}

TEST_CASE("analytic support-plus distribution equals brute force") {
    for (int m = 2; m <= 4; ++m) {
        GaloisRing ring(m);
        std::vector<BooleanFunction> fns = {BooleanFunction::affine(ring.field(), 1, 0),
                                            BooleanFunction::affine(ring.field(), 1, 1),
                                            q_form_function(ring.field())};
        for (const auto& f : fns) {
            TraceCode code(ring, defining_set_support_plus(ring, f));
            CHECK(analytic_support_plus(ring, f) == enumerate_weights(code));
        }
    }
}

TEST_CASE("analytic skew distribution") {
    GaloisRing r2(2);
    LeeWeightEnumerator want;
    want.counts[0] = 1;
    want.counts[8] = 3;
    want.counts[6] = 12;
    CHECK(analytic_skew(r2) == want);

    GaloisRing r3(3);
    TraceCode code(r3, skew_set(r3));
    LeeWeightEnumerator brute = enumerate_weights(code);
    CHECK(analytic_skew(r3) == brute);
    CHECK(code.n() == 28);
    CHECK(brute.counts.at(32) == 7);
    CHECK(brute.counts.at(28) == 56);

    // frequencies hold for any skew set
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        TraceCode rcode(r3, skew_set_random(r3, seed));
        CHECK(analytic_skew(r3) == enumerate_weights(rcode));
    }
}

TEST_CASE("m=5 affine support code: frozen exact distribution") {
    // Cross-checked against an independent implementation and a second
    // primitive polynomial; the minimum nonzero Lee weight is 12.
    GaloisRing ring(5);
    BooleanFunction f0 = BooleanFunction::affine(ring.field(), 1, 0);
    TraceCode c0(ring, defining_set_support(ring, f0));
    LeeWeightEnumerator e0 = enumerate_weights(c0);
    LeeWeightEnumerator want0;
    want0.counts = {{0, 1}, {12, 240}, {16, 542}, {20, 240}, {32, 1}};
    CHECK(e0 == want0);

    BooleanFunction f1 = BooleanFunction::affine(ring.field(), 1, 1);
    TraceCode c1(ring, defining_set_support(ring, f1));
    LeeWeightEnumerator e1 = enumerate_weights(c1);
    LeeWeightEnumerator want1;
    want1.counts = {{0, 2}, {12, 380}, {16, 510}, {20, 132}};
    CHECK(e1 == want1);
    CHECK(e1.min_nonzero_weight() == 12);
}

TEST_CASE("two nonzero weights for skew codes up to m=5") {
    for (int m = 2; m <= 5; ++m) {
        GaloisRing ring(m);
        TraceCode code(ring, skew_set(ring));
        LeeWeightEnumerator e = enumerate_weights(code);
        std::uint32_t q = ring.residue_size();
        CHECK(e.nonzero_weights() ==
              std::vector<std::uint32_t>{(q - 1) * q / 2, q * q / 2});
    }
}
