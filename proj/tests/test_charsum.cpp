#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "z4trace/charsum.hpp"
#include "z4trace/trace_codes.hpp"

using namespace z4trace;

TEST_CASE("Gaussian integer arithmetic") {
    GaussInt i{0, 1};
    CHECK(i * i == GaussInt{-1, 0});
    CHECK(i * i * i * i == GaussInt{1, 0});
    CHECK(GaussInt::unit_power(0) == GaussInt{1, 0});
    CHECK(GaussInt::unit_power(3) == GaussInt{0, -1});
    CHECK(GaussInt{3, -4}.conj() == GaussInt{3, 4});
    CHECK(GaussInt{3, -4}.norm() == 25);
    CHECK((GaussInt{1, 2} + GaussInt{3, 4}) == GaussInt{4, 6});
    CHECK((GaussInt{1, 2} * GaussInt{3, 4}) == GaussInt{-5, 10});
}

TEST_CASE("chi values on m=2") {
    GaloisRing ring(2);
    CHECK(chi(ring, ring.from_z4(0)) == GaussInt{1, 0});
    CHECK(chi(ring, ring.from_z4(1)) == GaussInt{-1, 0});  // Tr(1) = 2
    CHECK(chi(ring, ring.xi()) == GaussInt{0, -1});        // Tr(xi) = 3
}

TEST_CASE("chi is multiplicative over addition with conjugate symmetry") {
    for (int m = 1; m <= 4; ++m) {
        GaloisRing ring(m);
        for (std::uint32_t a = 0; a < ring.size(); ++a) {
            RingElem ea{a};
            CHECK(chi(ring, ring.neg(ea)) == chi(ring, ea).conj());
            for (std::uint32_t b = 0; b < ring.size(); ++b) {
                RingElem eb{b};
                CHECK(chi(ring, ring.add(ea, eb)) == chi(ring, ea) * chi(ring, eb));
            }
        }
    }
}

TEST_CASE("chi_sum basics") {
    GaloisRing ring(2);
    CHECK(chi_sum(ring, {}) == GaussInt{0, 0});

    for (int m = 1; m <= 4; ++m) {
        GaloisRing r(m);
        auto all = r.elements(RingSubset::All);
        CHECK(chi_sum(r, all) == GaussInt{0, 0});  // full character sum vanishes
    }

    // doubled canonical skew set: each nonzero residue appears twice
    DefiningSet skew = skew_set(ring);
    std::vector<RingElem> doubled;
    for (RingElem u : skew.elements) doubled.push_back(ring.times_two(u));
    CHECK(chi_sum(ring, doubled) == GaussInt{-2, 0});
}

TEST_CASE("gamma values") {
    GaloisRing r2(2);
    CHECK(gamma_sum(r2, r2.from_z4(0)) == GaussInt{4, 0});
    CHECK(gamma_sum(r2, r2.from_z4(1)) == GaussInt{0, -2});  // -(1+i)^2

    GaloisRing r3(3);
    CHECK(gamma_sum(r3, r3.from_z4(1)) == GaussInt{-2, 2});  // (1+i)^3

    // w = 2s with s != 0 gives zero
    for (int m = 1; m <= 5; ++m) {
        GaloisRing ring(m);
        for (std::size_t k = 1; k < ring.teichmuller().size(); ++k) {
            RingElem w = ring.times_two(ring.teichmuller()[k]);
            CHECK(gamma_sum(ring, w) == GaussInt{0, 0});
        }
    }
}

TEST_CASE("gamma norm is 2^m on every unit") {
    for (int m = 1; m <= 8; ++m) {
        GaloisRing ring(m);
        const auto& teich = ring.teichmuller();
        for (std::size_t ri = 1; ri < teich.size(); ++ri)
            for (RingElem s : teich) {
                RingElem w = ring.add(teich[ri], ring.times_two(s));
                CHECK(gamma_sum(ring, w).norm() ==
                      static_cast<std::int64_t>(ring.residue_size()));
            }
    }
}

TEST_CASE("gamma closed form verifies for m = 2..8") {
    for (int m = 2; m <= 8; ++m) {
        GaloisRing ring(m);
        GammaReport rep = verify_gamma_closed_form(ring);
        CHECK(rep.ok());
        CHECK(rep.checked == ring.unit_count());
        CHECK(rep.m == m);
    }
}

TEST_CASE("gamma_one_reference matches (1+i)^m with the parity sign") {
    CHECK(gamma_one_reference(1) == GaussInt{1, 1});
    CHECK(gamma_one_reference(2) == GaussInt{0, -2});
    CHECK(gamma_one_reference(3) == GaussInt{-2, 2});
    CHECK(gamma_one_reference(4) == GaussInt{4, 0});
    for (int m = 1; m <= 8; ++m) {
        GaloisRing ring(m);
        CHECK(gamma_sum(ring, ring.from_z4(1)) == gamma_one_reference(m));
    }
}

TEST_CASE("f_hat basics and the two closed forms at w = 2s") {
    for (int m = 2; m <= 5; ++m) {
        GaloisRing ring(m);
        const BinaryField& field = ring.field();
        BooleanFunction fns[] = {BooleanFunction::affine(field, 1, 0),
                                 BooleanFunction::affine(field, 1, 1),
                                 q_form_function(field)};

        CHECK(f_hat(ring, BooleanFunction::zero(field), ring.from_z4(0)) ==
              GaussInt{static_cast<std::int64_t>(ring.residue_size()), 0});

        for (const auto& f : fns) {
            DefiningSet d = defining_set_support(ring, f);
            for (std::size_t k = 1; k < ring.teichmuller().size(); ++k) {
                RingElem s = ring.teichmuller()[k];
                RingElem w = ring.times_two(s);
                GaussInt fh = f_hat(ring, f, w);
                FieldElem sbar = ring.reduce_mod2(s);

                // route one: the Walsh transform at the residue of s
                CHECK(fh == GaussInt{f.walsh(sbar), 0});

                // route two: -2 chi(w lift(S_f))
                std::vector<RingElem> wd;
                for (RingElem x : d.elements) wd.push_back(ring.mul(w, x));
                GaussInt cs = chi_sum(ring, wd);
                CHECK(fh == GaussInt{-2, 0} * cs);
            }
        }
    }
}

TEST_CASE("trace/Q bridge on the Teichmuller set, m <= 8") {
    // Tr(t) = tr(t mod 2) + 2 Q(t mod 2); this is what lets the ring
    // character be rewritten through Walsh spectra.
    for (int m = 1; m <= 8; ++m) {
        GaloisRing ring(m);
        const BinaryField& field = ring.field();
        for (RingElem t : ring.teichmuller()) {
            FieldElem tbar = ring.reduce_mod2(t);
            unsigned want = (static_cast<unsigned>(field.trace(tbar)) +
                             2u * static_cast<unsigned>(q_form(field, tbar))) &
                            3u;
            CHECK(ring.gen_trace(t) == want);
            // and the componentwise diagnostic differs by exactly 2Q
            CHECK(ring.componentwise_trace_formula(t) ==
                  ((ring.gen_trace(t) + 2u * q_form(field, tbar)) & 3u));
        }
    }
}

TEST_CASE("conjugate-pair identity behind the weight formula") {
    GaloisRing ring(3);
    DefiningSet d = skew_set(ring);
    std::mt19937 rng(5);
    for (int k = 0; k < 50; ++k) {
        RingElem b{static_cast<std::uint32_t>(rng()) & (ring.size() - 1)};
        std::vector<RingElem> bd, nbd;
        for (RingElem x : d.elements) {
            bd.push_back(ring.mul(b, x));
            nbd.push_back(ring.neg(ring.mul(b, x)));
        }
        GaussInt s1 = chi_sum(ring, bd), s2 = chi_sum(ring, nbd);
        CHECK(s2 == s1.conj());
        CHECK(2 * s1.re == (s1 + s2).re);
        CHECK((s1 + s2).im == 0);
    }
}
