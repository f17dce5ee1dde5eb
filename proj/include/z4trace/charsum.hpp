#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z4trace/boolfun.hpp"
#include "z4trace/gr4m.hpp"

namespace z4trace {

// Exact Gaussian integer; all character sums stay in Z[i].
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussInt a, GaussInt b) = default;

    GaussInt conj() const { return {re, -im}; }
    std::int64_t norm() const { return re * re + im * im; }

    // i^k
    static GaussInt unit_power(unsigned k) {
        switch (k & 3u) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    std::string to_string() const;
};

// chi(c) = i^Tr(c), the canonical additive character of the ring.
inline GaussInt chi(const GaloisRing& ring, RingElem c) {
    return GaussInt::unit_power(ring.gen_trace(c));
}

GaussInt chi_sum(const GaloisRing& ring, std::span<const RingElem> s);

// Gamma(w) = sum over the Teichmuller set of i^Tr(wx).
GaussInt gamma_sum(const GaloisRing& ring, RingElem w);

// Reference value Gamma(1) = (1+i)^m for odd m, -(1+i)^m for even m.
GaussInt gamma_one_reference(int m);

struct GammaReport {
    int m = 0;
    std::uint64_t checked = 0;
    std::vector<RingElem> failures;  // offending w, in index order

    bool ok() const { return failures.empty(); }
};

// Checks Gamma(w) = i^(-Tr(s/r)) Gamma(1) for every unit w = r + 2s with
// r, s Teichmuller, where s/r is the Teichmuller lift of the residue
// quotient.
GammaReport verify_gamma_closed_form(const GaloisRing& ring);

// 2^-m sum over the whole ring of i^(2 f(x mod 2) + Tr(wx)); the division
// is exact and asserted.
GaussInt f_hat(const GaloisRing& ring, const BooleanFunction& f, RingElem w);

}  // namespace z4trace
