#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "z4trace/gf2m.hpp"

namespace z4trace {

// A ring element is an index packing the m coefficients of the polynomial
// basis {1, xi, ..., xi^(m-1)} as base-4 digits, digit j = coeff of xi^j.
struct RingElem {
    std::uint32_t v = 0;
    auto operator<=>(const RingElem&) const = default;
};

// Unique decomposition c = a + 2b with a, b in the Teichmuller set.
struct TwoAdic {
    RingElem a;
    RingElem b;
};

enum class RingSubset { All, Units, Ideal };

// The Galois ring GR(4,m) = Z4[xi] with xi a root of the basic primitive
// polynomial obtained by Graeffe lifting the field polynomial. Immutable
// after construction and safe for concurrent shared reads.
class GaloisRing {
public:
    explicit GaloisRing(int m) : GaloisRing(m, BinaryField::default_poly(m)) {}
    GaloisRing(int m, std::uint32_t field_poly);

    GaloisRing(const GaloisRing&) = delete;
    GaloisRing& operator=(const GaloisRing&) = delete;

    int m() const { return m_; }
    std::uint32_t size() const { return ring_size_; }          // 4^m
    std::uint32_t residue_size() const { return field_.size(); }  // 2^m
    const BinaryField& field() const { return field_; }
    // m+1 coefficients in Z4, low degree first, monic.
    const std::vector<std::uint8_t>& basic_poly() const { return h_; }
    RingElem xi() const { return xi_; }

    // --- arithmetic (coefficientwise mod 4, mod the basic polynomial) ---

    RingElem add(RingElem a, RingElem b) const {
        std::uint32_t carry = a.v & b.v & lo_mask_;
        return RingElem{(a.v ^ b.v ^ (carry << 1)) & full_mask_};
    }

    // Two's complement per digit.
    RingElem neg(RingElem a) const { return add(RingElem{~a.v & full_mask_}, RingElem{lo_mask_}); }

    RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

    // 2*a; lands in the ideal <2>.
    RingElem times_two(RingElem a) const { return RingElem{(a.v & lo_mask_) << 1}; }

    RingElem from_z4(unsigned k) const { return RingElem{k & 3u}; }

    RingElem mul(RingElem a, RingElem b) const;

    // --- residue field and Teichmuller structure ---

    // Reduction mod 2: keeps the low bit of every digit.
    FieldElem reduce_mod2(RingElem c) const;

    // The Teichmuller representative with the given reduction.
    RingElem teich_lift(FieldElem x) const { return teich_lift_[x]; }

    // Ordered as [0, 1, xi, xi^2, ..., xi^(2^m-2)].
    const std::vector<RingElem>& teichmuller() const { return teich_; }

    bool is_teichmuller(RingElem c) const { return teich_lift(reduce_mod2(c)) == c; }

    TwoAdic two_adic(RingElem c) const;

    // Generalized Frobenius: a + 2b -> a^2 + 2b^2. Ring automorphism of
    // order m fixing Z4.
    RingElem frobenius(RingElem c) const;

    // Generalized trace to Z4, realized as the sum of Frobenius conjugates.
    unsigned gen_trace(RingElem c) const {
        unsigned s = 0;
        std::uint32_t v = c.v;
        for (int j = 0; j < m_; ++j, v >>= 2) s += (v & 3u) * tau_[j];
        return s & 3u;
    }

    // Diagnostic only: tr(a mod 2) + 2 tr(b mod 2) for c = a + 2b. Differs
    // from gen_trace by 2Q(a mod 2); kept to document the discrepancy.
    unsigned componentwise_trace_formula(RingElem c) const;

    bool is_unit(RingElem c) const { return reduce_mod2(c) != 0; }

    // --- enumeration ---

    std::uint32_t unit_count() const { return (residue_size() - 1) * residue_size(); }
    std::uint32_t ideal_count() const { return residue_size(); }
    std::vector<RingElem> elements(RingSubset which) const;

    // --- serialization: m comma-separated Z4 digits, low degree first ---

    std::string to_string(RingElem c) const;
    RingElem parse(const std::string& s) const;

    std::array<std::uint8_t, BinaryField::kMaxDegree> digits(RingElem c) const;
    RingElem pack(const std::array<std::uint8_t, BinaryField::kMaxDegree>& d) const;

    // Graeffe lift of a primitive binary polynomial: the monic degree-m
    // polynomial h over Z4 with h(x^2) = +-f(x)f(-x), reducing to f mod 2.
    static std::vector<std::uint8_t> graeffe_lift(int m, std::uint32_t field_poly);

private:
    RingElem teich_pow(std::uint32_t exp) const {  // xi^exp
        return teich_[1 + exp % field_.order()];
    }
    RingElem teich_square(RingElem t) const {
        if (t.v == 0) return t;
        return teich_pow(2 * field_.log(reduce_mod2(t)));
    }

    int m_;
    BinaryField field_;
    std::uint32_t ring_size_;
    std::uint32_t full_mask_;      // 2m bits
    std::uint32_t lo_mask_;        // low bit of every digit (0x5555... & full)
    std::vector<std::uint8_t> h_;  // basic polynomial, m+1 coeffs
    RingElem xi_;
    std::vector<RingElem> teich_;
    std::vector<RingElem> teich_lift_;
    std::array<std::uint8_t, BinaryField::kMaxDegree> tau_{};  // Tr(xi^j)
};

}  // namespace z4trace
