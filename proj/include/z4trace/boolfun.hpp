#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "z4trace/gf2m.hpp"

namespace z4trace {

struct WalshSpectrum {
    std::vector<std::int32_t> values;  // indexed by w (field element index)

    std::map<std::int32_t, std::uint32_t> multiset() const {
        std::map<std::int32_t, std::uint32_t> ms;
        for (auto v : values) ++ms[v];
        return ms;
    }
};

struct QuadraticFormRank {
    int rank;         // even
    int radical_dim;  // m - rank
};

enum class FnClass { Affine, Bent, Semibent, Quadratic, Other };

struct Classification {
    FnClass cls;
    std::optional<QuadraticFormRank> rank;  // present for Quadratic
};

const char* to_string(FnClass c);

// A Boolean function on GF(2^m), stored as a truth table indexed by field
// element index. The field must outlive the function.
class BooleanFunction {
public:
    BooleanFunction(const BinaryField& field, std::vector<std::uint8_t> table);

    static BooleanFunction zero(const BinaryField& field);

    // table[x] = tr(sum_e a_e x^e) + constant, exponents in [1, 2^m - 1].
    static BooleanFunction from_trace_poly(
        const BinaryField& field,
        std::span<const std::pair<FieldElem, std::uint64_t>> terms, int constant);

    // tr(ax) + b
    static BooleanFunction affine(const BinaryField& field, FieldElem a, int b);

    // tr(alpha x^(2^i + 1))
    static BooleanFunction gold(const BinaryField& field, FieldElem alpha, int i);

    // Maiorana-McFarland <u, perm(v)> on the bit-split of the element index
    // (u = low m/2 bits, v = high m/2 bits); m even, perm a permutation of
    // [0, 2^(m/2)).
    static BooleanFunction maiorana_mcfarland(const BinaryField& field,
                                              std::span<const std::uint32_t> perm);

    // Truth table as a hex string, bit x of the table in nibble x/4 with
    // lower x the more significant bit; trailing zero padding when 2^m < 4.
    static BooleanFunction from_hex(const BinaryField& field, const std::string& hex);
    std::string to_hex() const;

    const BinaryField& field() const { return *field_; }
    int m() const { return field_->m(); }
    const std::vector<std::uint8_t>& table() const { return table_; }
    int operator()(FieldElem x) const { return table_[x]; }

    std::vector<FieldElem> support() const;  // 1-positions in field order
    std::uint32_t support_size() const;      // n_f

    // W_f(w) by direct summation.
    std::int32_t walsh(FieldElem w) const;

    // All 2^m transform values, via the fast butterfly kernel.
    WalshSpectrum walsh_spectrum() const;

    Classification classify() const;

    // XOR of another table onto this one (pointwise sum of functions).
    BooleanFunction operator^(const BooleanFunction& other) const;

private:
    const BinaryField* field_;
    std::vector<std::uint8_t> table_;
};

// Q(x) = sum over 0 <= i < j < m of x^(2^i + 2^j); the field value is
// idempotent, returned as a bit.
int q_form(const BinaryField& field, FieldElem x);

// B(x,y) = Q(x+y) + Q(x) + Q(y), the symplectic form attached to Q.
int bilinear_form(const BinaryField& field, FieldElem x, FieldElem y);

// Q as a BooleanFunction table.
BooleanFunction q_form_function(const BinaryField& field);

// Rank of the quadratic form underlying g: m minus the dimension of the
// radical of B_g(x,z) = g(x+z)+g(x)+g(z)+g(0). Throws NotQuadratic when
// B_g fails bilinearity anywhere on the full domain-cross-basis check.
QuadraticFormRank quadratic_rank(const BooleanFunction& g);

// Deterministic search for a bent / semi-bent function among quadratic
// monomials tr(alpha x^(2^i+1)), optionally plus a linear term tr(cx) to
// hit a requested support size. Empty when the family contains none.
std::optional<BooleanFunction> find_bent(const BinaryField& field,
                                         std::optional<std::uint32_t> target_nf = {});
std::optional<BooleanFunction> find_semibent(const BinaryField& field,
                                             std::optional<std::uint32_t> target_nf = {});

}  // namespace z4trace
