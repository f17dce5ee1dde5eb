#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "z4trace/boolfun.hpp"
#include "z4trace/charsum.hpp"
#include "z4trace/gr4m.hpp"

namespace z4trace {

enum class SetKind { Support, SupportPlus2T, Skew, Custom };

const char* to_string(SetKind k);

// Ordered defining set of a trace code. Support-style sets may contain the
// zero element exactly when f(0) = 1 (the lift of the full support keeps
// the lengths of the analytic formulas intact); skew and custom sets never
// do. No duplicates in any case.
struct DefiningSet {
    SetKind kind = SetKind::Custom;
    std::vector<RingElem> elements;
    std::optional<BooleanFunction> source;

    std::size_t size() const { return elements.size(); }
};

// The code C_D = { (Tr(a d_1), ..., Tr(a d_n)) : a in R }, counted as a
// family indexed by a (size 4^m, possibly with repeated codewords).
class TraceCode {
public:
    TraceCode(const GaloisRing& ring, DefiningSet d);

    const GaloisRing& ring() const { return *ring_; }
    const DefiningSet& defining_set() const { return d_; }
    std::uint32_t n() const { return static_cast<std::uint32_t>(d_.elements.size()); }

    std::vector<std::uint8_t> codeword(RingElem a) const;

private:
    const GaloisRing* ring_;
    DefiningSet d_;
};

struct LeeWeightEnumerator {
    std::map<std::uint32_t, std::uint64_t> counts;  // weight -> frequency

    std::uint64_t total() const;
    std::uint32_t min_nonzero_weight() const;
    std::vector<std::uint32_t> nonzero_weights() const;
    friend bool operator==(const LeeWeightEnumerator&, const LeeWeightEnumerator&) = default;
};

// Enumeration caps; exceeding a cap throws BudgetExceeded rather than
// sampling. Z4TRACE_MAX_ENUM_M overrides all three.
struct Budget {
    int max_m_support = 8;
    int max_m_support_plus = 8;
    int max_m_skew = 6;

    static Budget from_env();
    int cap_for(SetKind k) const;
};

// D = Teichmuller lift of the support of f, ordered by Teichmuller
// exponent. Throws EmptySupport when f = 0.
DefiningSet defining_set_support(const GaloisRing& ring, const BooleanFunction& f);

// D = { x + 2y : x in lift(S_f), y in T }, lexicographic in (x, y) order.
DefiningSet defining_set_support_plus(const GaloisRing& ring, const BooleanFunction& f);

// Canonical skew set: from each pair {u, -u} of units, the element with
// the lexicographically smaller digit vector; sorted by element index.
DefiningSet skew_set(const GaloisRing& ring);

// Random skew set: per-pair coin flips from a fixed-seed generator.
DefiningSet skew_set_random(const GaloisRing& ring, std::uint64_t seed);

DefiningSet custom_set(std::vector<RingElem> elements);

std::array<std::uint32_t, 4> symbol_counts(std::span<const std::uint8_t> v);
std::uint32_t lee_weight(std::span<const std::uint8_t> v);

// n - Re(chi(aD)): the character-sum route to the same weight.
std::uint32_t weight_via_charsum(const TraceCode& code, RingElem a);

// Exhaustive histogram over all a in R.
LeeWeightEnumerator enumerate_weights(const TraceCode& code, const Budget& budget = Budget::from_env());

// Weight distributions from the closed-form character-sum laws;
// frequencies are accumulated by looping over all w in R. Each must equal
// the brute-force enumerator exactly.
LeeWeightEnumerator analytic_support(const GaloisRing& ring, const BooleanFunction& f);
LeeWeightEnumerator analytic_support_plus(const GaloisRing& ring, const BooleanFunction& f);
LeeWeightEnumerator analytic_skew(const GaloisRing& ring);

}  // namespace z4trace
