#include "z4trace/charsum.hpp"

#include <cassert>

namespace z4trace {

std::string GaussInt::to_string() const {
    std::string s = std::to_string(re);
    s += (im < 0 ? " - " : " + ") + std::to_string(im < 0 ? -im : im) + "i";
    return s;
}

GaussInt chi_sum(const GaloisRing& ring, std::span<const RingElem> s) {
    std::int64_t tally[4] = {0, 0, 0, 0};
    for (RingElem x : s) ++tally[ring.gen_trace(x)];
    return {tally[0] - tally[2], tally[1] - tally[3]};
}

GaussInt gamma_sum(const GaloisRing& ring, RingElem w) {
    // Walk w * xi^k incrementally; the x = 0 term contributes 1.
    std::int64_t tally[4] = {1, 0, 0, 0};
    RingElem cur = w;
    for (std::uint32_t k = 0; k < ring.field().order(); ++k) {
        ++tally[ring.gen_trace(cur)];
        cur = ring.mul(cur, ring.xi());
    }
    return {tally[0] - tally[2], tally[1] - tally[3]};
}

GaussInt gamma_one_reference(int m) {
    GaussInt g{1, 0};
    for (int i = 0; i < m; ++i) g = g * GaussInt{1, 1};
    return m % 2 == 0 ? GaussInt{0, 0} - g : g;
}

GammaReport verify_gamma_closed_form(const GaloisRing& ring) {
    const BinaryField& field = ring.field();
    const GaussInt gamma1 = gamma_one_reference(ring.m());
    const auto& teich = ring.teichmuller();

    // All units are r + 2s with r in T \ {0}, s in T.
    std::vector<RingElem> units;
    units.reserve(ring.unit_count());
    for (std::size_t ri = 1; ri < teich.size(); ++ri)
        for (RingElem s : teich) units.push_back(ring.add(teich[ri], ring.times_two(s)));

    GammaReport report;
    report.m = ring.m();
    report.checked = units.size();

    std::vector<std::uint8_t> bad(units.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(units.size()); ++i) {
        RingElem w = units[i];
        TwoAdic rs = ring.two_adic(w);
        FieldElem rbar = ring.reduce_mod2(rs.a);
        FieldElem sbar = ring.reduce_mod2(rs.b);
        RingElem quot = ring.teich_lift(field.mul(sbar, field.inv(rbar)));
        GaussInt expect =
            GaussInt::unit_power(4u - ring.gen_trace(quot)) * gamma1;
        if (!(gamma_sum(ring, w) == expect)) bad[i] = 1;
    }
    for (std::size_t i = 0; i < units.size(); ++i)
        if (bad[i]) report.failures.push_back(units[i]);
    return report;
}

GaussInt f_hat(const GaloisRing& ring, const BooleanFunction& f, RingElem w) {
    if (!(f.field() == ring.field()))
        throw std::invalid_argument("function field does not match the ring");
    std::int64_t tally[4] = {0, 0, 0, 0};
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        RingElem x{v};
        unsigned e = (2u * f(ring.reduce_mod2(x)) + ring.gen_trace(ring.mul(w, x))) & 3u;
        ++tally[e];
    }
    GaussInt sum{tally[0] - tally[2], tally[1] - tally[3]};
    std::int64_t div = static_cast<std::int64_t>(ring.residue_size());
    if (sum.re % div != 0 || sum.im % div != 0)
        throw std::logic_error("f_hat sum not divisible by 2^m");
    return {sum.re / div, sum.im / div};
}

}  // namespace z4trace
