#include "z4trace/trace_codes.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <random>

#include "z4trace/kernels.hpp"

namespace z4trace {

namespace {

constexpr std::uint8_t kLee[4] = {0, 1, 2, 1};

void check_no_duplicates(const std::vector<RingElem>& elems) {
    std::vector<RingElem> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("defining set has duplicate elements");
}

}  // namespace

const char* to_string(SetKind k) {
    switch (k) {
        case SetKind::Support: return "support";
        case SetKind::SupportPlus2T: return "support-plus";
        case SetKind::Skew: return "skew";
        case SetKind::Custom: return "custom";
    }
    return "?";
}

TraceCode::TraceCode(const GaloisRing& ring, DefiningSet d) : ring_(&ring), d_(std::move(d)) {
    check_no_duplicates(d_.elements);
    bool zero_ok = (d_.kind == SetKind::Support || d_.kind == SetKind::SupportPlus2T) &&
                   d_.source && (*d_.source)(0) == 1;
    if (!zero_ok) {
        for (RingElem e : d_.elements)
            if (e.v == 0) throw std::invalid_argument("defining set contains zero");
    }
}

std::vector<std::uint8_t> TraceCode::codeword(RingElem a) const {
    std::vector<std::uint8_t> sym(d_.elements.size());
    for (std::size_t i = 0; i < sym.size(); ++i)
        sym[i] = static_cast<std::uint8_t>(ring_->gen_trace(ring_->mul(a, d_.elements[i])));
    return sym;
}

std::uint64_t LeeWeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::uint32_t LeeWeightEnumerator::min_nonzero_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    throw std::logic_error("no nonzero weight in enumerator");
}

std::vector<std::uint32_t> LeeWeightEnumerator::nonzero_weights() const {
    std::vector<std::uint32_t> ws;
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) ws.push_back(w);
    return ws;
}

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("Z4TRACE_MAX_ENUM_M")) {
        int v = std::atoi(env);
        if (v >= 1) b.max_m_support = b.max_m_support_plus = b.max_m_skew = v;
    }
    return b;
}

int Budget::cap_for(SetKind k) const {
    switch (k) {
        case SetKind::SupportPlus2T: return max_m_support_plus;
        case SetKind::Skew: return max_m_skew;
        default: return max_m_support;
    }
}

DefiningSet defining_set_support(const GaloisRing& ring, const BooleanFunction& f) {
    if (!(f.field() == ring.field()))
        throw std::invalid_argument("function field does not match the ring");
    if (f.support_size() == 0) throw EmptySupport("support construction needs f != 0");
    DefiningSet d;
    d.kind = SetKind::Support;
    d.source = f;
    for (RingElem t : ring.teichmuller())
        if (f(ring.reduce_mod2(t))) d.elements.push_back(t);
    return d;
}

DefiningSet defining_set_support_plus(const GaloisRing& ring, const BooleanFunction& f) {
    if (!(f.field() == ring.field()))
        throw std::invalid_argument("function field does not match the ring");
    if (f.support_size() == 0) throw EmptySupport("support construction needs f != 0");
    DefiningSet d;
    d.kind = SetKind::SupportPlus2T;
    d.source = f;
    for (RingElem x : ring.teichmuller()) {
        if (!f(ring.reduce_mod2(x))) continue;
        for (RingElem y : ring.teichmuller()) d.elements.push_back(ring.add(x, ring.times_two(y)));
    }
    return d;
}

namespace {

// Digit vectors compared low degree first.
bool lex_smaller(const GaloisRing& ring, RingElem a, RingElem b) {
    auto da = ring.digits(a), db = ring.digits(b);
    for (int j = 0; j < ring.m(); ++j)
        if (da[j] != db[j]) return da[j] < db[j];
    return false;
}

template <typename Pick>
DefiningSet build_skew(const GaloisRing& ring, Pick pick) {
    DefiningSet d;
    d.kind = SetKind::Skew;
    d.elements.reserve(ring.unit_count() / 2);
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        RingElem u{v};
        if (!ring.is_unit(u)) continue;
        RingElem nu = ring.neg(u);
        if (nu < u) continue;  // visit each pair once
        d.elements.push_back(pick(u, nu));
    }
    std::sort(d.elements.begin(), d.elements.end());
    return d;
}

}  // namespace

DefiningSet skew_set(const GaloisRing& ring) {
    return build_skew(ring, [&](RingElem u, RingElem nu) {
        return lex_smaller(ring, u, nu) ? u : nu;
    });
}

DefiningSet skew_set_random(const GaloisRing& ring, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return build_skew(ring, [&](RingElem u, RingElem nu) { return (rng() & 1) ? u : nu; });
}

DefiningSet custom_set(std::vector<RingElem> elements) {
    DefiningSet d;
    d.kind = SetKind::Custom;
    d.elements = std::move(elements);
    return d;
}

std::array<std::uint32_t, 4> symbol_counts(std::span<const std::uint8_t> v) {
    std::array<std::uint32_t, 4> n{0, 0, 0, 0};
    for (std::uint8_t s : v) ++n[s & 3u];
    return n;
}

std::uint32_t lee_weight(std::span<const std::uint8_t> v) {
    std::uint32_t w = 0;
    for (std::uint8_t s : v) w += kLee[s & 3u];
    return w;
}

std::uint32_t weight_via_charsum(const TraceCode& code, RingElem a) {
    const GaloisRing& ring = code.ring();
    GaussInt sum{0, 0};
    for (RingElem d : code.defining_set().elements)
        sum = sum + chi(ring, ring.mul(a, d));
    std::int64_t w = static_cast<std::int64_t>(code.n()) - sum.re;
    assert(w >= 0);
    return static_cast<std::uint32_t>(w);
}

LeeWeightEnumerator enumerate_weights(const TraceCode& code, const Budget& budget) {
    int cap = budget.cap_for(code.defining_set().kind);
    if (code.ring().m() > cap)
        throw BudgetExceeded("exhaustive enumeration capped at m = " + std::to_string(cap) +
                             " for " + std::string(to_string(code.defining_set().kind)) +
                             " sets (set Z4TRACE_MAX_ENUM_M to override)");
    auto hist = kernels::lee_weight_histogram(code.ring(), code.defining_set().elements);
    LeeWeightEnumerator e;
    for (std::uint32_t w = 0; w < hist.size(); ++w)
        if (hist[w]) e.counts[w] = hist[w];
    return e;
}

LeeWeightEnumerator analytic_support(const GaloisRing& ring, const BooleanFunction& f) {
    if (!(f.field() == ring.field()))
        throw std::invalid_argument("function field does not match the ring");
    const std::uint32_t nf = f.support_size();
    if (nf == 0) throw EmptySupport("support construction needs f != 0");
    const BinaryField& field = ring.field();

    std::vector<std::int32_t> wf = f.walsh_spectrum().values;

    // Spectra of f_r(x) = f(x) + Q(rx) for every r in T \ {0}, keyed by the
    // reduction of r.
    std::vector<std::uint8_t> q_table(field.size());
    for (FieldElem y = 0; y < field.size(); ++y)
        q_table[y] = static_cast<std::uint8_t>(q_form(field, y));
    std::vector<std::vector<std::int32_t>> wfr(field.size());
    for (FieldElem rbar = 1; rbar < field.size(); ++rbar) {
        std::vector<std::uint8_t> table(field.size());
        for (FieldElem x = 0; x < field.size(); ++x)
            table[x] = f(x) ^ q_table[field.mul(rbar, x)];
        wfr[rbar] = kernels::walsh_spectrum(field, table);
    }

    LeeWeightEnumerator e;
    e.counts[0] += 1;  // a = 0
    for (std::uint32_t v = 1; v < ring.size(); ++v) {
        RingElem w{v};
        TwoAdic rs = ring.two_adic(w);
        FieldElem rbar = ring.reduce_mod2(rs.a);
        FieldElem sbar = ring.reduce_mod2(rs.b);
        std::int64_t weight;
        if (rbar == 0) {
            weight = (2ll * nf + wf[sbar]) / 2;
            assert((2ll * nf + wf[sbar]) % 2 == 0);
        } else {
            GaussInt g = gamma_sum(ring, w);
            std::int64_t num = 4ll * nf - 2 * g.re + wfr[rbar][sbar] + wfr[rbar][rbar ^ sbar];
            assert(num % 4 == 0);
            weight = num / 4;
        }
        assert(weight >= 0);
        e.counts[static_cast<std::uint32_t>(weight)] += 1;
    }
    return e;
}

LeeWeightEnumerator analytic_support_plus(const GaloisRing& ring, const BooleanFunction& f) {
    if (!(f.field() == ring.field()))
        throw std::invalid_argument("function field does not match the ring");
    const std::uint64_t nf = f.support_size();
    if (nf == 0) throw EmptySupport("support construction needs f != 0");
    const std::uint64_t n = nf * ring.residue_size();

    std::vector<std::int32_t> wf = f.walsh_spectrum().values;

    LeeWeightEnumerator e;
    e.counts[0] += 1;
    for (std::uint32_t v = 1; v < ring.size(); ++v) {
        RingElem w{v};
        if (ring.is_unit(w)) {
            e.counts[static_cast<std::uint32_t>(n)] += 1;
        } else {
            FieldElem sbar = ring.reduce_mod2(ring.two_adic(w).b);
            std::int64_t weight =
                static_cast<std::int64_t>(n) +
                (static_cast<std::int64_t>(ring.residue_size()) / 2) * wf[sbar];
            assert(weight >= 0);
            e.counts[static_cast<std::uint32_t>(weight)] += 1;
        }
    }
    return e;
}

LeeWeightEnumerator analytic_skew(const GaloisRing& ring) {
    const std::uint64_t q = ring.residue_size();
    LeeWeightEnumerator e;
    e.counts[0] = 1;
    // Frequencies follow the proof's case split on the residue of b: the
    // ideal side (b != 0, b mod 2 = 0) lands on weight 2^(2m-1), the units
    // on the code length.
    e.counts[static_cast<std::uint32_t>(q * q / 2)] += q - 1;
    e.counts[static_cast<std::uint32_t>((q - 1) * q / 2)] += q * q - q;
    return e;
}

}  // namespace z4trace
