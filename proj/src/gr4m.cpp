#include "z4trace/gr4m.hpp"

#include <sstream>

namespace z4trace {

namespace {

// Reduce a coefficient vector of degree < 2m modulo a monic degree-m
// polynomial over Z4.
void reduce_by(std::uint8_t* acc, int deg, const std::vector<std::uint8_t>& h, int m) {
    for (int k = deg; k >= m; --k) {
        unsigned t = acc[k] & 3u;
        if (t == 0) continue;
        for (int j = 0; j <= m; ++j)
            acc[k - m + j] = static_cast<std::uint8_t>((acc[k - m + j] + 4 - ((t * h[j]) & 3u)) & 3u);
    }
}

}  // namespace

std::vector<std::uint8_t> GaloisRing::graeffe_lift(int m, std::uint32_t field_poly) {
    BinaryField probe(m, field_poly);  // validates primitivity
    (void)probe;

    // f(x) = e(x^2) + x o(x^2); then e(y)^2 - y o(y)^2 = +-f's lift.
    std::vector<int> e((m / 2) + 1, 0), o((m + 1) / 2, 0);
    for (int j = 0; j <= m; ++j) {
        int bit = (field_poly >> j) & 1;
        if (j % 2 == 0)
            e[j / 2] = bit;
        else
            o[j / 2] = bit;
    }
    std::vector<int> p(m + 1, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[i] && e[j]) p[i + j] += 1;
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j)
            if (o[i] && o[j]) p[i + j + 1] -= 1;

    int sign = (m % 2 == 0) ? 1 : -1;  // make the lift monic
    std::vector<std::uint8_t> h(m + 1, 0);
    for (int j = 0; j <= m; ++j)
        h[j] = static_cast<std::uint8_t>(((sign * p[j]) % 4 + 4) % 4);

    if (h[m] != 1)
        throw NotPrimitive("Graeffe lift is not monic");
    for (int j = 0; j <= m; ++j) {
        if ((h[j] & 1u) != ((field_poly >> j) & 1u))
            throw NotPrimitive("Graeffe lift does not reduce to the field polynomial");
    }
    return h;
}

GaloisRing::GaloisRing(int m, std::uint32_t field_poly)
    : m_(m), field_(m, field_poly) {
    ring_size_ = 1u << (2 * m_);
    full_mask_ = ring_size_ - 1;
    lo_mask_ = 0x55555555u & full_mask_;
    h_ = graeffe_lift(m_, field_poly);

    // xi = the class of x; needs one reduction step when m = 1.
    if (m_ >= 2) {
        xi_ = RingElem{1u << 2};
    } else {
        xi_ = RingElem{static_cast<std::uint32_t>((4 - h_[0]) & 3u)};
    }

    // Teichmuller set [0, 1, xi, ..., xi^(2^m-2)]; verify the root order
    // and that reduction mod 2 hits every field element exactly once.
    std::uint32_t ord = field_.order();
    teich_.assign(1 + ord, RingElem{0});
    teich_lift_.assign(field_.size(), RingElem{0});
    std::vector<bool> seen(field_.size(), false);
    seen[0] = true;
    RingElem t = from_z4(1);
    for (std::uint32_t k = 0; k < ord; ++k) {
        if (k > 0 && t == from_z4(1))
            throw NotPrimitive("ring root has order < 2^m - 1");
        teich_[1 + k] = t;
        FieldElem r = reduce_mod2(t);
        if (r != field_.alog(k) || seen[r])
            throw NotPrimitive("Teichmuller set does not cover the residue field");
        seen[r] = true;
        teich_lift_[r] = t;
        t = mul(t, xi_);
    }
    if (t != from_z4(1))
        throw NotPrimitive("ring root has order < 2^m - 1");

    // Basis traces via the Frobenius orbit sum; gen_trace then evaluates by
    // Z4-linearity. The sum of conjugates of a basis monomial must be a
    // Z4 constant.
    for (int j = 0; j < m_; ++j) {
        RingElem e{1u << (2 * j)};
        RingElem s = e;
        RingElem cur = e;
        for (int i = 1; i < m_; ++i) {
            cur = frobenius(cur);
            s = add(s, cur);
        }
        if ((s.v >> 2) != 0)
            throw NotPrimitive("trace of basis element is not in Z4");
        tau_[j] = static_cast<std::uint8_t>(s.v & 3u);
    }
}

RingElem GaloisRing::mul(RingElem a, RingElem b) const {
    std::uint8_t acc[2 * BinaryField::kMaxDegree] = {0};
    std::uint32_t av = a.v;
    for (int i = 0; i < m_; ++i, av >>= 2) {
        unsigned ai = av & 3u;
        if (ai == 0) continue;
        std::uint32_t bv = b.v;
        for (int j = 0; j < m_; ++j, bv >>= 2)
            acc[i + j] = static_cast<std::uint8_t>((acc[i + j] + ai * (bv & 3u)) & 3u);
    }
    reduce_by(acc, 2 * m_ - 2, h_, m_);
    std::uint32_t v = 0;
    for (int j = m_ - 1; j >= 0; --j) v = (v << 2) | acc[j];
    return RingElem{v};
}

FieldElem GaloisRing::reduce_mod2(RingElem c) const {
    FieldElem r = 0;
    std::uint32_t v = c.v;
    for (int j = 0; j < m_; ++j, v >>= 2) r |= (v & 1u) << j;
    return r;
}

TwoAdic GaloisRing::two_adic(RingElem c) const {
    RingElem a = teich_lift(reduce_mod2(c));
    RingElem d = sub(c, a);
    // d has every digit in {0, 2}; halving gives the reduction of b.
    FieldElem bbar = 0;
    std::uint32_t v = d.v;
    for (int j = 0; j < m_; ++j, v >>= 2) bbar |= ((v >> 1) & 1u) << j;
    return TwoAdic{a, teich_lift(bbar)};
}

RingElem GaloisRing::frobenius(RingElem c) const {
    TwoAdic ab = two_adic(c);
    return add(teich_square(ab.a), times_two(teich_square(ab.b)));
}

unsigned GaloisRing::componentwise_trace_formula(RingElem c) const {
    TwoAdic ab = two_adic(c);
    unsigned lo = static_cast<unsigned>(field_.trace(reduce_mod2(ab.a)));
    unsigned hi = static_cast<unsigned>(field_.trace(reduce_mod2(ab.b)));
    return (lo + 2 * hi) & 3u;
}

std::vector<RingElem> GaloisRing::elements(RingSubset which) const {
    std::vector<RingElem> out;
    switch (which) {
        case RingSubset::All:
            out.reserve(ring_size_);
            for (std::uint32_t v = 0; v < ring_size_; ++v) out.push_back(RingElem{v});
            break;
        case RingSubset::Units:
            out.reserve(unit_count());
            for (std::uint32_t v = 0; v < ring_size_; ++v)
                if (is_unit(RingElem{v})) out.push_back(RingElem{v});
            break;
        case RingSubset::Ideal:
            out.reserve(ideal_count());
            for (RingElem t : teich_) out.push_back(times_two(t));
            break;
    }
    return out;
}

std::string GaloisRing::to_string(RingElem c) const {
    std::string s;
    std::uint32_t v = c.v;
    for (int j = 0; j < m_; ++j, v >>= 2) {
        if (j) s += ',';
        s += static_cast<char>('0' + (v & 3u));
    }
    return s;
}

RingElem GaloisRing::parse(const std::string& s) const {
    std::stringstream ss(s);
    std::string item;
    std::uint32_t v = 0;
    int j = 0;
    while (std::getline(ss, item, ',')) {
        if (j >= m_ || item.size() != 1 || item[0] < '0' || item[0] > '3')
            throw std::invalid_argument("bad ring element literal: " + s);
        v |= static_cast<std::uint32_t>(item[0] - '0') << (2 * j);
        ++j;
    }
    if (j != m_) throw std::invalid_argument("bad ring element literal: " + s);
    return RingElem{v};
}

std::array<std::uint8_t, BinaryField::kMaxDegree> GaloisRing::digits(RingElem c) const {
    std::array<std::uint8_t, BinaryField::kMaxDegree> d{};
    std::uint32_t v = c.v;
    for (int j = 0; j < m_; ++j, v >>= 2) d[j] = static_cast<std::uint8_t>(v & 3u);
    return d;
}

RingElem GaloisRing::pack(const std::array<std::uint8_t, BinaryField::kMaxDegree>& d) const {
    std::uint32_t v = 0;
    for (int j = m_ - 1; j >= 0; --j) v = (v << 2) | (d[j] & 3u);
    return RingElem{v};
}

}  // namespace z4trace
