#include "z4trace/boolfun.hpp"

#include <algorithm>
#include <cassert>

#include "z4trace/kernels.hpp"

namespace z4trace {

const char* to_string(FnClass c) {
    switch (c) {
        case FnClass::Affine: return "affine";
        case FnClass::Bent: return "bent";
        case FnClass::Semibent: return "semibent";
        case FnClass::Quadratic: return "quadratic";
        case FnClass::Other: return "other";
    }
    return "?";
}

BooleanFunction::BooleanFunction(const BinaryField& field, std::vector<std::uint8_t> table)
    : field_(&field), table_(std::move(table)) {
    if (table_.size() != field.size())
        throw std::invalid_argument("truth table size must be 2^m");
    for (auto& b : table_) b &= 1;
}

BooleanFunction BooleanFunction::zero(const BinaryField& field) {
    return BooleanFunction(field, std::vector<std::uint8_t>(field.size(), 0));
}

BooleanFunction BooleanFunction::from_trace_poly(
    const BinaryField& field,
    std::span<const std::pair<FieldElem, std::uint64_t>> terms, int constant) {
    for (const auto& [a, e] : terms) {
        if (e < 1 || e > field.order())
            throw std::invalid_argument("trace polynomial exponent out of [1, 2^m - 1]");
        (void)a;
    }
    std::vector<std::uint8_t> table(field.size());
    for (FieldElem x = 0; x < field.size(); ++x) {
        int bit = constant & 1;
        for (const auto& [a, e] : terms)
            bit ^= field.trace(field.mul(a, field.pow(x, e)));
        table[x] = static_cast<std::uint8_t>(bit);
    }
    return BooleanFunction(field, std::move(table));
}

BooleanFunction BooleanFunction::affine(const BinaryField& field, FieldElem a, int b) {
    std::pair<FieldElem, std::uint64_t> term{a, 1};
    return from_trace_poly(field, std::span(&term, 1), b);
}

BooleanFunction BooleanFunction::gold(const BinaryField& field, FieldElem alpha, int i) {
    if (i < 1 || i >= field.m())
        throw std::invalid_argument("gold exponent index out of [1, m)");
    std::pair<FieldElem, std::uint64_t> term{alpha, (1ull << i) + 1};
    return from_trace_poly(field, std::span(&term, 1), 0);
}

BooleanFunction BooleanFunction::maiorana_mcfarland(const BinaryField& field,
                                                    std::span<const std::uint32_t> perm) {
    int m = field.m();
    if (m % 2 != 0) throw std::invalid_argument("Maiorana-McFarland needs even m");
    std::uint32_t half = 1u << (m / 2);
    if (perm.size() != half)
        throw std::invalid_argument("permutation must have 2^(m/2) entries");
    std::vector<bool> seen(half, false);
    for (auto p : perm) {
        if (p >= half || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<std::uint8_t> table(field.size());
    for (FieldElem x = 0; x < field.size(); ++x) {
        std::uint32_t u = x & (half - 1);
        std::uint32_t v = x >> (m / 2);
        table[x] = static_cast<std::uint8_t>(std::popcount(u & perm[v]) & 1);
    }
    return BooleanFunction(field, std::move(table));
}

BooleanFunction BooleanFunction::from_hex(const BinaryField& field, const std::string& hex) {
    std::uint32_t size = field.size();
    std::size_t want = (size + 3) / 4;
    if (hex.size() != want)
        throw std::invalid_argument("hex truth table must have " + std::to_string(want) +
                                    " digits for m = " + std::to_string(field.m()));
    std::vector<std::uint8_t> table(size, 0);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        char c = hex[k];
        int nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in truth table");
        for (int b = 0; b < 4; ++b) {
            std::size_t x = 4 * k + b;
            int bit = (nib >> (3 - b)) & 1;
            if (x < size) table[x] = static_cast<std::uint8_t>(bit);
            else if (bit) throw std::invalid_argument("nonzero padding in hex truth table");
        }
    }
    return BooleanFunction(field, std::move(table));
}

std::string BooleanFunction::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t k = 0; k < table_.size(); k += 4) {
        int nib = 0;
        for (int b = 0; b < 4; ++b) {
            std::size_t x = k + b;
            int bit = x < table_.size() ? table_[x] : 0;
            nib = (nib << 1) | bit;
        }
        out += digits[nib];
    }
    return out;
}

std::vector<FieldElem> BooleanFunction::support() const {
    std::vector<FieldElem> s;
    for (FieldElem x = 0; x < table_.size(); ++x)
        if (table_[x]) s.push_back(x);
    return s;
}

std::uint32_t BooleanFunction::support_size() const {
    return static_cast<std::uint32_t>(std::count(table_.begin(), table_.end(), 1));
}

std::int32_t BooleanFunction::walsh(FieldElem w) const {
    std::int32_t s = 0;
    for (FieldElem x = 0; x < table_.size(); ++x)
        s += ((table_[x] ^ field_->trace(field_->mul(w, x))) & 1) ? -1 : 1;
    return s;
}

WalshSpectrum BooleanFunction::walsh_spectrum() const {
    return WalshSpectrum{kernels::walsh_spectrum(*field_, table_)};
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
    if (!(*field_ == other.field()))
        throw std::invalid_argument("functions live on different fields");
    std::vector<std::uint8_t> table(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) table[x] = table_[x] ^ other.table_[x];
    return BooleanFunction(*field_, std::move(table));
}

Classification BooleanFunction::classify() const {
    const int m = field_->m();
    const std::int32_t full = static_cast<std::int32_t>(field_->size());
    WalshSpectrum spec = walsh_spectrum();

    bool affine = false;
    for (auto v : spec.values)
        if (v == full || v == -full) affine = true;  // Parseval forces the rest to 0
    if (affine) return {FnClass::Affine, {}};

    if (m % 2 == 0) {
        std::int32_t level = 1 << (m / 2);
        bool bent = std::all_of(spec.values.begin(), spec.values.end(),
                                [&](std::int32_t v) { return v == level || v == -level; });
        if (bent) return {FnClass::Bent, {}};
    } else {
        std::int32_t level = 1 << ((m + 1) / 2);
        bool semibent = std::all_of(spec.values.begin(), spec.values.end(), [&](std::int32_t v) {
            return v == 0 || v == level || v == -level;
        });
        if (semibent) return {FnClass::Semibent, {}};
    }

    try {
        QuadraticFormRank r = quadratic_rank(*this);
        return {FnClass::Quadratic, r};
    } catch (const NotQuadratic&) {
        return {FnClass::Other, {}};
    }
}

int q_form(const BinaryField& field, FieldElem x) {
    FieldElem acc = 0;
    for (int i = 0; i < field.m(); ++i)
        for (int j = i + 1; j < field.m(); ++j)
            acc ^= field.pow(x, (1ull << i) + (1ull << j));
    assert(acc <= 1);
    return static_cast<int>(acc);
}

int bilinear_form(const BinaryField& field, FieldElem x, FieldElem y) {
    return q_form(field, x ^ y) ^ q_form(field, x) ^ q_form(field, y);
}

BooleanFunction q_form_function(const BinaryField& field) {
    std::vector<std::uint8_t> table(field.size());
    for (FieldElem x = 0; x < field.size(); ++x)
        table[x] = static_cast<std::uint8_t>(q_form(field, x));
    return BooleanFunction(field, std::move(table));
}

QuadraticFormRank quadratic_rank(const BooleanFunction& g) {
    const BinaryField& field = g.field();
    const int m = field.m();
    const int g0 = g(0);
    auto bg = [&](FieldElem x, FieldElem z) { return g(x ^ z) ^ g(x) ^ g(z) ^ g0; };

    // Matrix of the form on the polynomial basis, rows as bit masks.
    std::vector<std::uint32_t> mat(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (bg(1u << i, 1u << j)) mat[i] |= 1u << j;

    // Bilinearity check over the whole domain against every basis vector.
    for (FieldElem x = 0; x < field.size(); ++x) {
        std::uint32_t row = 0;
        for (int i = 0; i < m; ++i)
            if ((x >> i) & 1) row ^= mat[i];
        for (int j = 0; j < m; ++j)
            if (((row >> j) & 1) != static_cast<std::uint32_t>(bg(x, 1u << j)))
                throw NotQuadratic("associated form is not bilinear");
    }

    // GF(2) rank by elimination.
    int rank = 0;
    std::vector<std::uint32_t> rows = mat;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if ((rows[r] >> col) & 1) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < m; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    assert(rank % 2 == 0);
    return QuadraticFormRank{rank, m - rank};
}

namespace {

// Shift g by a linear term so that W(0) lands on a requested support size:
// n_f = (2^m - W_f(0)) / 2 and W_{g + tr(cx)}(w) = W_g(w + c).
std::optional<BooleanFunction> tune_support(const BooleanFunction& g,
                                            std::uint32_t target_nf) {
    const BinaryField& field = g.field();
    std::int64_t want = static_cast<std::int64_t>(field.size()) - 2ll * target_nf;
    WalshSpectrum spec = g.walsh_spectrum();
    for (FieldElem c = 0; c < field.size(); ++c) {
        if (spec.values[c] == want) {
            BooleanFunction f = g ^ BooleanFunction::affine(field, c, 0);
            assert(f.support_size() == target_nf);
            return f;
        }
    }
    return {};
}

template <typename Pred>
std::optional<BooleanFunction> search_quadratic(const BinaryField& field,
                                                std::optional<std::uint32_t> target_nf,
                                                Pred is_wanted) {
    for (int i = 1; i < field.m(); ++i) {
        for (FieldElem alpha = 1; alpha < field.size(); ++alpha) {
            BooleanFunction g = BooleanFunction::gold(field, alpha, i);
            if (!is_wanted(g)) continue;
            if (!target_nf) return g;
            if (g.support_size() == *target_nf) return g;
            if (auto tuned = tune_support(g, *target_nf); tuned && is_wanted(*tuned))
                return tuned;
        }
    }
    return {};
}

}  // namespace

std::optional<BooleanFunction> find_bent(const BinaryField& field,
                                         std::optional<std::uint32_t> target_nf) {
    if (field.m() % 2 != 0) return {};
    return search_quadratic(field, target_nf, [](const BooleanFunction& g) {
        return g.classify().cls == FnClass::Bent;
    });
}

std::optional<BooleanFunction> find_semibent(const BinaryField& field,
                                             std::optional<std::uint32_t> target_nf) {
    if (field.m() % 2 == 0) return {};
    return search_quadratic(field, target_nf, [](const BooleanFunction& g) {
        return g.classify().cls == FnClass::Semibent;
    });
}

}  // namespace z4trace
