#include "z4trace/gf2m.hpp"

#include <fstream>
#include <sstream>

namespace z4trace {

namespace {

// One primitive polynomial per degree, lowest-weight entries from the
// standard tables. Index by m.
constexpr std::uint32_t kDefaultPoly[BinaryField::kMaxDegree + 1] = {
    0,
    0b11,             // x + 1
    0b111,            // x^2 + x + 1
    0b1011,           // x^3 + x + 1
    0b10011,          // x^4 + x + 1
    0b100101,         // x^5 + x^2 + 1
    0b1000011,        // x^6 + x + 1
    0b10001001,       // x^7 + x^3 + 1
    0b100011101,      // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,     // x^9 + x^4 + 1
    0b10000001001,    // x^10 + x^3 + 1
    0b100000000101,   // x^11 + x^2 + 1
    0b1000001010011,  // x^12 + x^6 + x^4 + x + 1
};

}  // namespace

BinaryField::BinaryField(int m, std::uint32_t poly) : m_(m), poly_(poly) {
    if (m < 1 || m > kMaxDegree)
        throw std::invalid_argument("field degree m must be in [1, 12]");
    if (poly >> m != 1u)
        throw std::invalid_argument("polynomial must have degree exactly m");

    size_ = 1u << m;
    order_ = size_ - 1;
    alog_.assign(order_, 0);
    constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
    log_.assign(size_, kUnset);

    // Walk the powers of x; a shorter cycle, a revisit, or landing on zero
    // all mean the polynomial is not primitive.
    FieldElem b = 1;
    for (std::uint32_t j = 0; j < order_; ++j) {
        if (b == 0 || log_[b] != kUnset)
            throw NotPrimitive("root of polynomial has order < 2^m - 1");
        alog_[j] = b;
        log_[b] = j;
        b <<= 1;
        if (b & size_) b ^= poly_;
    }
    if (b != 1)
        throw NotPrimitive("root of polynomial has order < 2^m - 1");

    for (int j = 0; j < m_; ++j) {
        FieldElem e = 1u << j;
        FieldElem s = 0;
        FieldElem cur = e;
        for (int i = 0; i < m_; ++i) {
            s ^= cur;
            cur = mul(cur, cur);
        }
        if (s > 1)
            throw NotPrimitive("trace of basis element is not in GF(2)");
        if (s) trace_mask_ |= 1u << j;
    }
}

std::uint32_t BinaryField::default_poly(int m) {
    if (m < 1 || m > kMaxDegree)
        throw std::invalid_argument("no built-in polynomial for this degree");
    return kDefaultPoly[m];
}

std::vector<std::uint32_t> BinaryField::load_poly_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polynomial table: " + path);
    std::vector<std::uint32_t> table = {0};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::uint32_t bits = 0;
        for (char c : line) {
            if (c == '\r' || c == ' ') continue;
            if (c != '0' && c != '1')
                throw std::runtime_error("bad character in polynomial table line: " + line);
            bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
        }
        int m = static_cast<int>(table.size());
        if (bits >> m != 1u)
            throw std::runtime_error("table line " + std::to_string(m) +
                                     " does not have degree " + std::to_string(m));
        table.push_back(bits);
    }
    return table;
}

}  // namespace z4trace
