#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "z4trace/errors.hpp"

namespace z4trace {

// A field element is the integer value of its coefficient vector in the
// polynomial basis {1, x, ..., x^(m-1)}, low degree = low bit.
using FieldElem = std::uint32_t;

// GF(2^m) with log/antilog tables over a primitive polynomial, 1 <= m <= 12.
//
// The root x of the defining polynomial generates the multiplicative group,
// so antilog[j] = x^j has period exactly 2^m - 1; construction fails with
// NotPrimitive otherwise. Immutable after construction.
class BinaryField {
public:
    static constexpr int kMaxDegree = 12;

    explicit BinaryField(int m) : BinaryField(m, default_poly(m)) {}
    BinaryField(int m, std::uint32_t poly);

    int m() const { return m_; }
    std::uint32_t size() const { return size_; }       // 2^m
    std::uint32_t order() const { return order_; }     // 2^m - 1
    std::uint32_t poly() const { return poly_; }       // bit i = coeff of x^i

    FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[mod_order(static_cast<std::uint64_t>(log_[a]) + log_[b])];
    }

    FieldElem sq(FieldElem a) const { return mul(a, a); }

    FieldElem inv(FieldElem a) const {
        if (a == 0) throw DivisionByZero("inverse of zero field element");
        return alog_[mod_order(order_ - log_[a])];
    }

    // a^e with 0^0 = 1.
    FieldElem pow(FieldElem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return alog_[(static_cast<std::uint64_t>(log_[a]) * (e % order_)) % order_];
    }

    std::uint32_t log(FieldElem a) const {
        if (a == 0) throw DivisionByZero("discrete log of zero");
        return log_[a];
    }

    FieldElem alog(std::uint64_t j) const { return alog_[j % order_]; }

    FieldElem generator() const { return alog_[1 % order_]; }  // the root x

    // Absolute trace GF(2^m) -> GF(2).
    int trace(FieldElem a) const { return std::popcount(a & trace_mask_) & 1; }

    bool operator==(const BinaryField& o) const { return m_ == o.m_ && poly_ == o.poly_; }

    static std::uint32_t default_poly(int m);

    // Plain-text polynomial table: one line per m, bits most-significant-first.
    // Returns polynomials indexed by m (index 0 unused).
    static std::vector<std::uint32_t> load_poly_table(const std::string& path);

private:
    std::uint32_t mod_order(std::uint64_t v) const {
        return static_cast<std::uint32_t>(v % order_);
    }

    int m_ = 0;
    std::uint32_t poly_ = 0;
    std::uint32_t size_ = 0;
    std::uint32_t order_ = 0;
    std::uint32_t trace_mask_ = 0;  // bit j set iff trace(x^j) = 1
    std::vector<std::uint32_t> log_;
    std::vector<FieldElem> alog_;
};

}  // namespace z4trace
