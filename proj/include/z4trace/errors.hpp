#pragma once

#include <stdexcept>
#include <string>

namespace z4trace {

// A supplied polynomial is reducible or its root does not generate the
// full multiplicative group.
struct NotPrimitive : std::runtime_error {
    explicit NotPrimitive(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// The form attached to a Boolean function is not bilinear, i.e. the
// function is not quadratic up to an affine part.
struct NotQuadratic : std::runtime_error {
    explicit NotQuadratic(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySupport : std::invalid_argument {
    explicit EmptySupport(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyCode : std::invalid_argument {
    explicit EmptyCode(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive enumeration was requested beyond the configured cap.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace z4trace
