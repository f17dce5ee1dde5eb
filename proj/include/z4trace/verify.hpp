#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z4trace/trace_codes.hpp"

namespace z4trace::verify {

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string target;
    std::vector<Claim> claims;
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    int m_lo = 0;  // 0 = per-target default
    int m_hi = 0;
    std::uint64_t seed = 1;
    int random_skew_sets = 10;
    Budget budget = Budget::from_env();
};

// Closed-form Gamma evaluation and the trace/quadratic-form bridge identity.
Report gamma(Options opt = {});  // default m = 2..8

// Rank of the canonical quadratic form and its idempotence.
Report rank(Options opt = {});  // default m = 2..12

// Support construction: character-sum oracle, analytic distribution
// against brute force, and the worked example parameters.
Report thm_support(Options opt = {});  // default m = 2..5

// Support + 2T construction and the bent / semi-bent weight laws.
Report thm_support_plus(Options opt = {});  // default m = 2..5

// Skew-set construction: two-weight law, frequencies, Gray-image
// optimality against the Griesmer bound, torsion structure.
Report thm_skew(Options opt = {});  // default m = 2..5

// Gray-image linearity experiment; records the verdict, asserts only that
// the two linearity tests agree and are deterministic.
Report gray_linearity(Options opt = {});  // default m = 2..3

// Valid targets: gamma, rank, thm-support, thm-support-plus, thm-skew,
// gray-linearity, all.
std::vector<Report> run_target(const std::string& target, Options opt = {});

}  // namespace z4trace::verify
