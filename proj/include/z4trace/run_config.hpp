#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "z4trace/binary_codes.hpp"
#include "z4trace/charsum.hpp"
#include "z4trace/trace_codes.hpp"
#include "z4trace/verify.hpp"

namespace z4trace {

inline constexpr const char* kSchemaVersion = "z4trace/1";

// One build/weigh run. Round-trips through JSON; identical configs give
// byte-identical reports.
struct RunConfig {
    int m = 2;
    SetKind kind = SetKind::Skew;
    std::string function_spec;         // required for support kinds
    std::string format = "json";       // json | csv | text
    std::uint64_t seed = 0;            // 0 = canonical skew set
    std::optional<int> max_enum_m;     // overrides every enumeration cap

    Budget budget() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::ordered_json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::ordered_json& j);

SetKind parse_kind(const std::string& s);

// Grammar: affine:a=<elt>,b=<bit> | gold:alpha=<elt>,i=<int> |
// mm:identity | mm:<p0>,<p1>,... | hex:<truthtable> | bent:auto |
// semibent:auto. Field elements are written as their index.
BooleanFunction parse_function(const BinaryField& field, const std::string& spec);

// "4" or "2..8"
std::pair<int, int> parse_m_range(const std::string& s);

// Payload of the build subcommand.
nlohmann::ordered_json build_report(const RunConfig& cfg);

std::string render_text(const nlohmann::ordered_json& report);
std::string render_csv(const nlohmann::ordered_json& report);

nlohmann::ordered_json ring_info_json(const GaloisRing& ring);
nlohmann::ordered_json teichmuller_json(const GaloisRing& ring);
nlohmann::ordered_json gamma_report_json(const GaloisRing& ring, const GammaReport& report);
nlohmann::ordered_json verify_report_json(const verify::Report& report);

// Full codeword listing, one row per a: index, digits, symbols, weight.
// Only for m <= 3.
std::string codewords_csv(const TraceCode& code);

// w_index,value rows.
std::string spectrum_csv(const BooleanFunction& f);

// Sorted hex word list, one word per line.
std::string gray_words_hex(const BinaryCode& code);

}  // namespace z4trace
