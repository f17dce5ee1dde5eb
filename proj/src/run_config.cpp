#include "z4trace/run_config.hpp"

#include <algorithm>
#include <sstream>

namespace z4trace {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::uint64_t parse_uint(const std::string& s) {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

}  // namespace

Budget RunConfig::budget() const {
    Budget b = Budget::from_env();
    if (max_enum_m) b.max_m_support = b.max_m_support_plus = b.max_m_skew = *max_enum_m;
    return b;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["m"] = cfg.m;
    j["kind"] = to_string(cfg.kind);
    j["function"] = cfg.function_spec;
    j["format"] = cfg.format;
    j["seed"] = cfg.seed;
    if (cfg.max_enum_m)
        j["max_enum_m"] = *cfg.max_enum_m;
    else
        j["max_enum_m"] = nullptr;
    return j;
}

RunConfig run_config_from_json(const json& j) {
    RunConfig cfg;
    cfg.m = j.at("m").get<int>();
    cfg.kind = parse_kind(j.at("kind").get<std::string>());
    cfg.function_spec = j.at("function").get<std::string>();
    cfg.format = j.at("format").get<std::string>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("max_enum_m") && !j.at("max_enum_m").is_null())
        cfg.max_enum_m = j.at("max_enum_m").get<int>();
    return cfg;
}

SetKind parse_kind(const std::string& s) {
    if (s == "support") return SetKind::Support;
    if (s == "support-plus") return SetKind::SupportPlus2T;
    if (s == "skew") return SetKind::Skew;
    throw std::invalid_argument("unknown kind: " + s + " (expected support, support-plus, skew)");
}

BooleanFunction parse_function(const BinaryField& field, const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("function spec needs the form family:params");
    std::string family = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);

    if (family == "affine" || family == "gold") {
        std::uint64_t first = 0, second = 0;
        bool have_first = false, have_second = false;
        for (const auto& kv : split(params, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad parameter: " + kv);
            std::string key = kv.substr(0, eq);
            std::uint64_t val = parse_uint(kv.substr(eq + 1));
            if ((family == "affine" && key == "a") || (family == "gold" && key == "alpha")) {
                first = val;
                have_first = true;
            } else if ((family == "affine" && key == "b") || (family == "gold" && key == "i")) {
                second = val;
                have_second = true;
            } else {
                throw std::invalid_argument("unknown parameter " + key + " for " + family);
            }
        }
        if (!have_first || !have_second)
            throw std::invalid_argument(family + " needs both parameters");
        if (first >= field.size())
            throw std::invalid_argument("field element out of range");
        if (family == "affine") {
            if (second > 1) throw std::invalid_argument("b must be 0 or 1");
            return BooleanFunction::affine(field, static_cast<FieldElem>(first),
                                           static_cast<int>(second));
        }
        return BooleanFunction::gold(field, static_cast<FieldElem>(first),
                                     static_cast<int>(second));
    }
    if (family == "mm") {
        std::uint32_t half = 1u << (field.m() / 2);
        std::vector<std::uint32_t> perm;
        if (params == "identity") {
            for (std::uint32_t i = 0; i < half; ++i) perm.push_back(i);
        } else {
            for (const auto& p : split(params, ','))
                perm.push_back(static_cast<std::uint32_t>(parse_uint(p)));
        }
        return BooleanFunction::maiorana_mcfarland(field, perm);
    }
    if (family == "hex") return BooleanFunction::from_hex(field, params);
    if (family == "bent" && params == "auto") {
        if (auto f = find_bent(field)) return *f;
        throw std::invalid_argument("no bent function found for m = " + std::to_string(field.m()));
    }
    if (family == "semibent" && params == "auto") {
        if (auto f = find_semibent(field)) return *f;
        throw std::invalid_argument("no semi-bent function found for m = " +
                                    std::to_string(field.m()));
    }
    throw std::invalid_argument("unknown function family: " + family);
}

std::pair<int, int> parse_m_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int m = static_cast<int>(parse_uint(s));
        return {m, m};
    }
    int lo = static_cast<int>(parse_uint(s.substr(0, dots)));
    int hi = static_cast<int>(parse_uint(s.substr(dots + 2)));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad m range: " + s);
    return {lo, hi};
}

namespace {

json enumerator_json(const LeeWeightEnumerator& e) {
    json arr = json::array();
    for (const auto& [w, c] : e.counts) arr.push_back({w, c});
    return arr;
}

json binary_summary(const BinaryCode& code, std::optional<std::uint32_t> d = {}) {
    json j;
    j["n"] = code.length;
    j["M"] = code.words.size();
    if (code.family_size) j["M_family"] = code.family_size;
    j["d"] = d ? *d : min_distance(code);
    j["linear"] = to_string(code.linear);
    if (code.dimension) j["k"] = *code.dimension;
    return j;
}

}  // namespace

json build_report(const RunConfig& cfg) {
    json out;
    out["schema"] = kSchemaVersion;
    out["config"] = to_json(cfg);

    GaloisRing ring(cfg.m);
    Budget budget = cfg.budget();

    DefiningSet d;
    std::optional<BooleanFunction> f;
    if (cfg.kind == SetKind::Skew) {
        d = cfg.seed ? skew_set_random(ring, cfg.seed) : skew_set(ring);
    } else {
        if (cfg.function_spec.empty())
            throw std::invalid_argument("support constructions need --f");
        f = parse_function(ring.field(), cfg.function_spec);
        d = cfg.kind == SetKind::Support ? defining_set_support(ring, *f)
                                         : defining_set_support_plus(ring, *f);
    }
    TraceCode code(ring, std::move(d));

    out["m"] = cfg.m;
    out["kind"] = to_string(cfg.kind);
    out["n"] = code.n();

    if (f) {
        json fj;
        fj["spec"] = cfg.function_spec;
        fj["hex"] = f->to_hex();
        fj["n_f"] = f->support_size();
        Classification cls = f->classify();
        fj["class"] = to_string(cls.cls);
        if (cls.rank) fj["rank"] = cls.rank->rank;
        out["function"] = fj;
    }

    LeeWeightEnumerator brute = enumerate_weights(code, budget);
    out["enumerator"] = enumerator_json(brute);

    std::optional<LeeWeightEnumerator> analytic;
    switch (cfg.kind) {
        case SetKind::Support: analytic = analytic_support(ring, *f); break;
        case SetKind::SupportPlus2T: analytic = analytic_support_plus(ring, *f); break;
        case SetKind::Skew: analytic = analytic_skew(ring); break;
        case SetKind::Custom: break;
    }
    if (analytic) {
        out["analytic"] = enumerator_json(*analytic);
        out["analytic_match"] = (*analytic == brute);
    }

    // A defining set can yield the all-zero code (e.g. D = {0}); report d = 0.
    bool degenerate = brute.counts.size() == 1 && brute.counts.count(0) == 1;
    std::uint32_t lee_d = degenerate ? 0 : brute.min_nonzero_weight();
    out["lee_min_nonzero"] = lee_d;

    BinaryCode gray = gray_image(code, budget);
    if (cfg.m <= 3) gray.linear = is_linear_direct(gray) ? Tri::Yes : Tri::No;
    out["gray"] = binary_summary(gray, lee_d);  // Gray map is a Lee isometry

    BinaryCode res = residue_code(code, budget);
    out["residue"] = binary_summary(res);
    BinaryCode tor = torsion_code(code, budget);
    out["torsion"] = binary_summary(tor);
    out["torsion"]["simplex_replication"] = simplex_replication_check(tor, cfg.m);

    json gj;
    if (lee_d >= 1) {
        gj["gray_k"] = 2 * cfg.m;  // log2 of the family size
        gj["gray_bound"] = griesmer_bound(2 * cfg.m, lee_d, 2);
        gj["gray_meets"] = meets_griesmer(gray.length, 2 * cfg.m, lee_d, 2);
    }
    std::uint32_t tor_d = min_distance(tor);
    if (tor.dimension && *tor.dimension >= 1 && tor_d >= 1) {
        gj["torsion_bound"] = griesmer_bound(*tor.dimension, tor_d, 2);
        gj["torsion_meets"] = meets_griesmer(tor.length, *tor.dimension, tor_d, 2);
    }
    out["griesmer"] = gj;
    return out;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "trace code over Z4: m=" << report.at("m").get<int>() << " kind="
       << report.at("kind").get<std::string>() << " n=" << report.at("n").get<std::uint64_t>()
       << "\n";
    if (report.contains("function")) {
        const auto& fj = report.at("function");
        os << "function: " << fj.at("spec").get<std::string>() << " class="
           << fj.at("class").get<std::string>() << " n_f=" << fj.at("n_f").get<std::uint64_t>()
           << " hex=" << fj.at("hex").get<std::string>() << "\n";
    }
    os << "lee weight enumerator:";
    for (const auto& pair : report.at("enumerator"))
        os << " " << pair[0].get<std::uint64_t>() << ":" << pair[1].get<std::uint64_t>();
    os << "\n";
    if (report.contains("analytic_match"))
        os << "analytic distribution match: "
           << (report.at("analytic_match").get<bool>() ? "yes" : "NO") << "\n";
    auto code_line = [&](const char* label, const json& c) {
        os << label << ": n=" << c.at("n").get<std::uint64_t>() << " M=" << c.at("M").get<std::uint64_t>();
        if (c.contains("M_family")) os << " (family " << c.at("M_family").get<std::uint64_t>() << ")";
        os << " d=" << c.at("d").get<std::uint64_t>() << " linear=" << c.at("linear").get<std::string>();
        if (c.contains("k")) os << " k=" << c.at("k").get<std::uint64_t>();
        os << "\n";
    };
    code_line("gray image", report.at("gray"));
    code_line("residue", report.at("residue"));
    code_line("torsion", report.at("torsion"));
    const auto& gj = report.at("griesmer");
    os << "griesmer:";
    if (gj.contains("gray_bound"))
        os << " gray bound " << gj.at("gray_bound").get<std::uint64_t>() << " meets="
           << (gj.at("gray_meets").get<bool>() ? "yes" : "no");
    if (gj.contains("torsion_bound"))
        os << ", torsion bound " << gj.at("torsion_bound").get<std::uint64_t>() << " meets="
           << (gj.at("torsion_meets").get<bool>() ? "yes" : "no");
    os << "\n";
    return os.str();
}

std::string render_csv(const json& report) {
    std::ostringstream os;
    os << "weight,frequency\n";
    for (const auto& pair : report.at("enumerator"))
        os << pair[0].get<std::uint64_t>() << "," << pair[1].get<std::uint64_t>() << "\n";
    return os.str();
}

json ring_info_json(const GaloisRing& ring) {
    json j;
    j["schema"] = kSchemaVersion;
    j["m"] = ring.m();
    std::string fp;
    for (int i = ring.m(); i >= 0; --i) fp += char('0' + ((ring.field().poly() >> i) & 1));
    j["field_poly"] = fp;
    std::string hp;
    for (int i = ring.m(); i >= 0; --i) {
        hp += std::to_string(static_cast<int>(ring.basic_poly()[i]));
        if (i) hp += ",";
    }
    j["basic_poly_msb_first"] = hp;
    j["size"] = ring.size();
    j["teichmuller_size"] = ring.teichmuller().size();
    j["units"] = ring.unit_count();
    j["ideal"] = ring.ideal_count();
    j["xi"] = ring.to_string(ring.xi());
    return j;
}

json teichmuller_json(const GaloisRing& ring) {
    json j;
    j["schema"] = kSchemaVersion;
    j["m"] = ring.m();
    json arr = json::array();
    for (RingElem t : ring.teichmuller()) arr.push_back(ring.to_string(t));
    j["teichmuller"] = arr;
    return j;
}

json gamma_report_json(const GaloisRing& ring, const GammaReport& report) {
    json j;
    j["m"] = report.m;
    j["checked"] = report.checked;
    json fails = json::array();
    for (RingElem w : report.failures) fails.push_back(ring.to_string(w));
    j["failures"] = fails;
    return j;
}

json verify_report_json(const verify::Report& report) {
    json j;
    j["target"] = report.target;
    j["pass"] = report.pass();
    json claims = json::array();
    for (const auto& c : report.claims) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        claims.push_back(cj);
    }
    j["claims"] = claims;
    j["notes"] = report.notes;
    return j;
}

std::string codewords_csv(const TraceCode& code) {
    if (code.ring().m() > 3)
        throw BudgetExceeded("codeword listings are exported only for m <= 3");
    std::ostringstream os;
    os << "a_index,a_digits,codeword,lee_weight\n";
    const GaloisRing& ring = code.ring();
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        RingElem a{v};
        auto cw = code.codeword(a);
        os << v << ",";
        std::string digits = ring.to_string(a);
        for (auto& ch : digits)
            if (ch == ',') ch = ';';
        os << digits << ",";
        for (std::size_t i = 0; i < cw.size(); ++i) {
            if (i) os << ';';
            os << static_cast<int>(cw[i]);
        }
        os << "," << lee_weight(cw) << "\n";
    }
    return os.str();
}

std::string spectrum_csv(const BooleanFunction& f) {
    std::ostringstream os;
    os << "w_index,value\n";
    auto spec = f.walsh_spectrum();
    for (std::size_t w = 0; w < spec.values.size(); ++w)
        os << w << "," << spec.values[w] << "\n";
    return os.str();
}

std::string gray_words_hex(const BinaryCode& code) {
    std::vector<std::string> lines;
    lines.reserve(code.words.size());
    for (const auto& w : code.words) lines.push_back(to_hex(w, code.length));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace z4trace
