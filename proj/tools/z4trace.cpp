// Command-line front end: construct the trace-code families over Z4,
// compute exact Lee weight distributions both ways, and verify the
// closed-form claims. Exit codes: 0 pass, 1 claim failure, 2 usage or
// budget error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "z4trace/run_config.hpp"

namespace {

using nlohmann::ordered_json;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_ring_info(int m, const std::string& format, const std::string& teich_path) {
    z4trace::GaloisRing ring(m);
    ordered_json j = z4trace::ring_info_json(ring);
    if (!teich_path.empty())
        write_file(teich_path, z4trace::teichmuller_json(ring).dump(2) + "\n");
    if (format == "text") {
        std::cout << "GR(4," << m << "): basic poly (msb first) "
                  << j.at("basic_poly_msb_first").get<std::string>() << ", |R| = "
                  << j.at("size").get<std::uint64_t>() << ", |T| = "
                  << j.at("teichmuller_size").get<std::uint64_t>() << ", |R*| = "
                  << j.at("units").get<std::uint64_t>() << ", |I| = "
                  << j.at("ideal").get<std::uint64_t>() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_build(const z4trace::RunConfig& cfg, const std::string& codewords_path,
              const std::string& spectrum_path, const std::string& gray_path) {
    ordered_json report = z4trace::build_report(cfg);

    if (!codewords_path.empty() || !spectrum_path.empty() || !gray_path.empty()) {
        z4trace::GaloisRing ring(cfg.m);
        std::optional<z4trace::BooleanFunction> f;
        z4trace::DefiningSet d;
        if (cfg.kind == z4trace::SetKind::Skew) {
            d = cfg.seed ? z4trace::skew_set_random(ring, cfg.seed) : z4trace::skew_set(ring);
        } else {
            f = z4trace::parse_function(ring.field(), cfg.function_spec);
            d = cfg.kind == z4trace::SetKind::Support
                    ? z4trace::defining_set_support(ring, *f)
                    : z4trace::defining_set_support_plus(ring, *f);
        }
        z4trace::TraceCode code(ring, std::move(d));
        if (!codewords_path.empty()) write_file(codewords_path, z4trace::codewords_csv(code));
        if (!spectrum_path.empty()) {
            if (!f) throw std::invalid_argument("--spectrum-csv needs a support construction");
            write_file(spectrum_path, z4trace::spectrum_csv(*f));
        }
        if (!gray_path.empty())
            write_file(gray_path, z4trace::gray_words_hex(z4trace::gray_image(code, cfg.budget())));
    }

    if (cfg.format == "text")
        std::cout << z4trace::render_text(report);
    else if (cfg.format == "csv")
        std::cout << z4trace::render_csv(report);
    else
        std::cout << report.dump(2) << "\n";

    if (report.contains("analytic_match") && !report.at("analytic_match").get<bool>()) return 1;
    return 0;
}

int cmd_verify(const std::string& target, const std::string& m_range, std::uint64_t seed,
               int random_sets, const std::string& format) {
    z4trace::verify::Options opt;
    if (!m_range.empty()) {
        auto [lo, hi] = z4trace::parse_m_range(m_range);
        opt.m_lo = lo;
        opt.m_hi = hi;
    }
    opt.seed = seed;
    opt.random_skew_sets = random_sets;

    auto reports = z4trace::verify::run_target(target, opt);
    bool all_pass = true;
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        all_pass = all_pass && rep.pass();
        if (format == "text") {
            for (const auto& c : rep.claims)
                std::cout << (c.pass ? "PASS " : "FAIL ") << rep.target << ": " << c.name
                          << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            for (const auto& n : rep.notes) std::cout << "NOTE " << rep.target << ": " << n << "\n";
        } else {
            out.push_back(z4trace::verify_report_json(rep));
        }
    }
    if (format != "text") {
        ordered_json wrapper;
        wrapper["schema"] = z4trace::kSchemaVersion;
        wrapper["reports"] = out;
        wrapper["pass"] = all_pass;
        std::cout << wrapper.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact trace codes over Z4: constructions, Lee weight distributions, "
                 "and closed-form verification"};
    app.require_subcommand(1);

    // ring-info
    auto* ring_cmd = app.add_subcommand("ring-info", "Field and ring structure for a given m");
    int ri_m = 2;
    std::string ri_format = "json", ri_teich;
    ring_cmd->add_option("--m", ri_m, "extension degree (1..12)")->required();
    ring_cmd->add_option("--format", ri_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    ring_cmd->add_option("--teichmuller-json", ri_teich, "dump the Teichmuller table to a file");

    // build
    auto* build_cmd = app.add_subcommand("build", "Construct a code and weigh it both ways");
    z4trace::RunConfig cfg;
    std::string kind_str = "skew", codewords_path, spectrum_path, gray_path;
    int max_enum_m = 0;
    build_cmd->add_option("--m", cfg.m, "extension degree")->required();
    build_cmd->add_option("--kind", kind_str, "support | support-plus | skew")->required();
    build_cmd->add_option("--f", cfg.function_spec,
                          "function spec: affine:a=<elt>,b=<bit> | gold:alpha=<elt>,i=<int> | "
                          "mm:identity | mm:<perm> | hex:<table> | bent:auto | semibent:auto");
    build_cmd->add_option("--format", cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    build_cmd->add_option("--seed", cfg.seed, "random skew set seed (0 = canonical)");
    build_cmd->add_option("--max-enum-m", max_enum_m, "override the enumeration caps");
    build_cmd->add_option("--codewords-csv", codewords_path, "dump all codewords (m <= 3)");
    build_cmd->add_option("--spectrum-csv", spectrum_path, "dump the Walsh spectrum of --f");
    build_cmd->add_option("--gray-words", gray_path, "dump the Gray image as sorted hex words");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check the closed-form claims");
    std::string target = "all", m_range, v_format = "text";
    std::uint64_t v_seed = 1;
    int v_random_sets = 10;
    verify_cmd
        ->add_option("target", target,
                     "gamma | rank | thm-support | thm-support-plus | thm-skew | "
                     "gray-linearity | all")
        ->required();
    verify_cmd->add_option("--m", m_range, "m range, e.g. 4 or 2..8 (default per target)");
    verify_cmd->add_option("--seed", v_seed, "base seed for randomized skew sets");
    verify_cmd->add_option("--random-sets", v_random_sets, "number of random skew sets per m");
    verify_cmd->add_option("--format", v_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (ring_cmd->parsed()) return cmd_ring_info(ri_m, ri_format, ri_teich);
        if (build_cmd->parsed()) {
            cfg.kind = z4trace::parse_kind(kind_str);
            if (max_enum_m > 0) cfg.max_enum_m = max_enum_m;
            return cmd_build(cfg, codewords_path, spectrum_path, gray_path);
        }
        if (verify_cmd->parsed())
            return cmd_verify(target, m_range, v_seed, v_random_sets, v_format);
    } catch (const z4trace::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
