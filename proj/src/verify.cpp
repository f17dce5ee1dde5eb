#include "z4trace/verify.hpp"

#include <algorithm>
#include <sstream>

#include "z4trace/binary_codes.hpp"
#include "z4trace/charsum.hpp"

namespace z4trace::verify {

namespace {

void default_range(Options& opt, int lo, int hi) {
    if (opt.m_lo == 0) opt.m_lo = lo;
    if (opt.m_hi == 0) opt.m_hi = hi;
    if (opt.m_lo < 1 || opt.m_hi < opt.m_lo)
        throw std::invalid_argument("bad m range");
}

std::string show(const LeeWeightEnumerator& e) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, c] : e.counts) {
        if (!first) os << ", ";
        os << w << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string mtag(int m) { return "m=" + std::to_string(m); }

// Named functions exercised by the construction targets.
std::vector<std::pair<std::string, BooleanFunction>> battery(const BinaryField& field) {
    std::vector<std::pair<std::string, BooleanFunction>> fns;
    fns.emplace_back("affine(a=1,b=0)", BooleanFunction::affine(field, 1, 0));
    fns.emplace_back("affine(a=1,b=1)", BooleanFunction::affine(field, 1, 1));
    fns.emplace_back("qform", q_form_function(field));
    int m = field.m();
    if (m >= 4 && m % 2 == 0) {
        std::uint32_t nf = (1u << (m - 1)) - (1u << ((m - 2) / 2));
        if (auto f = find_bent(field, nf)) fns.emplace_back("bent", *f);
    }
    if (m >= 5 && m % 2 == 1) {
        std::uint32_t nf = (1u << (m - 1)) - (1u << ((m - 1) / 2));
        if (auto f = find_semibent(field, nf)) fns.emplace_back("semibent", *f);
    }
    return fns;
}

// For every a in R the character-sum weight equals the Lee weight of the
// materialized codeword, and the Gray image of the codeword has matching
// Hamming weight.
bool oracle_and_isometry(const TraceCode& code, std::string& why) {
    const GaloisRing& ring = code.ring();
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        RingElem a{v};
        auto cw = code.codeword(a);
        std::uint32_t direct = lee_weight(cw);
        std::uint32_t via_chi = weight_via_charsum(code, a);
        auto gray = gray_map(cw);
        std::uint32_t hw = 0;
        for (auto b : gray) hw += b;
        if (direct != via_chi || hw != direct) {
            why = "mismatch at a=" + ring.to_string(a) + ": lee=" + std::to_string(direct) +
                  " charsum=" + std::to_string(via_chi) + " gray=" + std::to_string(hw);
            return false;
        }
    }
    return true;
}

bool parseval_ok(const BooleanFunction& f) {
    auto spec = f.walsh_spectrum();
    std::int64_t sum = 0;
    for (auto v : spec.values) sum += static_cast<std::int64_t>(v) * v;
    std::int64_t want = static_cast<std::int64_t>(f.field().size()) * f.field().size();
    return sum == want;
}

Claim claim(std::string name, bool pass, std::string detail = "") {
    return Claim{std::move(name), pass, std::move(detail)};
}

}  // namespace

Report gamma(Options opt) {
    default_range(opt, 2, 8);
    Report rep{"gamma", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        GaloisRing ring(m);
        GaussInt g1 = gamma_sum(ring, ring.from_z4(1));
        GaussInt ref = gamma_one_reference(m);
        rep.claims.push_back(claim("gamma(1) reference " + mtag(m), g1 == ref,
                                   "computed " + g1.to_string() + ", reference " + ref.to_string()));
        rep.claims.push_back(
            claim("gamma norm " + mtag(m), g1.norm() == static_cast<std::int64_t>(ring.residue_size()),
                  "|gamma(1)|^2 = " + std::to_string(g1.norm())));

        GammaReport gr = verify_gamma_closed_form(ring);
        std::string detail = std::to_string(gr.checked) + " units checked";
        if (!gr.ok())
            detail += ", first failure at w=" + ring.to_string(gr.failures.front());
        rep.claims.push_back(claim("gamma closed form " + mtag(m), gr.ok(), detail));

        // Tr(t) = tr(t mod 2) + 2 Q(t mod 2) on the Teichmuller set.
        bool identity = true;
        for (RingElem t : ring.teichmuller()) {
            FieldElem tbar = ring.reduce_mod2(t);
            unsigned want = (static_cast<unsigned>(ring.field().trace(tbar)) +
                             2u * static_cast<unsigned>(q_form(ring.field(), tbar))) & 3u;
            if (ring.gen_trace(t) != want) identity = false;
        }
        rep.claims.push_back(claim("trace/Q bridge identity " + mtag(m), identity));
    }
    return rep;
}

Report rank(Options opt) {
    default_range(opt, 2, 12);
    Report rep{"rank", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        BinaryField field(m);
        BooleanFunction q = q_form_function(field);
        QuadraticFormRank r = quadratic_rank(q);
        int want = 2 * (m / 2);
        rep.claims.push_back(claim("rank(Q) = 2*floor(m/2) " + mtag(m), r.rank == want,
                                   "rank " + std::to_string(r.rank) + ", radical " +
                                       std::to_string(r.radical_dim)));

        bool idem = true;
        for (FieldElem x = 0; x < field.size() && idem; ++x) {
            FieldElem acc = 0;
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    acc ^= field.pow(x, (1ull << i) + (1ull << j));
            if (field.mul(acc, acc) != acc || acc > 1) idem = false;
        }
        rep.claims.push_back(claim("Q idempotent " + mtag(m), idem));

        QuadraticFormRank aff = quadratic_rank(BooleanFunction::affine(field, 1, 1));
        rep.claims.push_back(claim("affine rank 0 " + mtag(m), aff.rank == 0));
    }
    return rep;
}

Report thm_support(Options opt) {
    default_range(opt, 2, 5);
    Report rep{"thm-support", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        GaloisRing ring(m);
        for (auto& [name, f] : battery(ring.field())) {
            TraceCode code(ring, defining_set_support(ring, f));
            std::string why;
            rep.claims.push_back(
                claim("charsum oracle + Gray isometry [" + name + "] " + mtag(m),
                      oracle_and_isometry(code, why), why));

            LeeWeightEnumerator brute = enumerate_weights(code, opt.budget);
            LeeWeightEnumerator analytic = analytic_support(ring, f);
            rep.claims.push_back(claim("analytic = brute force [" + name + "] " + mtag(m),
                                       analytic == brute,
                                       "brute " + show(brute)));
            rep.claims.push_back(claim("Parseval [" + name + "] " + mtag(m), parseval_ok(f)));
        }

        if (m == 4) {
            BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 1);
            TraceCode code(ring, defining_set_support(ring, f));
            BinaryCode gray = gray_image(code, opt.budget);
            LeeWeightEnumerator e = enumerate_weights(code, opt.budget);
            bool ok = gray.length == 16 && gray.family_size == 256 && e.min_nonzero_weight() == 4;
            rep.claims.push_back(claim("affine Gray image (16, 2^8, 4) m=4", ok,
                                       "(" + std::to_string(gray.length) + ", " +
                                           std::to_string(gray.family_size) + ", " +
                                           std::to_string(e.min_nonzero_weight()) + "), " +
                                           std::to_string(gray.words.size()) + " distinct"));

            if (auto bent = find_bent(ring.field(), 6)) {
                TraceCode bcode(ring, defining_set_support(ring, *bent));
                BinaryCode tor = torsion_code(bcode, opt.budget);
                auto dist = weight_distribution(tor);
                std::vector<std::uint32_t> nz;
                for (const auto& [w, c] : dist.counts)
                    if (w) nz.push_back(w);
                bool ok2 = tor.length == 6 && tor.dimension == 4 && min_distance(tor) == 2 &&
                           nz == std::vector<std::uint32_t>{2, 4};
                rep.claims.push_back(claim("bent torsion code [6,4,2], weights {2,4} m=4", ok2,
                                           "n=" + std::to_string(tor.length) + " k=" +
                                               std::to_string(tor.dimension.value_or(-1)) + " d=" +
                                               std::to_string(min_distance(tor))));
            } else {
                rep.claims.push_back(claim("bent torsion code [6,4,2], weights {2,4} m=4", false,
                                           "no bent function with n_f=6 found"));
            }

            // A bent function on m=4 has W(0) = +-4, so its support size is
            // 8 -+ 2; a support size of 8 is unreachable and configurations
            // quoting it are unreproducible.
            bool law = true;
            for (auto& [name, f2] : battery(ring.field())) {
                (void)name;
                if (f2.classify().cls != FnClass::Bent) continue;
                auto nf = f2.support_size();
                if (nf != 6 && nf != 10) law = false;
            }
            rep.claims.push_back(claim("bent support size in {6,10} m=4", law));
            rep.notes.push_back(
                "m=4: a bent function has support size 8 +- 2, never 8; the quoted "
                "n_f=8 bent configuration is unreproducible and excluded.");
        }

        if (m == 5) {
            BooleanFunction f = BooleanFunction::affine(ring.field(), 1, 1);
            TraceCode code(ring, defining_set_support(ring, f));
            BinaryCode gray = gray_image(code, opt.budget);
            LeeWeightEnumerator e = enumerate_weights(code, opt.budget);
            bool ok = gray.length == 32 && gray.family_size == 1024 && e.min_nonzero_weight() == 10;
            rep.claims.push_back(claim("affine Gray image (32, 2^10, 10) m=5 as quoted", ok,
                                       "computed (" + std::to_string(gray.length) + ", " +
                                           std::to_string(gray.family_size) + ", " +
                                           std::to_string(e.min_nonzero_weight()) + ")"));
            if (!ok)
                rep.notes.push_back(
                    "m=5 affine support code: the quoted Gray distance 10 is the low end of "
                    "the weight formula's range but no codeword attains it; enumeration and "
                    "the analytic multiset agree on distance 12 (polynomial-independent), so "
                    "the image meets the optimal linear [32,10,12] parameters.");
        }
    }
    return rep;
}

Report thm_support_plus(Options opt) {
    default_range(opt, 2, 5);
    Report rep{"thm-support-plus", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        GaloisRing ring(m);
        for (auto& [name, f] : battery(ring.field())) {
            TraceCode code(ring, defining_set_support_plus(ring, f));
            std::string why;
            rep.claims.push_back(
                claim("charsum oracle + Gray isometry [" + name + "] " + mtag(m),
                      oracle_and_isometry(code, why), why));

            LeeWeightEnumerator brute = enumerate_weights(code, opt.budget);
            LeeWeightEnumerator analytic = analytic_support_plus(ring, f);
            rep.claims.push_back(claim("analytic = brute force [" + name + "] " + mtag(m),
                                       analytic == brute, "brute " + show(brute)));

            std::uint64_t n = static_cast<std::uint64_t>(f.support_size()) * ring.residue_size();
            auto cls = f.classify().cls;
            if (m == 4 && cls == FnClass::Bent) {
                std::uint32_t delta = 1u << ((3 * m - 2) / 2);
                std::vector<std::uint32_t> want = {static_cast<std::uint32_t>(n - delta),
                                                   static_cast<std::uint32_t>(n),
                                                   static_cast<std::uint32_t>(n + delta)};
                rep.claims.push_back(claim("bent weights {2^m n_f -+ 2^((3m-2)/2), 2^m n_f} m=4",
                                           brute.nonzero_weights() == want, show(brute)));
            }
            if (m == 5 && cls == FnClass::Semibent) {
                std::uint32_t delta = 1u << ((3 * m - 1) / 2);
                std::vector<std::uint32_t> want = {static_cast<std::uint32_t>(n - delta),
                                                   static_cast<std::uint32_t>(n),
                                                   static_cast<std::uint32_t>(n + delta)};
                rep.claims.push_back(
                    claim("semibent weights {2^m n_f -+ 2^((3m-1)/2), 2^m n_f} m=5",
                          brute.nonzero_weights() == want, show(brute)));
            }
        }
    }
    return rep;
}

Report thm_skew(Options opt) {
    default_range(opt, 2, 5);
    Report rep{"thm-skew", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        GaloisRing ring(m);
        const std::uint64_t q = ring.residue_size();
        const std::uint32_t len = static_cast<std::uint32_t>((q - 1) * q / 2);
        LeeWeightEnumerator want = analytic_skew(ring);

        auto check_set = [&](const std::string& label, const DefiningSet& d) {
            // Partition: D, -D and the ideal tile the ring exactly.
            std::vector<bool> seen(ring.size(), false);
            bool partition = d.elements.size() == ring.unit_count() / 2;
            for (RingElem u : d.elements) {
                RingElem nu = ring.neg(u);
                if (!ring.is_unit(u) || seen[u.v] || seen[nu.v]) partition = false;
                seen[u.v] = seen[nu.v] = true;
            }
            rep.claims.push_back(claim("skew partition [" + label + "] " + mtag(m), partition));

            TraceCode code(ring, d);
            LeeWeightEnumerator brute = enumerate_weights(code, opt.budget);
            bool two_weight = brute.nonzero_weights() ==
                              std::vector<std::uint32_t>{len, static_cast<std::uint32_t>(q * q / 2)};
            rep.claims.push_back(claim("two nonzero weights {2^(2m-1), (2^m-1)2^(m-1)} [" + label +
                                           "] " + mtag(m),
                                       two_weight, show(brute)));
            rep.claims.push_back(claim("frequencies {2^m-1, 2^(2m)-2^m} [" + label + "] " + mtag(m),
                                       brute == want, "brute " + show(brute)));
            return code;
        };

        TraceCode canonical = check_set("canonical", skew_set(ring));
        std::string why;
        rep.claims.push_back(claim("charsum oracle + Gray isometry [canonical] " + mtag(m),
                                   oracle_and_isometry(canonical, why), why));

        for (int k = 0; k < opt.random_skew_sets; ++k)
            check_set("seed " + std::to_string(opt.seed + k),
                      skew_set_random(ring, opt.seed + k));

        // Gray image of the canonical code and the Griesmer comparisons.
        std::uint64_t gray_d = q * q / 2 - q / 2;
        if (m <= 4) {
            BinaryCode gray = gray_image(canonical, opt.budget);
            bool params = gray.length == q * q - q && gray.family_size == q * q &&
                          gray.words.size() == q * q &&
                          min_distance(gray) == gray_d;
            rep.claims.push_back(claim("Gray image (2^2m - 2^m, 2^2m, 2^(2m-1) - 2^(m-1)) " + mtag(m),
                                       params,
                                       "(" + std::to_string(gray.length) + ", " +
                                           std::to_string(gray.words.size()) + ", " +
                                           std::to_string(min_distance(gray)) + ")"));
            rep.claims.push_back(claim("Gray length meets Griesmer bound " + mtag(m),
                                       meets_griesmer(gray.length, 2 * m, gray_d, 2),
                                       "bound " + std::to_string(griesmer_bound(2 * m, gray_d, 2))));
        }

        BinaryCode tor = torsion_code(canonical, opt.budget);
        bool tor_params = tor.length == len && tor.dimension == m &&
                          min_distance(tor) == q * q / 4;
        rep.claims.push_back(claim("torsion code [(2^m-1)2^(m-1), m, 2^(2m-2)] " + mtag(m), tor_params,
                                   "n=" + std::to_string(tor.length) + " k=" +
                                       std::to_string(tor.dimension.value_or(-1)) + " d=" +
                                       std::to_string(min_distance(tor))));
        rep.claims.push_back(claim("torsion length meets Griesmer bound " + mtag(m),
                                   meets_griesmer(tor.length, m, q * q / 4, 2),
                                   "bound " + std::to_string(griesmer_bound(m, q * q / 4, 2))));
        rep.claims.push_back(
            claim("torsion = stacked simplex copies " + mtag(m), simplex_replication_check(tor, m)));
    }
    rep.notes.push_back(
        "Frequency convention: weight 2^(2m-1) occurs 2^m - 1 times (residue of b zero) and "
        "weight (2^m-1)2^(m-1) occurs 2^(2m) - 2^m times (b a unit); the transposed "
        "assignment sometimes quoted does not sum to 4^m and is refuted by enumeration.");
    return rep;
}

Report gray_linearity(Options opt) {
    default_range(opt, 2, 3);
    Report rep{"gray-linearity", {}, {}};
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
        GaloisRing ring(m);
        auto run = [&](const std::string& label, const DefiningSet& d) {
            TraceCode code(ring, d);
            BinaryCode gray = gray_image(code, opt.budget);
            bool direct1 = is_linear_direct(gray);
            bool direct2 = is_linear_direct(gray);
            bool criterion = is_linear_z4_criterion(code, opt.budget);
            rep.claims.push_back(claim("linearity tests agree + deterministic [" + label + "] " +
                                           mtag(m),
                                       direct1 == direct2 && direct1 == criterion,
                                       std::string("verdict: ") + (direct1 ? "linear" : "nonlinear")));
            rep.notes.push_back("phi(C_D) [" + label + "] m=" + std::to_string(m) +
                                " verdict: " + (direct1 ? "linear" : "nonlinear"));
        };
        run("canonical", skew_set(ring));
        for (int k = 0; k < 3; ++k)
            run("seed " + std::to_string(opt.seed + k), skew_set_random(ring, opt.seed + k));
    }
    return rep;
}

std::vector<Report> run_target(const std::string& target, Options opt) {
    std::vector<Report> out;
    if (target == "gamma" || target == "all") out.push_back(gamma(opt));
    if (target == "rank" || target == "all") out.push_back(rank(opt));
    if (target == "thm-support" || target == "all") out.push_back(thm_support(opt));
    if (target == "thm-support-plus" || target == "all") out.push_back(thm_support_plus(opt));
    if (target == "thm-skew" || target == "all") out.push_back(thm_skew(opt));
    if (target == "gray-linearity" || target == "all") out.push_back(gray_linearity(opt));
    if (out.empty()) throw std::invalid_argument("unknown verify target: " + target);
    return out;
}

}  // namespace z4trace::verify
