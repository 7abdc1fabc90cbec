#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmf/concomitants.hpp"
#include "qmf/errors.hpp"
#include "qmf/psi.hpp"
#include "qmf/verification.hpp"

using json = nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 12345;

struct Options {
    unsigned prec = 25;
    uint64_t seed = kDefaultSeed;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

json series_json(const qmf::QSeries& s) {
    json coeffs = json::array();
    for (unsigned n = 0; n <= s.prec(); ++n) coeffs.push_back(s.coeff(n).str());
    return json{{"prec", s.prec()}, {"coeffs", coeffs}};
}

json rational_json(const qmf::Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

json certificate_json(const qmf::MembershipCertificate& cert) {
    json coords = json::array();
    for (const auto& [m, c] : cert.coords) {
        json entry = rational_json(c);
        entry["monomial"] = m.str();
        coords.push_back(entry);
    }
    return json{{"weight", cert.weight},
                {"quasimodular", cert.quasimodular},
                {"coords", coords},
                {"surplus_verified", cert.surplus_verified}};
}

int cmd_series(const Options& opt, const qmf::EllipticForm& f) {
    if (opt.json()) {
        json out{{"name", f.name},
                 {"weight", f.weight},
                 {"quasimodular", f.quasimodular},
                 {"series", series_json(f.series)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << f.series.str() << "\n";
    }
    return 0;
}

int cmd_psi(const Options& opt, const std::string& inv_name,
            const std::vector<std::string>& form_names) {
    auto inv = qmf::catalog_by_name(inv_name);
    if (!inv) {
        std::cerr << "unknown invariant '" << inv_name << "'; try: ";
        for (const auto& n : qmf::catalog_names()) std::cerr << n << " ";
        std::cerr << "\n";
        return 2;
    }
    std::vector<qmf::EllipticForm> forms;
    for (const auto& n : form_names) {
        auto f = qmf::form_by_name(n, opt.prec);
        if (!f) {
            std::cerr << "unknown form '" << n << "' (use e2, e4, e6, ..., delta)\n";
            return 2;
        }
        forms.push_back(std::move(*f));
    }
    if (forms.size() != inv->spec.slots()) {
        std::cerr << "invariant " << inv_name << " takes " << inv->spec.slots() << " form(s)\n";
        return 2;
    }
    qmf::PsiResult res;
    try {
        res = qmf::psi_apply(*inv, forms, opt.prec);
    } catch (const qmf::verification_failed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    std::string ident =
        qmf::identification_string_with_unit(res.identification, res.unit.i_exp, res.unit.pi_exp);
    if (opt.json()) {
        json out{{"invariant", inv_name},
                 {"forms", form_names},
                 {"weight", res.claimed_weight},
                 {"quasimodular", res.quasimodular},
                 {"character", res.character},
                 {"unit", res.unit.unit_str()},
                 {"identification", ident},
                 {"certificate", certificate_json(res.identification)},
                 {"series", series_json(res.series)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "invariant:      " << inv->name << " (degrees";
        for (auto d : inv->degrees) std::cout << " " << d;
        std::cout << ", order " << inv->order << ")\n";
        std::cout << "weight:         " << res.claimed_weight
                  << (res.quasimodular ? " (quasimodular)" : "") << ", surplus "
                  << res.identification.surplus_verified << "\n";
        std::cout << "unit:           " << res.unit.unit_str() << "\n";
        std::cout << "identification: " << ident << "\n";
    }
    return 0;
}

int cmd_rc(const Options& opt, const std::string& fn, const std::string& gn, unsigned r) {
    auto f = qmf::form_by_name(fn, opt.prec);
    auto g = qmf::form_by_name(gn, opt.prec);
    if (!f || !g) {
        std::cerr << "unknown form (use e2, e4, e6, ..., delta)\n";
        return 2;
    }
    qmf::EllipticForm rc = qmf::rankin_cohen(*f, *g, r, opt.prec);
    try {
        auto cert = qmf::membership(rc.series, rc.weight, rc.quasimodular);
        std::string ident = qmf::identification_string(cert, true);
        if (opt.json()) {
            json out{{"bracket", rc.name},
                     {"weight", rc.weight},
                     {"quasimodular", rc.quasimodular},
                     {"identification", ident},
                     {"certificate", certificate_json(cert)},
                     {"series", series_json(rc.series)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << ident << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "identification failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

qmf::Convention parse_convention(const std::string& s) {
    if (s == "binomial" || s == "B") return qmf::Convention::Binomial;
    if (s == "plain" || s == "P") return qmf::Convention::Plain;
    throw CLI::ValidationError("convention must be 'binomial' or 'plain'");
}

int cmd_transvect(const Options& opt, unsigned m, unsigned n, unsigned r,
                  const std::string& conv_a, const std::string& conv_b) {
    qmf::BinaryFormSpec spec({m, n}, {parse_convention(conv_a), parse_convention(conv_b)});
    qmf::MultiPoly t = qmf::transvectant(spec, qmf::form_poly(spec, 0), qmf::form_poly(spec, 1),
                                         r, m, n);
    std::string text = t.str(spec.names());
    if (opt.json()) {
        json out{{"degrees", {m, n}}, {"r", r}, {"polynomial", text}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int cmd_invariants_list(const Options& opt) {
    if (opt.json()) {
        json out = json::array();
        for (const auto& n : qmf::catalog_names()) {
            auto inv = *qmf::catalog_by_name(n);
            json degrees = json::array();
            for (auto d : inv.spec.degrees) degrees.push_back(d);
            out.push_back(json{{"name", n},
                               {"form_degrees", degrees},
                               {"order", inv.order},
                               {"polynomial", inv.poly.str(inv.spec.names())}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& n : qmf::catalog_names()) {
            auto inv = *qmf::catalog_by_name(n);
            std::cout << n << ": " << inv.poly.str(inv.spec.names()) << "\n";
        }
    }
    return 0;
}

int cmd_invariants_check(const Options& opt, const std::string& name, unsigned trials) {
    auto inv = qmf::catalog_by_name(name);
    if (!inv) {
        std::cerr << "unknown invariant '" << name << "'\n";
        return 2;
    }
    auto rep = qmf::verify_invariance(*inv, trials, opt.seed);
    if (opt.json()) {
        json out{{"name", name},
                 {"trials", rep.trials},
                 {"passed", rep.passed},
                 {"counterexample", rep.counterexample}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << name << ": " << (rep.passed ? "pass" : "FAIL " + rep.counterexample)
                  << " (" << trials << " trials)\n";
    }
    return rep.passed ? 0 : 1;
}

int cmd_weights(const Options& opt, const std::string& rule,
                const std::vector<std::string>& slot_args, long j, long k, unsigned a, unsigned b,
                unsigned d, unsigned d1, unsigned d2, unsigned n, unsigned g) {
    auto parse_slots = [&](size_t fields) {
        std::vector<qmf::Siegel2Slot> slots;
        for (const auto& s : slot_args) {
            qmf::Siegel2Slot slot;
            std::vector<std::string> parts;
            size_t pos = 0;
            while (pos <= s.size()) {
                size_t c = s.find(',', pos);
                parts.push_back(s.substr(pos, c == std::string::npos ? c : c - pos));
                if (c == std::string::npos) break;
                pos = c + 1;
            }
            if (parts.size() != fields)
                throw CLI::ValidationError("--slot needs " + std::to_string(fields) + " fields");
            slot.j = std::stol(parts[0]);
            slot.k = std::stol(parts[1]);
            if (fields == 4) {
                slot.character = parts[2];
                slot.degree = static_cast<unsigned>(std::stoul(parts[3]));
            } else {
                slot.degree = static_cast<unsigned>(std::stoul(parts[2]));
            }
            slots.push_back(std::move(slot));
        }
        return slots;
    };

    json out;
    std::string text;
    if (rule == "siegel2-inv") {
        auto w = qmf::siegel2_invariant_weight(parse_slots(3));
        text = w.str();
        out = {{"rule", rule}, {"weight", {w.weight[0], w.weight[1]}}, {"character", w.character}};
    } else if (rule == "siegel2-cov") {
        auto w = qmf::siegel2_covariant_weight(j, k, a, b);
        long l = qmf::embedding_exponent(j, k, a, b);
        text = w.str() + ", det twist " + std::to_string(l);
        out = {{"rule", rule}, {"weight", {w.weight[0], w.weight[1]}}, {"det_twist", l}};
    } else if (rule == "siegel2-multicov") {
        auto w = qmf::siegel2_multicovariant_weight(parse_slots(4), b);
        text = w.str();
        out = {{"rule", rule}, {"weight", {w.weight[0], w.weight[1]}}, {"character", w.character}};
    } else if (rule == "picard") {
        auto w = qmf::picard_weight(k, d1, d2, n);
        text = "(" + std::to_string(w.weight[0]) + "," + std::to_string(w.weight[1]) + ")";
        out = {{"rule", rule}, {"weight", {w.weight[0], w.weight[1]}}};
    } else if (rule == "sym-disc") {
        long w = qmf::symmetric_discriminant_weight(g, k);
        text = std::to_string(w);
        out = {{"rule", rule}, {"weight", w}};
    } else if (rule == "elliptic-char") {
        auto w = qmf::elliptic_character_weight(k, d, n);
        text = "stated " + std::to_string(w.stated) + ", validated " + std::to_string(w.validated) +
               ", character " + w.character;
        out = {{"rule", rule},
               {"stated", w.stated},
               {"validated", w.validated},
               {"character", w.character}};
    } else if (rule == "embedding") {
        long l = qmf::embedding_exponent(j, k, a, b);
        text = std::to_string(l);
        out = {{"rule", rule}, {"det_twist", l}};
    } else {
        std::cerr << "unknown rule '" << rule
                  << "' (siegel2-inv, siegel2-cov, siegel2-multicov, picard, sym-disc, "
                     "elliptic-char, embedding)\n";
        return 2;
    }
    if (opt.json())
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<qmf::CheckResult> results;
    try {
        results = qmf::run_verification_suite(opt.prec, opt.seed);
    } catch (const qmf::insufficient_precision& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    }
    bool ok = qmf::all_hard_checks_passed(results);
    if (opt.json()) {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back(json{{"check_name", r.id},
                                  {"status", r.hard ? (r.passed ? "pass" : "fail") : "report"},
                                  {"lhs", r.lhs},
                                  {"rhs", r.rhs},
                                  {"details", r.details}});
        std::cout << json{{"precision", opt.prec},
                          {"seed", opt.seed},
                          {"passed", ok},
                          {"checks", checks}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : results) {
            std::string status = r.hard ? (r.passed ? "PASS" : "FAIL") : "REPORT";
            std::cout << "[" << status << "] " << r.id << ": " << r.description << "\n";
            if (!r.hard && !r.lhs.empty())
                std::cout << "         measured " << r.lhs << " | stated " << r.rhs
                          << (r.details.empty() ? "" : " | " + r.details) << "\n";
            if (r.hard && !r.passed)
                std::cout << "         lhs " << r.lhs << "\n         rhs " << r.rhs
                          << (r.details.empty() ? "" : "\n         " + r.details) << "\n";
        }
        std::cout << (ok ? "all hard checks passed" : "HARD CHECK FAILURES") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for q-expansions of modular forms and invariants of "
                 "binary forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--prec", opt.prec, "series precision (coefficients up to q^prec)")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    unsigned eis_k = 4;
    auto* eis = app.add_subcommand("eis", "q-expansion of the Eisenstein series e_k");
    eis->add_option("k", eis_k, "even weight >= 2")->required();

    app.add_subcommand("delta", "q-expansion of the weight-12 cusp form");

    std::string psi_inv;
    std::vector<std::string> psi_forms;
    auto* psi = app.add_subcommand("psi", "apply a catalog invariant to modular forms");
    psi->add_option("invariant", psi_inv, "catalog invariant name")->required();
    psi->add_option("forms", psi_forms, "form names, one per slot")->required();

    std::string rc_f, rc_g;
    unsigned rc_r = 1;
    auto* rc = app.add_subcommand("rc", "Rankin-Cohen bracket [f,g]_r");
    rc->add_option("f", rc_f)->required();
    rc->add_option("g", rc_g)->required();
    rc->add_option("r", rc_r)->required();

    unsigned tv_m = 2, tv_n = 2, tv_r = 1;
    std::string tv_conv_a = "binomial", tv_conv_b = "binomial";
    auto* tv = app.add_subcommand("transvect", "transvectant (F,G)_r of generic binary forms");
    tv->add_option("m", tv_m, "degree of F")->required();
    tv->add_option("n", tv_n, "degree of G")->required();
    tv->add_option("r", tv_r, "transvection index")->required();
    tv->add_option("--conv-a", tv_conv_a, "convention of F: binomial | plain");
    tv->add_option("--conv-b", tv_conv_b, "convention of G: binomial | plain");

    std::string w_rule;
    std::vector<std::string> w_slots;
    long w_j = 0, w_k = 0;
    unsigned w_a = 1, w_b = 0, w_d = 1, w_d1 = 0, w_d2 = 0, w_n = 0, w_g = 2;
    auto* wt = app.add_subcommand("weights", "weight calculators for concomitant application");
    wt->add_option("rule", w_rule,
                   "siegel2-inv | siegel2-cov | siegel2-multicov | picard | sym-disc | "
                   "elliptic-char | embedding")
        ->required();
    wt->add_option("--slot", w_slots, "slot as j,k,d (siegel2-inv) or j,k,chi,a (multicov)");
    wt->add_option("--j", w_j);
    wt->add_option("--k", w_k);
    wt->add_option("--a", w_a);
    wt->add_option("--b", w_b);
    wt->add_option("--d", w_d);
    wt->add_option("--d1", w_d1);
    wt->add_option("--d2", w_d2);
    wt->add_option("--n", w_n);
    wt->add_option("--g", w_g);

    auto* inv_cmd = app.add_subcommand("invariants", "catalog of invariants");
    auto* inv_list = inv_cmd->add_subcommand("list", "list catalog entries");
    std::string check_name;
    unsigned check_trials = 5;
    auto* inv_check = inv_cmd->add_subcommand("check", "equivariance check of one entry");
    inv_check->add_option("name", check_name)->required();
    inv_check->add_option("--trials", check_trials)->capture_default_str();
    inv_cmd->require_subcommand(1);

    app.add_subcommand("verify", "run the built-in exact identity suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eis->parsed()) {
            if (eis_k < 2 || eis_k % 2 != 0) {
                std::cerr << "eis: k must be even and >= 2\n";
                return 2;
            }
            return cmd_series(opt, qmf::eisenstein(eis_k, opt.prec));
        }
        if (app.get_subcommand("delta")->parsed())
            return cmd_series(opt, qmf::delta_form(opt.prec));
        if (psi->parsed()) return cmd_psi(opt, psi_inv, psi_forms);
        if (rc->parsed()) return cmd_rc(opt, rc_f, rc_g, rc_r);
        if (tv->parsed()) return cmd_transvect(opt, tv_m, tv_n, tv_r, tv_conv_a, tv_conv_b);
        if (wt->parsed())
            return cmd_weights(opt, w_rule, w_slots, w_j, w_k, w_a, w_b, w_d, w_d1, w_d2, w_n,
                               w_g);
        if (inv_cmd->parsed()) {
            if (inv_list->parsed()) return cmd_invariants_list(opt);
            if (inv_check->parsed()) return cmd_invariants_check(opt, check_name, check_trials);
        }
        if (app.get_subcommand("verify")->parsed()) return cmd_verify(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qmf::insufficient_precision& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        if (opt.json())
            std::cerr << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
