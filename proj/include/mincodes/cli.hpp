#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or I/O error, 2 a verified
// property did not hold.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "constructions.hpp"
#include "io.hpp"
#include "sss.hpp"
#include "sweep.hpp"

namespace mincodes::cli {

inline constexpr std::uint64_t kMaxFieldOrder = 64;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

namespace detail {

struct Options {
    bool json = false;
    std::uint64_t budget = kDefaultBudget;
    std::string family, in, in1, in2, out, alphas, config, csv, method = "search", subset, shares;
    std::size_t t = 0, k = 0, s = 0, r = 0, n = 0, secret_column = 1;
    std::uint64_t q = 0, secret = 0, seed = 0;
    bool strict = false;
};

inline void require_desk_field(std::uint64_t q) {
    if (q > kMaxFieldOrder)
        throw Error(ErrorKind::BadParams, "field order " + std::to_string(q) + " exceeds the CLI limit of " + std::to_string(kMaxFieldOrder));
}

inline LinearCode load_code(const std::string& path) {
    Matrix m = read_matrix_file(path);
    require_desk_field(m.field().q());
    return LinearCode::from_generator(std::move(m));
}

inline std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        long long v = -1;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 0) throw Error(ErrorKind::Parse, "bad list item '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

inline std::string descriptor(const LinearCode& code, std::optional<std::size_t> d) {
    return "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + (d ? "," + std::to_string(*d) : "") + "]_" +
           std::to_string(code.q());
}

inline void emit_matrix(const Matrix& m, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        write_matrix(out, m);
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + out_path);
    write_matrix(f, m);
}

inline Json code_json(const LinearCode& code, std::size_t d) {
    return Json{{"q", code.q()}, {"n", code.n()}, {"k", code.k()}, {"d", d}, {"descriptor", descriptor(code, d)}};
}

inline int cmd_construct(const Options& o, std::ostream& out) {
    require_desk_field(o.q);
    Json warnings = Json::array();
    std::optional<LinearCode> code;
    if (o.family == "first") code = first(o.t, o.q);
    else if (o.family == "second") code = second(o.t, o.k, o.q);
    else if (o.family == "weights") code = weight_s(o.s, o.t, o.q);
    else if (o.family == "extended") {
        code = extended(o.t, o.q);
        if (o.q == 2) warnings.push_back("q = 2: no columns appended, result equals the first construction");
    } else if (o.family == "cf") {
        std::vector<std::uint32_t> alphas;
        for (auto a : parse_list(o.alphas)) alphas.push_back(static_cast<std::uint32_t>(a));
        code = cf_code({o.n, o.k, 0, alphas}, o.q, o.budget);
    } else if (o.family == "cg") code = cg_code(o.r, o.k, o.q, o.budget);
    else throw Error(ErrorKind::BadParams, "unknown family '" + o.family + "'");

    emit_matrix(code->generator(), o.out, out);
    if (!o.out.empty()) {
        if (o.json)
            out << Json{{"command", "construct"}, {"family", o.family}, {"out", o.out}, {"q", code->q()}, {"n", code->n()}, {"k", code->k()}, {"warnings", warnings}}.dump(2) << '\n';
        else {
            out << "wrote " << descriptor(*code, std::nullopt) << " generator to " << o.out << '\n';
            for (const auto& w : warnings) out << "warning: " << w.get<std::string>() << '\n';
        }
    }
    return kExitOk;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.in);
    const auto wd = weight_distribution(code, o.budget);
    const auto minimal = is_minimal_code(code, o.budget);
    const auto ab = ab_condition(code, o.budget);
    const auto full = has_full_value_property(code, o.budget);
    Json warnings = Json::array();
    if (code.has_zero_column()) warnings.push_back("generator has a zero column");
    if (o.json) {
        out << Json{{"command", "analyze"},
                    {"input", o.in},
                    {"code", code_json(code, ab.w_min)},
                    {"is_minimal", minimal.is_minimal},
                    {"w_min", ab.w_min},
                    {"w_max", ab.w_max},
                    {"minimality", to_json(minimal)},
                    {"ab", to_json(ab)},
                    {"full_value", to_json(full)},
                    {"weight_distribution", to_json(wd)},
                    {"warnings", warnings}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    out << "code        " << descriptor(code, ab.w_min) << '\n';
    out << "weights     w_min=" << ab.w_min << " w_max=" << ab.w_max << '\n';
    out << "minimal     " << (minimal.is_minimal ? "yes" : "no") << '\n';
    if (minimal.witness) {
        out << "  covered   " << to_json(minimal.witness->covered.values).dump() << '\n';
        out << "  covering  " << to_json(minimal.witness->covering.values).dump() << '\n';
    }
    out << "AB ratio    " << ab.ratio_num << '/' << ab.ratio_den << (ab.sufficient ? " > " : " <= ") << ab.threshold_num << '/'
        << ab.threshold_den << (ab.sufficient ? " (sufficient)" : " (inconclusive)") << '\n';
    out << "full-value  " << (full.holds ? "yes" : "no") << '\n';
    if (full.witness) out << "  witness   " << to_json(full.witness->values).dump() << '\n';
    for (const auto& [w, c] : wd.counts) out << "  A_" << w << " = " << c << '\n';
    for (const auto& w : warnings) out << "warning: " << w.get<std::string>() << '\n';
    return kExitOk;
}

inline int cmd_distribution(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.in);
    const auto wd = weight_distribution(code, o.budget);
    if (o.json) out << to_json(wd).dump(2) << '\n';
    else out << to_csv(wd);
    return kExitOk;
}

inline int cmd_lift(const Options& o, std::ostream& out) {
    const LinearCode base = load_code(o.in);
    const LinearCode lifted = lift(base, o.s, o.budget);
    emit_matrix(lifted.generator(), o.out, out);
    if (!o.out.empty()) out << "wrote " << descriptor(lifted, std::nullopt) << " generator to " << o.out << '\n';
    return kExitOk;
}

inline int cmd_tensor(const Options& o, std::ostream& out) {
    const LinearCode product = tensor_product(load_code(o.in1), load_code(o.in2));
    emit_matrix(product.generator(), o.out, out);
    if (!o.out.empty()) out << "wrote " << descriptor(product, std::nullopt) << " generator to " << o.out << '\n';
    return kExitOk;
}

inline SssScheme load_scheme(const Options& o) { return SssScheme::with_secret_column(load_code(o.in), o.secret_column); }

inline int cmd_sss_deal(const Options& o, std::ostream& out) {
    const SssScheme scheme = load_scheme(o);
    const auto share = deal(scheme, scheme.field().element(o.secret), o.seed);
    if (o.json) {
        out << Json{{"command", "sss deal"}, {"secret", share.secret.enc}, {"seed", share.seed}, {"shares", to_json(share.shares)}}.dump(2)
            << '\n';
    } else {
        out << "seed " << share.seed << '\n';
        for (std::size_t i = 0; i < share.shares.size(); ++i) out << "P" << i + 2 << ' ' << share.shares[i].enc << '\n';
    }
    return kExitOk;
}

inline int cmd_sss_reconstruct(const Options& o, std::ostream& out) {
    const SssScheme scheme = load_scheme(o);
    const auto subset = parse_list(o.subset);
    Vec shares;
    for (auto v : parse_list(o.shares)) shares.push_back(scheme.field().element(v));
    const FieldElement secret = reconstruct(scheme, subset, shares);
    if (o.json) out << Json{{"command", "sss reconstruct"}, {"subset", subset}, {"secret", secret.enc}}.dump(2) << '\n';
    else out << "secret " << secret.enc << '\n';
    return kExitOk;
}

inline int cmd_sss_access(const Options& o, std::ostream& out) {
    const SssScheme scheme = load_scheme(o);
    if (o.method != "dual" && o.method != "search") throw Error(ErrorKind::BadParams, "method must be dual or search");
    const auto sets = minimal_authorized_sets(scheme, o.method == "dual" ? AccessMethod::Dual : AccessMethod::Search, o.budget);
    if (o.json) {
        out << Json{{"command", "sss access"}, {"method", o.method}, {"minimal_sets", to_json(sets)}}.dump(2) << '\n';
    } else {
        for (const auto& s : sets) {
            for (std::size_t i = 0; i < s.indices.size(); ++i) out << (i ? "," : "") << s.indices[i];
            out << '\n';
        }
    }
    return kExitOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + o.config);
    Json config;
    try {
        config = Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    const SweepReport report = sweep(config, o.budget, o.strict);
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv);
        if (!csv) throw Error(ErrorKind::Parse, "cannot write " + o.csv);
        csv << distributions_csv(report);
    }
    if (o.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        for (const auto& c : report.checks)
            out << to_string(c.status) << '\t' << c.instance << '\t' << c.check << (c.detail.empty() ? "" : '\t' + c.detail) << '\n';
        out << report.checks.size() << " checks, " << report.failures() << " failed\n";
    }
    return report.failures() == 0 ? kExitOk : kExitVerification;
}

}  // namespace detail

/// Parses argv and runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    detail::Options o;
    CLI::App app{"Minimal linear codes: construction, verification and secret sharing", "mincodes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--budget", o.budget, "maximum number of codewords to enumerate")->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "build a generator matrix");
    construct->add_option("--family", o.family, "first|second|weights|extended|cf|cg")->required()
        ->check(CLI::IsMember({"first", "second", "weights", "extended", "cf", "cg"}));
    construct->add_option("--t", o.t);
    construct->add_option("--k", o.k);
    construct->add_option("--s", o.s);
    construct->add_option("--q", o.q)->required();
    construct->add_option("--r", o.r);
    construct->add_option("--n", o.n, "ambient dimension for cf");
    construct->add_option("--alphas", o.alphas, "comma-separated alpha_1..alpha_k for cf");
    construct->add_option("--out", o.out);

    auto* analyze = app.add_subcommand("analyze", "parameters, minimality, AB ratio, full-value property");
    analyze->add_option("--in", o.in)->required();

    auto* distribution = app.add_subcommand("distribution", "weight distribution as CSV (or JSON)");
    distribution->add_option("--in", o.in)->required();

    auto* lift_cmd = app.add_subcommand("lift", "inductive lift of a minimal full-value code");
    lift_cmd->add_option("--in", o.in)->required();
    lift_cmd->add_option("--s", o.s)->required();
    lift_cmd->add_option("--out", o.out);

    auto* tensor = app.add_subcommand("tensor", "Kronecker product of two codes");
    tensor->add_option("--in1", o.in1)->required();
    tensor->add_option("--in2", o.in2)->required();
    tensor->add_option("--out", o.out);

    auto* sss = app.add_subcommand("sss", "secret sharing on a code");
    sss->require_subcommand(1);
    auto add_scheme = [&](CLI::App* c) {
        c->add_option("--in", o.in)->required();
        c->add_option("--secret-column", o.secret_column, "1-based column holding the secret");
    };
    auto* deal_cmd = sss->add_subcommand("deal", "deal shares");
    add_scheme(deal_cmd);
    deal_cmd->add_option("--secret", o.secret)->required();
    deal_cmd->add_option("--seed", o.seed)->required();
    auto* reconstruct_cmd = sss->add_subcommand("reconstruct", "recover the secret from shares");
    add_scheme(reconstruct_cmd);
    reconstruct_cmd->add_option("--subset", o.subset)->required();
    reconstruct_cmd->add_option("--shares", o.shares)->required();
    auto* access = sss->add_subcommand("access", "minimal authorized sets");
    add_scheme(access);
    access->add_option("--method", o.method)->check(CLI::IsMember({"dual", "search"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "run the checks listed in a sweep config");
    sweep_cmd->add_option("--config", o.config)->required();
    sweep_cmd->add_option("--csv", o.csv, "write weight distributions here");
    sweep_cmd->add_flag("--strict", o.strict, "stop at the first failing instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return detail::cmd_construct(o, out);
        if (analyze->parsed()) return detail::cmd_analyze(o, out);
        if (distribution->parsed()) return detail::cmd_distribution(o, out);
        if (lift_cmd->parsed()) return detail::cmd_lift(o, out);
        if (tensor->parsed()) return detail::cmd_tensor(o, out);
        if (deal_cmd->parsed()) return detail::cmd_sss_deal(o, out);
        if (reconstruct_cmd->parsed()) return detail::cmd_sss_reconstruct(o, out);
        if (access->parsed()) return detail::cmd_sss_access(o, out);
        if (sweep_cmd->parsed()) return detail::cmd_sweep(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::PreconditionFailed ? kExitVerification : kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mincodes::cli
