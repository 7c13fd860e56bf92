#pragma once

// Batch verification of code instances described in JSON. Each instance yields a list of
// checks with status pass / fail / paper_discrepancy / info. Instance descriptions:
//
//   {"family": "first",    "t": T, "q": Q}
//   {"family": "second",   "t": T, "k": K, "q": Q}
//   {"family": "weights",  "t": T, "s": S, "q": Q}
//   {"family": "extended", "t": T, "q": Q}
//   {"family": "lift",     "base": <instance>, "s": S}
//   {"family": "tensor",   "left": <instance>, "right": <instance>}
//   {"family": "cf",       "n": N, "k": K, "q": Q, "alphas": [..]}
//   {"family": "cg",       "r": R, "k": K, "q": Q}
//   {"family": "matrix",   "q": Q, "rows": [[..], ..]}
//   {"family": "random",   "q": Q, "k": K, "n": N, "seed": S}   full rank, no zero column
//   {"family": "sss",      "code": <instance>, "seeds": N}

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "constructions.hpp"
#include "io.hpp"
#include "sss.hpp"

namespace mincodes {

enum class CheckStatus { Pass, Fail, PaperDiscrepancy, Info };

constexpr std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::PaperDiscrepancy: return "paper_discrepancy";
        case CheckStatus::Info: return "info";
    }
    return "?";
}

struct CheckResult {
    std::string instance;
    std::string check;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct SweepReport {
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, WeightDistribution>> distributions;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == CheckStatus::Fail ? 1 : 0;
        return n;
    }
};

/// Random k x n generator over GF(q) of full rank with no zero column, from a seeded mt19937_64.
inline LinearCode random_code(std::uint64_t q, std::size_t k, std::size_t n, std::uint64_t seed) {
    if (k == 0 || n < k) throw Error(ErrorKind::BadParams, "random code needs 1 <= k <= n");
    auto field = build_field(q);
    std::mt19937_64 rng(seed);
    const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / q) * q;
    auto draw = [&] {
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return FieldElement{static_cast<std::uint32_t>(x % q)};
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix g(field, k, n);
        for (std::size_t c = 0; c < n; ++c) {
            Vec col;
            do {
                col.assign(k, FieldElement{0});
                for (auto& e : col) e = draw();
            } while (hamming_weight(col) == 0);
            for (std::size_t r = 0; r < k; ++r) g.at(r, c) = col[r];
        }
        if (rank(g) == k) return LinearCode::from_generator(std::move(g));
    }
    throw Error(ErrorKind::BadParams, "could not draw a full-rank generator");
}

inline std::string describe(const Json& inst) {
    const std::string family = inst.at("family").get<std::string>();
    std::ostringstream s;
    s << family;
    if (family == "lift") return family + "(" + describe(inst.at("base")) + ",s=" + std::to_string(inst.at("s").get<int>()) + ")";
    if (family == "tensor") return describe(inst.at("left")) + "x" + describe(inst.at("right"));
    if (family == "sss") return "sss(" + describe(inst.at("code")) + ")";
    for (const char* key : {"n", "t", "k", "s", "r", "q", "seed"})
        if (inst.contains(key)) s << ',' << key << '=' << inst.at(key).get<long long>();
    return s.str();
}

inline LinearCode build_instance(const Json& inst, std::uint64_t budget = kDefaultBudget) {
    const std::string family = inst.at("family").get<std::string>();
    auto get = [&](const char* key) { return inst.at(key).get<std::size_t>(); };
    if (family == "first") return first(get("t"), get("q"));
    if (family == "second") return second(get("t"), get("k"), get("q"));
    if (family == "weights") return weight_s(get("s"), get("t"), get("q"));
    if (family == "extended") return extended(get("t"), get("q"));
    if (family == "lift") return lift(build_instance(inst.at("base"), budget), get("s"), budget);
    if (family == "tensor") return tensor_product(build_instance(inst.at("left"), budget), build_instance(inst.at("right"), budget));
    if (family == "cf") {
        FunctionCodeSpec spec{get("n"), get("k"), 0, inst.at("alphas").get<std::vector<std::uint32_t>>()};
        return cf_code(spec, get("q"), budget);
    }
    if (family == "cg") return cg_code(get("r"), get("k"), get("q"), budget);
    if (family == "matrix")
        return LinearCode::from_generator(Matrix::from_rows(build_field(get("q")), inst.at("rows").get<std::vector<std::vector<std::uint32_t>>>()));
    if (family == "random") return random_code(get("q"), get("k"), get("n"), inst.at("seed").get<std::uint64_t>());
    throw Error(ErrorKind::BadParams, "unknown family '" + family + "'");
}

namespace detail {

class CheckSink {
public:
    CheckSink(SweepReport& report, std::string instance) : report_(report), instance_(std::move(instance)) {}

    void add(std::string check, CheckStatus status, std::string detail = {}) {
        report_.checks.push_back({instance_, std::move(check), status, std::move(detail)});
    }
    void expect(std::string check, bool ok, std::string detail = {}) {
        add(std::move(check), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
    }

private:
    SweepReport& report_;
    std::string instance_;
};

inline std::string str(const BigInt& v) { return v.str(); }

// Per message weight: the set of codeword weights observed and the number of codewords.
struct Stratum {
    std::set<std::size_t> weights;
    std::uint64_t count = 0;
};

inline std::map<std::size_t, Stratum> stratify(const LinearCode& code, std::uint64_t budget) {
    std::map<std::size_t, Stratum> out;
    for_each_codeword(
        code,
        [&](const Vec& u, const Vec& v) {
            auto& s = out[hamming_weight(u)];
            s.weights.insert(hamming_weight(v));
            ++s.count;
        },
        budget);
    return out;
}

inline void check_first(CheckSink& sink, const LinearCode& code, long long t, long long q, std::uint64_t budget) {
    const auto pred = predicted_first_params(t, q);
    const auto [lo, hi] = min_max_weight(code, budget);
    if (!pred.within_hypothesis) sink.add("hypothesis", CheckStatus::Info, "q < t - 2: predictions unverified");
    sink.expect("params", pred.n == code.n() && pred.k == code.k() && pred.d == lo,
                "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + std::to_string(lo) + "] predicted [" +
                    str(pred.n) + "," + str(pred.k) + "," + str(pred.d) + "]");
    sink.expect("extrema", pred.w_min == lo && pred.w_max == hi,
                "w_min=" + std::to_string(lo) + " w_max=" + std::to_string(hi));
    const auto strata = stratify(code, budget);
    bool weights_ok = true, counts_ok = true, paper_count_ok = true;
    for (long long s = 1; s <= t; ++s) {
        const auto& st = strata.at(static_cast<std::size_t>(s));
        weights_ok = weights_ok && st.weights.size() == 1 && predicted_ws(s, t, q) == *st.weights.begin();
        counts_ok = counts_ok && binom(t, s) * big_pow(q - 1, s) == st.count;
        paper_count_ok = paper_count_ok && big_pow(q - 1, s) == st.count;
    }
    sink.expect("stratified_weights", weights_ok, "w_s = s + C(s,2)(q-2) + s(t-s)(q-1)");
    sink.expect("stratified_counts", counts_ok, "C(t,s)(q-1)^s codewords per message weight s");
    if (!paper_count_ok) sink.add("stated_count", CheckStatus::PaperDiscrepancy, "count (q-1)^s does not match enumeration");
    bool steps_ok = true;
    for (const auto& step : pred.steps) steps_ok = steps_ok && step.holds;
    sink.expect("step_identity", steps_ok);
    const auto ab = ab_condition(code, budget);
    const bool below = std::uint64_t(q) * ab.w_min < std::uint64_t(q - 1) * ab.w_max;
    const std::string ratio = std::to_string(ab.ratio_num) + "/" + std::to_string(ab.ratio_den);
    if (below) sink.add("ab_below_threshold", CheckStatus::Pass, ratio);
    else sink.add("ab_below_threshold", CheckStatus::PaperDiscrepancy, ratio + " is not below (q-1)/q");
}

inline void check_second(CheckSink& sink, const LinearCode& code, long long t, long long k, long long q, std::uint64_t budget) {
    const auto bound = predicted_second_bound(t, k, q);
    if (q < t - 2) sink.add("hypothesis", CheckStatus::Info, "outside q >= t - 2");
    sink.expect("length", bound.n == code.n(), std::to_string(code.n()));
    sink.expect("dimension", bound.dim == code.k());
    const std::size_t d = minimum_distance(code, budget);
    sink.expect("d_bound", bound.d_upper >= d, "d=" + std::to_string(d) + " bound=" + str(bound.d_upper));
    Vec e1(code.k(), FieldElement{0});
    e1[0] = FieldElement{1};
    const std::size_t row1 = code.encode(e1).weight;
    sink.expect("row1_weight", bound.d_upper == row1, std::to_string(row1));
}

inline void check_weights(CheckSink& sink, const LinearCode& code, long long t, long long s, long long q, std::uint64_t budget) {
    const auto pred = predicted_dprime_weights(t, s, q);
    const auto strata = stratify(code, budget);
    bool all_ok = true, stated_ok = true;
    std::ostringstream detail;
    for (const auto& p : pred) {
        const auto& st = strata.at(static_cast<std::size_t>(p.r));
        const bool ok = st.weights.size() == 1 && p.weight == *st.weights.begin();
        all_ok = all_ok && ok;
        if (p.r <= s) stated_ok = stated_ok && ok;
        detail << "r=" << p.r << ":" << p.weight << (ok ? " " : "! ");
    }
    sink.expect("dprime_weights", all_ok, detail.str());
    sink.add("stated_range", CheckStatus::Info,
             std::string("formula matches for r=0..s: ") + (stated_ok ? "yes" : "no") + ", r=0..t: " + (all_ok ? "yes" : "no"));
    if (s * s <= 3 * t) {
        BigInt best = -1;
        for (const auto& p : pred)
            if (p.r >= 1 && (best < 0 || p.weight < best)) best = p.weight;
        const bool at_s = pred.at(static_cast<std::size_t>(s)).weight == best;
        sink.expect("min_at_r_equals_s", at_s, "minimum " + str(best) + ", weight at r=s " + str(pred.at(static_cast<std::size_t>(s)).weight));
    }
}

inline void check_extended(CheckSink& sink, const LinearCode& code, long long t, long long q, std::uint64_t budget) {
    sink.expect("length", binom(t, 2) * (q - 1) + t + q - 2 == code.n(), std::to_string(code.n()));
    bool stated = true;
    bool observed = true;
    for_each_codeword(
        code,
        [&](const Vec& u, const Vec& v) {
            const long long s = static_cast<long long>(hamming_weight(u));
            if (s == 0) return;
            BigInt base = predicted_ws(s, t, q);
            const std::size_t w = hamming_weight(v);
            if (u[0].is_zero()) {
                stated = stated && base == w;
                observed = observed && base == w;
            } else {
                stated = stated && base + (q - 1) == w;
                observed = observed && base + (q - 2) == w;
            }
        },
        budget);
    sink.expect("two_case_weights", stated, "row-1 combinations weigh w_s + (q-1)");
    sink.add("two_case_weights_observed", observed ? CheckStatus::Info : CheckStatus::Fail,
             observed ? "row-1 combinations weigh w_s + (q-2)" : "neither offset explains the weights");
}

inline void check_sss(CheckSink& sink, const LinearCode& code, std::uint64_t seeds, std::uint64_t budget) {
    const SssScheme scheme(code);
    const Field& f = scheme.field();
    std::vector<std::size_t> everyone;
    for (std::size_t i = 2; i <= scheme.n(); ++i) everyone.push_back(i);
    bool roundtrip = true;
    const auto sets = minimal_authorized_sets_search(scheme, budget);
    for (std::uint32_t secret = 0; secret < f.q(); ++secret)
        for (std::uint64_t seed = 0; seed < seeds; ++seed) {
            const auto share = deal(scheme, FieldElement{secret}, seed);
            for (const auto& a : sets) {
                Vec sub;
                for (auto i : a.indices) sub.push_back(share.shares[i - 2]);
                roundtrip = roundtrip && reconstruct(scheme, a.indices, sub) == FieldElement{secret};
            }
        }
    sink.expect("roundtrip", roundtrip, std::to_string(sets.size()) + " minimal sets");
    try {
        const auto dual = minimal_authorized_sets_dual(scheme, budget);
        sink.expect("access_agreement", dual == sets);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        sink.add("access_agreement", CheckStatus::Info, "dual path over budget");
    }
    if (scheme.n() - 1 <= 16) {
        bool perfect = true;
        for (std::size_t size = 0; size <= everyone.size(); ++size)
            for (auto sub : detail::subsets(everyone.size(), size)) {
                for (auto& i : sub) i += 2;
                perfect = perfect && perfectness_check(scheme, sub, budget).holds;
            }
        sink.expect("perfectness", perfect);
    }
}

}  // namespace detail

/// Runs every check on one instance, appending to `report`. Errors become failed checks.
inline void sweep_instance(const Json& inst, SweepReport& report, std::uint64_t budget = kDefaultBudget) {
    const std::string label = describe(inst);
    detail::CheckSink sink(report, label);
    try {
        const std::string family = inst.at("family").get<std::string>();
        if (family == "sss") {
            detail::check_sss(sink, build_instance(inst.at("code"), budget), inst.value("seeds", std::uint64_t{10}), budget);
            return;
        }
        const LinearCode code = build_instance(inst, budget);
        auto get = [&](const char* key) { return inst.at(key).get<long long>(); };
        report.distributions.emplace_back(label, weight_distribution(code, budget));

        const auto minimal = is_minimal_code(code, budget);
        const bool expect_minimal = family != "matrix" && family != "random";
        if (expect_minimal) sink.expect("minimal", minimal.is_minimal);
        else sink.add("minimal", CheckStatus::Info, minimal.is_minimal ? "true" : "false");
        const auto ab = ab_condition(code, budget);
        sink.expect("ab_implies_minimal", !ab.sufficient || minimal.is_minimal,
                    std::to_string(ab.ratio_num) + "/" + std::to_string(ab.ratio_den) + (ab.sufficient ? " sufficient" : ""));
        const auto full = has_full_value_property(code, budget);

        if (family == "first") detail::check_first(sink, code, get("t"), get("q"), budget);
        else if (family == "second") detail::check_second(sink, code, get("t"), get("k"), get("q"), budget);
        else if (family == "weights") detail::check_weights(sink, code, get("t"), get("s"), get("q"), budget);
        else if (family == "extended") {
            detail::check_extended(sink, code, get("t"), get("q"), budget);
            sink.expect("full_value", full.holds);
        } else if (family == "lift") {
            const LinearCode base = build_instance(inst.at("base"), budget);
            const std::size_t s = inst.at("s").get<std::size_t>();
            sink.expect("params", code.n() == (s + 1) * base.n() && code.k() == s + base.k(),
                        "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "]");
            sink.expect("full_value", full.holds);
        } else if (family == "tensor") {
            const LinearCode left = build_instance(inst.at("left"), budget);
            const LinearCode right = build_instance(inst.at("right"), budget);
            const std::size_t d = minimum_distance(code, budget);
            sink.expect("params", code.n() == left.n() * right.n() && code.k() == left.k() * right.k());
            sink.expect("distance_product", d == minimum_distance(left, budget) * minimum_distance(right, budget),
                        "d=" + std::to_string(d));
        } else if (family == "cg") {
            sink.expect("full_value", full.holds);
        } else if (family == "cf") {
            const long long q = get("q");
            const auto alphas = inst.at("alphas").get<std::vector<std::uint32_t>>();
            std::set<std::uint32_t> distinct(alphas.begin(), alphas.end());
            const bool condition = get("k") >= q && distinct.size() == static_cast<std::size_t>(q - 1);
            sink.add("full_value", CheckStatus::Info,
                     std::string(full.holds ? "holds" : "fails") + (condition ? " (k >= q, alphas cover F_q^*)" : " (k >= q or alpha coverage not met)"));
            sink.add("alpha_condition", CheckStatus::PaperDiscrepancy, "{alpha_i} = F_q cannot hold with every alpha_i nonzero");
        } else {
            sink.add("full_value", CheckStatus::Info, full.holds ? "true" : "false");
        }
    } catch (const Error& e) {
        sink.add("error", CheckStatus::Fail, e.what());
    } catch (const Json::exception& e) {
        sink.add("error", CheckStatus::Fail, std::string("bad instance: ") + e.what());
    }
}

inline SweepReport sweep(const Json& config, std::uint64_t budget = kDefaultBudget, bool strict = false) {
    SweepReport report;
    if (!config.contains("instances")) return report;
    for (const auto& inst : config.at("instances")) {
        sweep_instance(inst, report, budget);
        if (strict && report.failures() > 0) break;
    }
    return report;
}

inline Json to_json(const SweepReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"instance", c.instance}, {"check", c.check}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    return Json{{"checks", checks}, {"failures", r.failures()}};
}

inline std::string distributions_csv(const SweepReport& r) {
    std::ostringstream s;
    s << "instance,weight,count\n";
    for (const auto& [label, wd] : r.distributions)
        for (const auto& [w, c] : wd.counts) s << '"' << label << "\"," << w << ',' << c << '\n';
    return s.str();
}

}  // namespace mincodes
