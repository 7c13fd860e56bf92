// Acceptance gate. One line per criterion: PASS/FAIL, id, title, elapsed time, detail.
// Usage: mincodes_acceptance [--criterion N]   (no argument runs every criterion)
// Tolerances are exact (integer equality); wall-clock limits are pinned per criterion below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mincodes/mincodes.hpp"

using namespace mincodes;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string str(const BigInt& v) { return v.str(); }
std::string label(const std::string& family, std::initializer_list<long long> params) {
    std::string s = family + "(";
    bool first_param = true;
    for (auto p : params) {
        s += (first_param ? "" : ",") + std::to_string(p);
        first_param = false;
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// instance tables

const std::vector<std::pair<long long, long long>> kFirst{{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}, {4, 3}, {4, 4}, {5, 4}, {5, 5}};
const std::set<std::pair<long long, long long>> kAbBelow{{4, 3}, {4, 4}, {5, 4}, {5, 5}};
const std::set<std::pair<long long, long long>> kAbCounter{{2, 2}, {2, 3}, {3, 3}};
const std::vector<std::tuple<long long, long long, long long>> kSecond{{4, 3, 2}, {4, 3, 3}, {5, 3, 2}, {5, 4, 2}};
const std::vector<std::tuple<long long, long long, long long>> kWeightS{{3, 2, 2}, {4, 2, 2}, {4, 2, 3}, {4, 3, 2}, {5, 2, 2}};  // (t, s, q)
const std::vector<std::pair<long long, long long>> kExtended{{3, 3}, {3, 4}, {4, 3}};
constexpr std::uint64_t kSssSeeds = 10;
constexpr std::uint64_t kRandomSssSeed = 5;

LinearCode single_column_base() { return LinearCode::from_generator(Matrix::from_rows(build_field(2), {{1, 0}})); }
std::vector<std::pair<std::string, LinearCode>> lift_bases() {
    return {{"[2,1]_2", single_column_base()}, {"extended(3,3)", extended(3, 3)}, {"extended(3,4)", extended(3, 4)}};
}
LinearCode cf_instance() { return cf_code({4, 2, 0, {1, 2}}, 3); }
LinearCode random_sss_code() { return random_code(3, 3, 5, kRandomSssSeed); }

// Codeword weights grouped by the Hamming weight of the message.
std::map<std::size_t, std::set<std::size_t>> weights_by_message_weight(const LinearCode& code) {
    std::map<std::size_t, std::set<std::size_t>> out;
    for_each_codeword(code, [&](const Vec& u, const Vec& v) { out[hamming_weight(u)].insert(hamming_weight(v)); });
    return out;
}

std::optional<std::size_t> single(const std::set<std::size_t>& s) {
    if (s.size() != 1) return std::nullopt;
    return *s.begin();
}

// ---------------------------------------------------------------------------
// criteria

Outcome first_parameters() {
    Outcome o;
    for (auto [t, q] : kFirst) {
        const auto code = first(t, q);
        const std::string name = label("first", {t, q});
        const std::size_t d = minimum_distance(code);
        const BigInt n_pred = binom(t, 2) * (q - 1) + t, d_pred = BigInt(t - 1) * (q - 1) + 1;
        o.require(n_pred == code.n() && BigInt(t) == code.k() && d_pred == d,
                  name + " [" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + std::to_string(d) + "] vs [" + str(n_pred) +
                      "," + std::to_string(t) + "," + str(d_pred) + "]");
        const auto strata = weights_by_message_weight(code);
        std::vector<long long> w(static_cast<std::size_t>(t) + 1, 0);
        for (long long s = 1; s <= t; ++s) {
            const auto observed = single(strata.at(static_cast<std::size_t>(s)));
            const BigInt predicted = BigInt(s) + binom(s, 2) * (q - 2) + BigInt(s) * (t - s) * (q - 1);
            o.require(observed && predicted == *observed, name + " s=" + std::to_string(s) + " weight != " + str(predicted));
            w[static_cast<std::size_t>(s)] = observed ? static_cast<long long>(*observed) : -1;
        }
        for (long long s = 1; s <= t; ++s)
            o.require(w[s] - w[s - 1] == -t + (t - s) * q + 2, name + " step identity fails at s=" + std::to_string(s));
    }
    return o;
}

Outcome first_minimality() {
    Outcome o;
    for (auto [t, q] : kFirst) {
        const auto code = first(t, q);
        const std::string name = label("first", {t, q});
        o.require(is_minimal_code(code).is_minimal, name + " not minimal");
        const auto ab = ab_condition(code);
        const BigInt num = BigInt(1) + BigInt(t - 1) * (q - 1);
        const BigInt den = BigInt(t - 1) + binom(t - 1, 2) * (q - 2) + BigInt(t - 1) * (q - 1);
        o.require(num * ab.w_max == den * ab.w_min,
                  name + " ratio " + std::to_string(ab.w_min) + "/" + std::to_string(ab.w_max) + " vs " + str(num) + "/" + str(den));
        const bool below = BigInt(q) * ab.w_min < BigInt(q - 1) * ab.w_max;
        const std::string ratio = std::to_string(ab.ratio_num) + "/" + std::to_string(ab.ratio_den);
        if (kAbBelow.count({t, q})) o.require(below, name + " ratio " + ratio + " not below (q-1)/q");
        if (kAbCounter.count({t, q})) {
            o.require(!below, name + " expected counter-instance but ratio " + ratio + " is below (q-1)/q");
            o.note(name + " flagged: " + ratio + " >= " + std::to_string(q - 1) + "/" + std::to_string(q));
        }
    }
    return o;
}

// A_w for each predicted w_s equals the sum of C(t,s')(q-1)^s' over every s' with w_s' = w_s,
// and no other nonzero weight occurs. Without collisions this is A_{w_s} = C(t,s)(q-1)^s.
Outcome per_weight_counts() {
    Outcome o;
    bool stated_form_holds = true;
    for (auto [t, q] : kFirst) {
        const auto code = first(t, q);
        const std::string name = label("first", {t, q});
        const auto wd = weight_distribution(code);
        std::map<std::size_t, BigInt> expected;
        for (long long s = 1; s <= t; ++s) {
            const auto w = predicted_ws(s, t, q).convert_to<std::size_t>();
            expected[w] += binom(t, s) * big_pow(q - 1, s);
            stated_form_holds = stated_form_holds && big_pow(q - 1, s) == wd.at(w);
        }
        for (const auto& [w, count] : wd.counts) {
            if (w == 0) continue;
            const auto it = expected.find(w);
            o.require(it != expected.end() && it->second == count,
                      name + " A_" + std::to_string(w) + "=" + std::to_string(count) + " expected " + (it == expected.end() ? "0" : str(it->second)));
        }
        for (const auto& [w, count] : expected) o.require(count == wd.at(w), name + " missing weight " + std::to_string(w));
        if (expected.size() < static_cast<std::size_t>(t)) o.note(name + " weights coincide across s");
    }
    o.note(std::string("count (q-1)^s without the binomial factor ") + (stated_form_holds ? "holds" : "does not hold"));
    return o;
}

Outcome second_construction() {
    Outcome o;
    for (auto [t, k, q] : kSecond) {
        const auto code = second(t, k, q);
        const std::string name = label("second", {t, k, q});
        const auto bound = predicted_second_bound(t, k, q);
        o.require(bound.n == code.n(), name + " length " + std::to_string(code.n()) + " vs " + str(bound.n));
        o.require(bound.dim == code.k(), name + " dimension");
        const std::size_t d = minimum_distance(code);
        o.require(bound.d_upper >= d, name + " d=" + std::to_string(d) + " exceeds " + str(bound.d_upper));
        Vec e1(code.k(), FieldElement{0});
        e1[0] = FieldElement{1};
        const std::size_t row1 = code.encode(e1).weight;
        o.require(bound.d_upper == row1, name + " row 1 weight " + std::to_string(row1) + " vs " + str(bound.d_upper));
        const auto rep = is_minimal_code(code);
        if (!rep.is_minimal) {
            std::ostringstream w;
            w << name << " not minimal: " << to_json(rep.witness->covered.values).dump() << " inside "
              << to_json(rep.witness->covering.values).dump();
            o.require(false, w.str());
        }
    }
    return o;
}

Outcome dprime_distribution() {
    Outcome o;
    for (auto [t, s, q] : kWeightS) {
        const auto code = weight_s(s, t, q);
        const std::string name = label("weight_s", {s, t, q});
        const auto predicted = predicted_dprime_weights(t, s, q);
        const auto strata = weights_by_message_weight(code);
        std::ostringstream seen;
        for (const auto& p : predicted) {
            const auto observed = single(strata.at(static_cast<std::size_t>(p.r)));
            o.require(observed && p.weight == *observed, name + " r=" + std::to_string(p.r) + " predicted " + str(p.weight));
            seen << (p.r ? "," : "") << p.weight;
        }
        const auto rep = is_minimal_code(code);
        o.require(rep.is_minimal, name + " not minimal");
        if (s * s <= 3 * t) {
            BigInt best = predicted.at(1).weight;
            for (std::size_t r = 1; r < predicted.size(); ++r) best = std::min(best, predicted[r].weight);
            std::string where;
            for (std::size_t r = 1; r < predicted.size(); ++r)
                if (predicted[r].weight == best) where += (where.empty() ? "" : ",") + std::to_string(r);
            o.require(predicted.at(static_cast<std::size_t>(s)).weight == best,
                      name + " weights r=0..t [" + seen.str() + "], minimum " + str(best) + " at r in {" + where + "}, not at r=s");
        }
    }
    return o;
}

Outcome corollary_code() {
    Outcome o;
    for (auto [t, q] : kExtended) {
        const auto code = extended(t, q);
        const std::string name = label("extended", {t, q});
        o.require(is_minimal_code(code).is_minimal, name + " not minimal");
        o.require(has_full_value_property(code).holds, name + " lacks the full-value property");
        o.require(binom(t, 2) * (q - 1) + t + q - 2 == code.n(), name + " length " + std::to_string(code.n()));
        std::set<long long> offsets;
        for_each_codeword(code, [&](const Vec& u, const Vec& v) {
            const long long s = static_cast<long long>(hamming_weight(u));
            if (s == 0) return;
            const long long base = predicted_ws(s, t, q).convert_to<long long>();
            const long long w = static_cast<long long>(hamming_weight(v));
            if (u[0].is_zero()) o.require(w == base, name + " word without row 1 has weight " + std::to_string(w) + " != w_s");
            else offsets.insert(w - base);
        });
        std::string seen;
        for (auto d : offsets) seen += (seen.empty() ? "" : ",") + std::to_string(d);
        o.require(offsets == std::set<long long>{q - 1},
                  name + " row-1 words weigh w_s+{" + seen + "}, formula says w_s+" + std::to_string(q - 1));
    }
    return o;
}

Outcome inductive_lift() {
    Outcome o;
    for (const auto& [name, base] : lift_bases()) {
        for (std::size_t s : {1, 2}) {
            const std::string tag = "lift(" + name + "," + std::to_string(s) + ")";
            try {
                const auto l = lift(base, s);
                o.require(l.n() == (s + 1) * base.n() && l.k() == s + base.k(), tag + " parameters");
                o.require(is_minimal_code(l).is_minimal, tag + " not minimal");
                o.require(has_full_value_property(l).holds, tag + " lacks the full-value property");
            } catch (const Error& e) {
                o.require(false, tag + " " + e.what());
            }
        }
        try {
            const auto twice = lift(lift(base, 1), 1);
            o.require(is_minimal_code(twice).is_minimal && has_full_value_property(twice).holds, "lift(lift(" + name + ",1),1) fails");
        } catch (const Error& e) {
            o.require(false, "lift(lift(" + name + ",1),1) " + e.what());
        }
    }
    return o;
}

Outcome function_codes() {
    Outcome o;
    const auto cg = cg_code(2, 2, 2);
    o.require(cg.n() == 15 && cg.k() == 5, "cg(2,2,2) parameters [" + std::to_string(cg.n()) + "," + std::to_string(cg.k()) + "]");
    o.require(has_full_value_property(cg).holds, "cg(2,2,2) lacks the full-value property");
    o.require(is_minimal_code(cg).is_minimal, "cg(2,2,2) not minimal");
    const auto cf = cf_instance();
    o.require(cf.n() == 80 && cf.k() <= 5, "cf(4,2,3) parameters [" + std::to_string(cf.n()) + "," + std::to_string(cf.k()) + "]");
    o.require(is_minimal_code(cf).is_minimal, "cf(4,2,3) not minimal");
    o.note(std::string("cf(4,2,3;1,2) full-value ") + (has_full_value_property(cf).holds ? "holds" : "fails") + " (k < q)");
    // variant meeting k >= q with alphas covering the nonzero elements
    const auto variant = cf_code({5, 3, 0, {1, 2, 1}}, 3);
    o.note(std::string("cf(5,3,3;1,2,1) full-value ") + (has_full_value_property(variant).holds ? "holds" : "fails") + " (k >= q)");
    return o;
}

Outcome tensor_products() {
    Outcome o;
    for (auto [q, n, k, d] : std::vector<std::tuple<long long, std::size_t, std::size_t, std::size_t>>{{2, 9, 4, 4}, {3, 16, 4, 9}}) {
        const auto base = first(2, q);
        const auto t = tensor_product(base, base);
        const std::size_t dt = minimum_distance(t);
        const std::string name = "first(2," + std::to_string(q) + ")^2";
        o.require(t.n() == n && t.k() == k && dt == d,
                  name + " [" + std::to_string(t.n()) + "," + std::to_string(t.k()) + "," + std::to_string(dt) + "]");
        o.require(dt == minimum_distance(base) * minimum_distance(base), name + " d != d1*d2");
        o.require(is_minimal_code(t).is_minimal, name + " not minimal");
    }
    return o;
}

Outcome secret_sharing() {
    Outcome o;
    const std::vector<std::pair<std::string, LinearCode>> codes{{"first(2,2)", first(2, 2)}, {"first(3,3)", first(3, 3)}, {"random[5,3]_3", random_sss_code()}};
    for (const auto& [name, code] : codes) {
        const SssScheme scheme(code);
        const auto search = minimal_authorized_sets_search(scheme);
        const auto dual = minimal_authorized_sets_dual(scheme);
        o.require(search == dual, name + " access structures differ");
        std::vector<std::size_t> everyone;
        for (std::size_t i = 2; i <= scheme.n(); ++i) everyone.push_back(i);
        for (std::uint32_t secret = 0; secret < scheme.field().q(); ++secret)
            for (std::uint64_t seed = 0; seed < kSssSeeds; ++seed) {
                const auto share = deal(scheme, FieldElement{secret}, seed);
                bool ok = reconstruct(scheme, everyone, share.shares) == FieldElement{secret};
                for (const auto& a : search) {
                    Vec held;
                    for (auto i : a.indices) held.push_back(share.shares[i - 2]);
                    ok = ok && reconstruct(scheme, a.indices, held) == FieldElement{secret};
                }
                o.require(ok, name + " round trip fails for secret " + std::to_string(secret) + " seed " + std::to_string(seed));
            }
        for (std::size_t size = 1; size <= everyone.size(); ++size)
            for (auto sub : detail::subsets(everyone.size(), size)) {
                for (auto& i : sub) i += 2;
                o.require(perfectness_check(scheme, sub).holds, name + " not perfect on a subset of size " + std::to_string(size));
            }
        o.note(name + " " + std::to_string(search.size()) + " minimal sets");
    }
    return o;
}

Outcome ab_consistency() {
    Outcome o;
    std::vector<std::pair<std::string, LinearCode>> codes;
    for (auto [t, q] : kFirst) codes.emplace_back(label("first", {t, q}), first(t, q));
    for (auto [t, k, q] : kSecond) codes.emplace_back(label("second", {t, k, q}), second(t, k, q));
    for (auto [t, s, q] : kWeightS) codes.emplace_back(label("weight_s", {s, t, q}), weight_s(s, t, q));
    for (auto [t, q] : kExtended) codes.emplace_back(label("extended", {t, q}), extended(t, q));
    for (const auto& [name, base] : lift_bases()) {
        codes.emplace_back(name, base);
        for (std::size_t s : {1, 2}) codes.emplace_back("lift(" + name + "," + std::to_string(s) + ")", lift(base, s));
        try {
            codes.emplace_back("lift(lift(" + name + ",1),1)", lift(lift(base, 1), 1));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PreconditionFailed) throw;
            o.note("lift(lift(" + name + ",1),1) not constructible");
        }
    }
    codes.emplace_back("cg(2,2,2)", cg_code(2, 2, 2));
    codes.emplace_back("cf(4,2,3)", cf_instance());
    codes.emplace_back("cf(5,3,3)", cf_code({5, 3, 0, {1, 2, 1}}, 3));
    for (long long q : {2, 3}) codes.emplace_back("first(2," + std::to_string(q) + ")^2", tensor_product(first(2, q), first(2, q)));
    codes.emplace_back("random[5,3]_3", random_sss_code());
    std::size_t sufficient = 0;
    for (const auto& [name, code] : codes) {
        if (!ab_condition(code).sufficient) continue;
        ++sufficient;
        o.require(is_minimal_code(code).is_minimal, name + " meets the AB condition but is not minimal");
    }
    o.note(std::to_string(codes.size()) + " codes, " + std::to_string(sufficient) + " meet the AB condition");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "first construction parameters and weights", 10, first_parameters},
        {2, "first construction minimality and AB ratio", 60, first_minimality},
        {3, "first construction per-weight counts", 0, per_weight_counts},
        {4, "second construction length, distance bound, minimality", 60, second_construction},
        {5, "weight-s code distribution, minimality, minimum at r=s", 120, dprime_distribution},
        {6, "extended code: minimality, full values, two-case weights", 30, corollary_code},
        {7, "inductive lift", 120, inductive_lift},
        {8, "function codes", 120, function_codes},
        {9, "tensor products", 30, tensor_products},
        {10, "secret sharing", 60, secret_sharing},
        {11, "AB condition implies minimality", 0, ab_consistency},
    };
    return all;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && elapsed > c.limit_seconds)
        o.require(false, "runtime " + std::to_string(elapsed) + " s over limit " + std::to_string(c.limit_seconds) + " s");
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  (" << std::fixed
         << std::setprecision(2) << elapsed << " s)";
    const auto& details = o.ok ? o.notes : o.problems;
    for (std::size_t i = 0; i < details.size(); ++i) line << (i ? "; " : "  :: ") << details[i];
    std::cout << line.str() << std::endl;
    return o.ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
            return 1;
        }
    }
    bool all_ok = true;
    bool matched = false;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        matched = true;
        all_ok = run_one(c) && all_ok;
    }
    if (!matched) {
        std::cerr << "no criterion " << only << '\n';
        return 1;
    }
    return all_ok ? 0 : 1;
}
