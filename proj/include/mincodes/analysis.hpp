#pragma once

// Enumerative verdicts on codes: covering, minimal codewords and codes, the
// Ashikhmin-Barg ratio test, and the "every value occurs" property.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "code.hpp"

namespace mincodes {

/// Support of a word as a packed bitset; subset tests are word-wise.
class SupportSet {
public:
    SupportSet() = default;
    explicit SupportSet(const Vec& values) : bits_((values.size() + 63) / 64, 0) {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!values[i].is_zero()) bits_[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    bool subset_of(const SupportSet& other) const noexcept {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if ((bits_[i] & ~other.bits_[i]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> bits_;
};

/// Supp(c) is contained in Supp(c2).
inline bool covers(const Vec& c, const Vec& c2) {
    if (c.size() != c2.size()) throw Error(ErrorKind::DimensionMismatch, "covers() on words of different length");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero() && c2[i].is_zero()) return false;
    return true;
}
inline bool covers(const Codeword& c, const Codeword& c2) { return covers(c.values, c2.values); }

/// True when b = lambda * a for some lambda (a nonzero).
inline bool proportional(const Field& f, const Vec& a, const Vec& b) {
    std::optional<FieldElement> lambda;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            if (!b[i].is_zero()) return false;
            continue;
        }
        if (!lambda) lambda = f.div(b[i], a[i]);
        if (f.mul(*lambda, a[i]) != b[i]) return false;
    }
    return true;
}

/// All lambda * c for nonzero lambda in ascending encoding order.
inline std::vector<Codeword> scalar_multiples(const Field& f, const Codeword& c) {
    std::vector<Codeword> out;
    for (std::uint32_t l = 1; l < f.q(); ++l) {
        Vec u(c.coeffs.size()), v(c.values.size());
        std::transform(c.coeffs.begin(), c.coeffs.end(), u.begin(), [&](FieldElement e) { return f.mul({l}, e); });
        std::transform(c.values.begin(), c.values.end(), v.begin(), [&](FieldElement e) { return f.mul({l}, e); });
        out.push_back(Codeword::from(std::move(u), std::move(v)));
    }
    return out;
}

/// A nonzero codeword c is minimal when every nonzero codeword whose support lies inside Supp(c)
/// is a multiple of c.
inline bool is_minimal_codeword(const LinearCode& code, const Vec& values, std::uint64_t budget = kDefaultBudget) {
    if (!code.coefficients_of(values)) throw Error(ErrorKind::NotInCode, "word is not a codeword");
    if (hamming_weight(values) == 0) throw Error(ErrorKind::BadParams, "the zero word has no minimality status");
    bool minimal = true;
    for_each_projective(
        code,
        [&](const Vec&, const Vec& other) {
            if (covers(other, values) && !proportional(code.field(), other, values)) minimal = false;
            return minimal;
        },
        budget);
    return minimal;
}
inline bool is_minimal_codeword(const LinearCode& code, const Codeword& c, std::uint64_t budget = kDefaultBudget) {
    return is_minimal_codeword(code, c.values, budget);
}

struct MinimalityWitness {
    Codeword covered;   // c
    Codeword covering;  // c', not a multiple of c, Supp(c) within Supp(c')
};

struct MinimalityReport {
    bool is_minimal = true;
    std::optional<MinimalityWitness> witness;
    std::uint64_t checked_pairs = 0;
};

namespace detail {

struct ProjectiveTable {
    std::vector<Vec> coeffs;
    std::vector<SupportSet> supports;
    std::vector<std::size_t> weights;
};

inline ProjectiveTable projective_table(const LinearCode& code, std::uint64_t budget) {
    ProjectiveTable t;
    for_each_projective(
        code,
        [&](const Vec& u, const Vec& v) {
            t.coeffs.push_back(u);
            t.supports.emplace_back(v);
            t.weights.push_back(hamming_weight(v));
        },
        budget);
    return t;
}

// Least index b != a with Supp(a) within Supp(b), or size() if none.
inline std::size_t first_covering(const ProjectiveTable& t, std::size_t a) {
    const std::size_t count = t.supports.size();
    for (std::size_t b = 0; b < count; ++b) {
        if (b == a || t.weights[b] < t.weights[a]) continue;
        if (t.supports[a].subset_of(t.supports[b])) return b;
    }
    return count;
}

}  // namespace detail

/// Brute-force minimality over scalar-class representatives (the covering relation and
/// proportionality do not change under scaling). Work is split across threads by the covered
/// word; the reported witness is always the least (covered, covering) pair in enumeration order.
inline MinimalityReport is_minimal_code(const LinearCode& code, std::uint64_t budget = kDefaultBudget,
                                        unsigned threads = std::thread::hardware_concurrency()) {
    const auto table = detail::projective_table(code, budget);
    const std::size_t count = table.supports.size();

    std::atomic<std::size_t> best{count};
    std::atomic<std::size_t> next{0};
    std::vector<std::size_t> partner(count, count);
    auto work = [&] {
        for (std::size_t a = next.fetch_add(1); a < count; a = next.fetch_add(1)) {
            if (a >= best.load(std::memory_order_relaxed)) return;
            const std::size_t b = detail::first_covering(table, a);
            if (b == count) continue;
            partner[a] = b;
            std::size_t cur = best.load();
            while (a < cur && !best.compare_exchange_weak(cur, a)) {
            }
        }
    };
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, count / 256)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    }

    MinimalityReport report;
    const std::size_t a = best.load();
    if (a == count) {
        report.checked_pairs = count == 0 ? 0 : std::uint64_t{count} * (count - 1);
        return report;
    }
    const std::size_t b = partner[a];
    report.is_minimal = false;
    report.witness = MinimalityWitness{code.encode(table.coeffs[a]), code.encode(table.coeffs[b])};
    report.checked_pairs = std::uint64_t{a} * (count - 1) + (b < a ? b : b - 1) + 1;
    return report;
}

/// One minimal scalar class: the representative (first nonzero coefficient 1) and all its multiples.
struct MinimalClass {
    Codeword representative;
    std::vector<Codeword> members;
};

inline std::vector<MinimalClass> minimal_codewords(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    const auto table = detail::projective_table(code, budget);
    const std::size_t count = table.supports.size();
    std::vector<MinimalClass> out;
    for (std::size_t b = 0; b < count; ++b) {
        bool minimal = true;
        for (std::size_t a = 0; a < count && minimal; ++a) {
            if (a == b || table.weights[a] > table.weights[b]) continue;
            if (table.supports[a].subset_of(table.supports[b])) minimal = false;
        }
        if (!minimal) continue;
        Codeword rep = code.encode(table.coeffs[b]);
        auto members = scalar_multiples(code.field(), rep);
        out.push_back({std::move(rep), std::move(members)});
    }
    return out;
}

struct AbReport {
    std::size_t w_min = 0;
    std::size_t w_max = 0;
    std::uint64_t ratio_num = 0;  // w_min / w_max in lowest terms
    std::uint64_t ratio_den = 1;
    std::uint64_t threshold_num = 0;  // (q - 1) / q
    std::uint64_t threshold_den = 1;
    bool sufficient = false;
};

/// Exact comparison w_min / w_max > (q - 1) / q, by cross-multiplication.
inline AbReport ab_condition(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    const auto [lo, hi] = min_max_weight(code, budget);
    AbReport r;
    r.w_min = lo;
    r.w_max = hi;
    const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(lo, hi);
    r.ratio_num = lo / g;
    r.ratio_den = hi / g;
    r.threshold_num = code.q() - 1;
    r.threshold_den = code.q();
    r.sufficient = std::uint64_t{code.q()} * lo > std::uint64_t{code.q() - 1} * hi;
    return r;
}

struct FullValueReport {
    bool holds = true;
    std::optional<Codeword> witness;  // first nonzero codeword (in message order) missing some value
    Vec witness_values;               // distinct values the witness does take, ascending
};

/// Every nonzero codeword takes all q field values among its coordinates.
inline FullValueReport has_full_value_property(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    // scaling by lambda != 0 permutes the value set, so representatives decide
    FullValueReport report;
    const std::uint32_t q = code.q();
    std::vector<char> seen(q);
    for_each_projective(
        code,
        [&](const Vec& u, const Vec& v) {
            std::fill(seen.begin(), seen.end(), 0);
            std::uint32_t distinct = 0;
            for (auto e : v)
                if (!seen[e.enc]) {
                    seen[e.enc] = 1;
                    ++distinct;
                }
            if (distinct == q) return true;
            report.holds = false;
            report.witness = Codeword::from(u, v);
            for (std::uint32_t e = 0; e < q; ++e)
                if (seen[e]) report.witness_values.push_back({e});
            return false;
        },
        budget);
    return report;
}

}  // namespace mincodes
