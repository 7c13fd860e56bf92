#pragma once

// Massey's secret sharing on a linear code. Column 1 of the generator carries the secret,
// participant i (2 <= i <= n) holds coordinate i of a random codeword u * G with u * G_1 = secret.
// Participant indices are 1-based throughout, as in the usual presentation of the scheme.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "analysis.hpp"
#include "constructions.hpp"
#include "code.hpp"

namespace mincodes {

class SssScheme {
public:
    explicit SssScheme(LinearCode code) : code_(std::move(code)) {
        for (std::size_t c = 0; c < code_.n(); ++c) {
            const Vec col = code_.generator().column(c);
            if (hamming_weight(col) == 0)
                throw Error(ErrorKind::ZeroColumn, "generator column " + std::to_string(c + 1) + " is zero");
        }
        if (code_.n() < 2) throw Error(ErrorKind::BadParams, "a scheme needs at least one participant");
    }

    /// Scheme whose secret sits in `column` (1-based): that column is swapped with column 1.
    static SssScheme with_secret_column(const LinearCode& code, std::size_t column) {
        if (column < 1 || column > code.n()) throw Error(ErrorKind::BadParams, "secret column out of range");
        Matrix g = code.generator();
        for (std::size_t r = 0; r < g.rows(); ++r) std::swap(g.at(r, 0), g.at(r, column - 1));
        return SssScheme(LinearCode::from_generator(std::move(g)));
    }

    const LinearCode& code() const noexcept { return code_; }
    const Field& field() const noexcept { return code_.field(); }
    std::size_t n() const noexcept { return code_.n(); }
    /// Column i of the generator, 1-based.
    Vec column(std::size_t i) const { return code_.generator().column(i - 1); }

private:
    LinearCode code_;
};

struct ShareVector {
    FieldElement secret;
    Vec shares;  // v_2..v_n
    std::optional<Vec> dealer_coeffs;
    std::uint64_t seed = 0;
};

inline ShareVector share_from_coefficients(const SssScheme& scheme, Vec u) {
    const Vec v = row_times(u, scheme.code().generator());
    return {v[0], Vec(v.begin() + 1, v.end()), std::move(u), 0};
}

/// Uniform u on the fiber {u : u * G_1 = secret}, from a seeded mt19937_64 with rejection
/// sampling so the draw is identical on every platform.
inline ShareVector deal(const SssScheme& scheme, FieldElement secret, std::uint64_t seed, bool keep_coeffs = false) {
    const Field& f = scheme.field();
    if (!f.contains(secret)) throw Error(ErrorKind::BadParams, "secret outside field");
    const Vec g1 = scheme.column(1);
    const auto pivot = std::find_if(g1.begin(), g1.end(), [](FieldElement e) { return !e.is_zero(); });
    if (pivot == g1.end()) throw Error(ErrorKind::ZeroColumn, "secret column is zero");
    const std::size_t p = static_cast<std::size_t>(pivot - g1.begin());

    std::mt19937_64 rng(seed);
    const std::uint64_t q = f.q();
    const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / q) * q;
    auto draw = [&] {
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return FieldElement{static_cast<std::uint32_t>(x % q)};
    };
    Vec u(scheme.code().k());
    for (auto& e : u) e = draw();
    FieldElement partial = f.zero();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (i != p) partial = f.add(partial, f.mul(u[i], g1[i]));
    u[p] = f.div(f.sub(secret, partial), g1[p]);

    ShareVector out = share_from_coefficients(scheme, std::move(u));
    out.seed = seed;
    if (!keep_coeffs) out.dealer_coeffs.reset();
    return out;
}

namespace detail {

inline void validate_subset(const SssScheme& scheme, std::span<const std::size_t> subset) {
    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::BadParams, "duplicate participant");
    for (auto i : sorted)
        if (i < 2 || i > scheme.n()) throw Error(ErrorKind::BadParams, "participant " + std::to_string(i) + " out of range 2.." + std::to_string(scheme.n()));
}

}  // namespace detail

/// Coefficients x with G_1 = sum_j x_j G_{subset[j]}, when the subset is authorized.
inline std::optional<Vec> authorization_coefficients(const SssScheme& scheme, std::span<const std::size_t> subset) {
    detail::validate_subset(scheme, subset);
    std::vector<Vec> cols;
    for (auto i : subset) cols.push_back(scheme.column(i));
    const Vec g1 = scheme.column(1);
    return in_span(scheme.code().field_ref(), g1, cols);
}

inline bool is_authorized(const SssScheme& scheme, std::span<const std::size_t> subset) {
    return authorization_coefficients(scheme, subset).has_value();
}

/// Secret from the shares of `subset` (shares[j] belongs to participant subset[j]).
inline FieldElement reconstruct(const SssScheme& scheme, std::span<const std::size_t> subset,
                                std::span<const FieldElement> shares) {
    if (shares.size() != subset.size()) throw Error(ErrorKind::DimensionMismatch, "one share per participant expected");
    const auto x = authorization_coefficients(scheme, subset);
    if (!x) throw Error(ErrorKind::Unauthorized, "participants cannot determine the secret");
    const Field& f = scheme.field();
    // the shares must agree with some codeword restricted to the subset
    std::vector<Vec> restricted_rows(scheme.code().k(), Vec(subset.size()));
    for (std::size_t r = 0; r < scheme.code().k(); ++r)
        for (std::size_t j = 0; j < subset.size(); ++j) restricted_rows[r][j] = scheme.code().generator().at(r, subset[j] - 1);
    if (!in_span(scheme.code().field_ref(), shares, restricted_rows))
        throw Error(ErrorKind::InconsistentShares, "no codeword matches the given shares");
    FieldElement secret = f.zero();
    for (std::size_t j = 0; j < subset.size(); ++j) secret = f.add(secret, f.mul((*x)[j], shares[j]));
    return secret;
}

struct AccessSet {
    std::vector<std::size_t> indices;  // sorted, 1-based participants
    bool minimal = true;

    bool operator==(const AccessSet&) const = default;
};

enum class AccessMethod { Dual, Search };

namespace detail {

inline void sort_canonical(std::vector<AccessSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const AccessSet& a, const AccessSet& b) {
        if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    });
}

inline bool includes_sorted(const std::vector<std::size_t>& super, const std::vector<std::size_t>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace detail

/// Minimal authorized sets via minimal codewords of the dual code with nonzero first coordinate.
inline std::vector<AccessSet> minimal_authorized_sets_dual(const SssScheme& scheme, std::uint64_t budget = kDefaultBudget) {
    std::vector<AccessSet> out;
    if (scheme.code().n() == scheme.code().k()) return out;
    const LinearCode dual = dual_code(scheme.code());
    for (const auto& cls : minimal_codewords(dual, budget)) {
        const auto& rep = cls.representative;
        if (rep.values[0].is_zero()) continue;
        AccessSet set;
        for (auto i : rep.support)
            if (i != 0) set.indices.push_back(i + 1);
        out.push_back(std::move(set));
    }
    detail::sort_canonical(out);
    return out;
}

/// Minimal authorized sets by testing subsets of size 1..k in canonical order; a subset
/// containing an already-found set is authorized but never minimal, so it is skipped.
inline std::vector<AccessSet> minimal_authorized_sets_search(const SssScheme& scheme, std::uint64_t budget = kDefaultBudget) {
    const std::size_t participants = scheme.n() - 1;
    const std::size_t max_size = std::min(scheme.code().k(), participants);
    BigInt candidates = 0;
    for (std::size_t j = 1; j <= max_size; ++j) candidates += binom(static_cast<long long>(participants), static_cast<long long>(j));
    if (candidates > budget)
        throw Error(ErrorKind::BudgetExceeded, "subset search needs " + candidates.str() + " candidates");
    std::vector<AccessSet> out;
    for (std::size_t size = 1; size <= max_size; ++size) {
        for (auto subset : detail::subsets(participants, size)) {
            for (auto& i : subset) i += 2;
            const bool dominated = std::any_of(out.begin(), out.end(),
                                               [&](const AccessSet& a) { return detail::includes_sorted(subset, a.indices); });
            if (dominated) continue;
            if (is_authorized(scheme, subset)) out.push_back({subset, true});
        }
    }
    detail::sort_canonical(out);
    return out;
}

inline std::vector<AccessSet> minimal_authorized_sets(const SssScheme& scheme, AccessMethod method,
                                                      std::uint64_t budget = kDefaultBudget) {
    return method == AccessMethod::Dual ? minimal_authorized_sets_dual(scheme, budget)
                                        : minimal_authorized_sets_search(scheme, budget);
}

struct PerfectnessVerdict {
    bool authorized = false;
    /// authorized: every observation pins down one secret; unauthorized: every observation
    /// is consistent with every secret in equal counts.
    bool holds = false;
    std::uint64_t dealer_vectors = 0;
    std::size_t distinct_observations = 0;
};

/// Exhaustive check over all q^k dealer vectors.
inline PerfectnessVerdict perfectness_check(const SssScheme& scheme, std::span<const std::size_t> subset,
                                            std::uint64_t budget = kDefaultBudget) {
    PerfectnessVerdict verdict;
    verdict.authorized = is_authorized(scheme, subset);
    const std::uint32_t q = scheme.field().q();
    std::map<Vec, std::vector<std::uint64_t>> tally;
    for_each_codeword(
        scheme.code(),
        [&](const Vec&, const Vec& v) {
            Vec seen;
            seen.reserve(subset.size());
            for (auto i : subset) seen.push_back(v[i - 1]);
            auto& counts = tally[seen];
            if (counts.empty()) counts.assign(q, 0);
            ++counts[v[0].enc];
            ++verdict.dealer_vectors;
        },
        budget);
    verdict.distinct_observations = tally.size();
    verdict.holds = std::all_of(tally.begin(), tally.end(), [&](const auto& entry) {
        const auto& counts = entry.second;
        if (verdict.authorized)
            return std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }) == 1;
        return std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c > 0 && c == counts.front(); });
    });
    return verdict;
}

}  // namespace mincodes
