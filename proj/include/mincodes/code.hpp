#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace mincodes {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Codeword {
    Vec coeffs;
    Vec values;
    std::vector<std::size_t> support;  // 0-based coordinate indices
    std::size_t weight = 0;

    static Codeword from(Vec coeffs, Vec values) {
        Codeword c{std::move(coeffs), std::move(values), {}, 0};
        for (std::size_t i = 0; i < c.values.size(); ++i)
            if (!c.values[i].is_zero()) c.support.push_back(i);
        c.weight = c.support.size();
        return c;
    }

    bool is_zero() const noexcept { return weight == 0; }
};

class LinearCode {
public:
    /// Validates full row rank. A zero column is allowed but recorded.
    static LinearCode from_generator(Matrix gen) {
        if (gen.rows() == 0 || gen.cols() == 0) throw Error(ErrorKind::BadParams, "empty generator matrix");
        const std::size_t r = rank(gen);
        if (r != gen.rows())
            throw Error(ErrorKind::RankDeficient, "generator has " + std::to_string(gen.rows()) + " rows but rank " + std::to_string(r));
        bool zero_col = false;
        for (std::size_t c = 0; c < gen.cols() && !zero_col; ++c) {
            bool all_zero = true;
            for (std::size_t row = 0; row < gen.rows(); ++row) all_zero = all_zero && gen.at(row, c).is_zero();
            zero_col = all_zero;
        }
        return LinearCode(std::move(gen), zero_col);
    }

    const Matrix& generator() const noexcept { return gen_; }
    const Field& field() const noexcept { return gen_.field(); }
    const FieldRef& field_ref() const noexcept { return gen_.field_ref(); }
    std::uint32_t q() const noexcept { return gen_.field().q(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    bool has_zero_column() const noexcept { return zero_column_; }

    Codeword encode(Vec coeffs) const {
        Vec values = row_times(coeffs, gen_);
        return Codeword::from(std::move(coeffs), std::move(values));
    }

    /// Message vector u with u * gen = values, if values is a codeword.
    std::optional<Vec> coefficients_of(std::span<const FieldElement> values) const {
        if (values.size() != n()) throw Error(ErrorKind::DimensionMismatch, "word length differs from code length");
        std::vector<Vec> rows;
        rows.reserve(k());
        for (std::size_t r = 0; r < k(); ++r) rows.emplace_back(gen_.row(r).begin(), gen_.row(r).end());
        return in_span(field_ref(), values, rows);
    }

private:
    LinearCode(Matrix gen, bool zero_col) : gen_(std::move(gen)), zero_column_(zero_col) {}

    Matrix gen_;
    bool zero_column_;
};

/// q^k, saturating at uint64 max.
inline std::uint64_t codeword_count(const LinearCode& code) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / code.q()) return std::numeric_limits<std::uint64_t>::max();
        total *= code.q();
    }
    return total;
}

inline void check_budget(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t count = codeword_count(code);
    if (count > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "q^k = " + std::to_string(count) + " codewords exceeds budget " + std::to_string(budget));
}

namespace detail {

// Keeps values = coeffs * gen up to date while single coefficients change.
class CodewordWalker {
public:
    explicit CodewordWalker(const LinearCode& code)
        : field_(code.field()), n_(code.n()), coeffs_(code.k(), FieldElement{0}), values_(code.n(), FieldElement{0}) {
        const std::uint32_t q = field_.q();
        scaled_.resize(code.k());
        for (std::size_t r = 0; r < code.k(); ++r) {
            scaled_[r].resize(std::size_t{q} * n_);
            auto row = code.generator().row(r);
            for (std::uint32_t s = 0; s < q; ++s)
                for (std::size_t c = 0; c < n_; ++c) scaled_[r][s * n_ + c] = field_.mul(FieldElement{s}, row[c]);
        }
    }

    void set(std::size_t i, FieldElement v) {
        const FieldElement old = coeffs_[i];
        if (old == v) return;
        const FieldElement* before = scaled_[i].data() + std::size_t{old.enc} * n_;
        const FieldElement* after = scaled_[i].data() + std::size_t{v.enc} * n_;
        for (std::size_t c = 0; c < n_; ++c) values_[c] = field_.add(field_.sub(values_[c], before[c]), after[c]);
        coeffs_[i] = v;
    }

    const Vec& coeffs() const noexcept { return coeffs_; }
    const Vec& values() const noexcept { return values_; }

    // Base-q odometer over positions [from, k) with the last position least significant.
    // Calls visit() for the current state and after each step; stops early if visit returns false.
    template <class F>
    bool walk_suffix(std::size_t from, F&& visit) {
        const std::size_t k = coeffs_.size();
        const std::uint32_t q = field_.q();
        for (std::size_t i = from; i < k; ++i) set(i, FieldElement{0});
        while (true) {
            if (!visit()) return false;
            bool wrapped = true;
            for (std::size_t pos = k; pos > from;) {
                --pos;
                const std::uint32_t next = coeffs_[pos].enc + 1;
                if (next < q) {
                    set(pos, FieldElement{next});
                    wrapped = false;
                    break;
                }
                set(pos, FieldElement{0});
            }
            if (wrapped) return true;
        }
    }

private:
    const Field& field_;
    std::size_t n_;
    Vec coeffs_;
    Vec values_;
    std::vector<Vec> scaled_;
};

template <class F>
bool invoke_visitor(F& visit, const Vec& coeffs, const Vec& values) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, const Vec&, const Vec&>, bool>) {
        return visit(coeffs, values);
    } else {
        visit(coeffs, values);
        return true;
    }
}

}  // namespace detail

/// Visits all q^k codewords in base-q order of the message (u_1 most significant).
/// The visitor receives (coeffs, values); returning false stops the walk.
template <class F>
void for_each_codeword(const LinearCode& code, F&& visit, std::uint64_t budget = kDefaultBudget) {
    check_budget(code, budget);
    detail::CodewordWalker walker(code);
    walker.walk_suffix(0, [&] { return detail::invoke_visitor(visit, walker.coeffs(), walker.values()); });
}

/// Visits one codeword per nonzero scalar class: those whose first nonzero coefficient is 1,
/// in the same increasing message order as for_each_codeword.
template <class F>
void for_each_projective(const LinearCode& code, F&& visit, std::uint64_t budget = kDefaultBudget) {
    check_budget(code, budget);
    detail::CodewordWalker walker(code);
    for (std::size_t lead = code.k(); lead-- > 0;) {
        for (std::size_t i = 0; i < lead; ++i) walker.set(i, FieldElement{0});
        walker.set(lead, FieldElement{1});
        const bool go_on =
            walker.walk_suffix(lead + 1, [&] { return detail::invoke_visitor(visit, walker.coeffs(), walker.values()); });
        if (!go_on) return;
    }
}

inline std::vector<Codeword> enumerate_codewords(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    std::vector<Codeword> out;
    check_budget(code, budget);
    out.reserve(codeword_count(code));
    for_each_codeword(code, [&](const Vec& u, const Vec& v) { out.push_back(Codeword::from(u, v)); }, budget);
    return out;
}

struct WeightDistribution {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::map<std::size_t, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (const auto& [w, c] : counts) s += c;
        return s;
    }
    std::uint64_t at(std::size_t w) const {
        auto it = counts.find(w);
        return it == counts.end() ? 0 : it->second;
    }
    bool operator==(const WeightDistribution&) const = default;
};

inline std::size_t hamming_weight(const Vec& v) {
    std::size_t w = 0;
    for (auto e : v) w += e.is_zero() ? 0 : 1;
    return w;
}

inline WeightDistribution weight_distribution(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    WeightDistribution wd{code.q(), code.n(), code.k(), {}};
    std::vector<std::uint64_t> tally(code.n() + 1, 0);
    for_each_codeword(code, [&](const Vec&, const Vec& v) { ++tally[hamming_weight(v)]; }, budget);
    for (std::size_t w = 0; w <= code.n(); ++w)
        if (tally[w] != 0) wd.counts[w] = tally[w];
    return wd;
}

/// Smallest and largest weight over nonzero codewords.
inline std::pair<std::size_t, std::size_t> min_max_weight(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    // every weight is shared by a whole scalar class, so representatives suffice
    std::size_t lo = code.n() + 1;
    std::size_t hi = 0;
    for_each_projective(
        code,
        [&](const Vec&, const Vec& v) {
            const std::size_t w = hamming_weight(v);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        },
        budget);
    return {lo, hi};
}

inline std::size_t minimum_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    return min_max_weight(code, budget).first;
}

inline LinearCode dual_code(const LinearCode& code) {
    if (code.n() == code.k()) throw Error(ErrorKind::TrivialDual, "n = k, the dual code is {0}");
    return LinearCode::from_generator(nullspace(code.generator()));
}

}  // namespace mincodes
