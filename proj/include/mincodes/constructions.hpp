#pragma once

// Generator matrices for the minimal-code families, the inductive lift, the tensor product,
// the function codes C_f / C_g, and closed-form predictions of their parameters.
//
// Column orders are fixed so that every matrix is reproducible:
//   first / second / weight_s: identity block, then supports in lexicographic order, then
//   coefficient tuples in lexicographic order of their encodings.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "code.hpp"
#include "linalg.hpp"

namespace mincodes {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::BadParams, what);
}

// All size-`size` subsets of {0..t-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t t, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    if (size > t) return out;
    std::vector<std::size_t> cur(size);
    for (std::size_t i = 0; i < size; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = size;
        while (i > 0 && cur[i - 1] == t - size + i - 1) --i;
        if (i == 0) return out;
        ++cur[i - 1];
        for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
}

// All tuples in (F_q^*)^len in lexicographic order of encodings.
inline std::vector<std::vector<std::uint32_t>> nonzero_tuples(std::uint32_t q, std::size_t len) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(len, 1);
    while (true) {
        out.push_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] == q - 1) {
            cur[i - 1] = 1;
            --i;
        }
        if (i == 0) return out;
        ++cur[i - 1];
    }
}

inline Matrix from_columns(FieldRef field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(std::move(field), rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    return m;
}

// Identity block followed by, for each support set, one column per tuple in `tuples`.
// When `lead_one` is set the first support position carries 1 and the tuple fills the rest.
inline Matrix identity_plus_supports(const FieldRef& field, std::size_t t, std::size_t support_size, bool lead_one) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < t; ++i) {
        Vec e(t, field->zero());
        e[i] = field->one();
        cols.push_back(std::move(e));
    }
    const auto tuples = nonzero_tuples(field->q(), lead_one ? support_size - 1 : support_size);
    for (const auto& support : subsets(t, support_size)) {
        for (const auto& tuple : tuples) {
            Vec col(t, field->zero());
            std::size_t next = 0;
            if (lead_one) col[support[next++]] = field->one();
            for (auto value : tuple) col[support[next++]] = FieldElement{value};
            cols.push_back(std::move(col));
        }
    }
    return from_columns(field, t, cols);
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > cap / base) return cap + 1;
        out *= base;
    }
    return out;
}

}  // namespace detail

/// (I_t | B) with B columns e_i + lambda e_j, i < j, lambda nonzero.
inline LinearCode first(std::size_t t, std::uint64_t q) {
    detail::require(t >= 2, "first construction needs t >= 2");
    auto field = build_field(q);
    return LinearCode::from_generator(detail::identity_plus_supports(field, t, 2, true));
}

/// (I_t | B~) with B~ columns e_{i1} + sum_{j>=2} lambda_j e_{ij} over k-subsets.
inline LinearCode second(std::size_t t, std::size_t k, std::uint64_t q) {
    detail::require(t >= 2 && k >= 2 && k + 1 <= t, "second construction needs 2 <= k <= t - 1");
    auto field = build_field(q);
    return LinearCode::from_generator(detail::identity_plus_supports(field, t, k, true));
}

/// (I_t | B-bar) with B-bar holding every weight-s vector of GF(q)^t.
inline LinearCode weight_s(std::size_t s, std::size_t t, std::uint64_t q) {
    detail::require(t >= 1 && s >= 1 && s <= t, "weight-s construction needs 1 <= s <= t");
    auto field = build_field(q);
    return LinearCode::from_generator(detail::identity_plus_supports(field, t, s, false));
}

/// first(t, q) with q - 2 extra columns (xi^i, 0, ..., 0)^T, i = 1..q-2. For q = 2 nothing is appended.
inline LinearCode extended(std::size_t t, std::uint64_t q) {
    const LinearCode base = first(t, q);
    const Field& f = base.field();
    const Vec powers = f.powers_of_xi();
    Matrix extra(base.field_ref(), t, powers.size());
    for (std::size_t i = 0; i < powers.size(); ++i) extra.at(0, i) = powers[i];
    return LinearCode::from_generator(base.generator().hconcat(extra));
}

/// Generator (G_0 | G_1 | ... | G_s) of length (s+1)n and dimension s+k. The top s rows of G_0
/// are zero; in G_i the i-th top row is all ones. G sits below in every block.
/// Refuses inputs that are not minimal or lack the full-value property.
inline LinearCode lift(const LinearCode& base, std::size_t s, std::uint64_t budget = kDefaultBudget) {
    detail::require(s >= 1, "lift depth s must be >= 1");
    if (!is_minimal_code(base, budget).is_minimal)
        throw Error(ErrorKind::PreconditionFailed, "lift: base code is not minimal");
    if (!has_full_value_property(base, budget).holds)
        throw Error(ErrorKind::PreconditionFailed, "lift: base code lacks the full-value property");
    const std::size_t n = base.n();
    const std::size_t k = base.k();
    const Matrix& g = base.generator();
    Matrix out(base.field_ref(), s + k, (s + 1) * n);
    for (std::size_t block = 0; block <= s; ++block) {
        const std::size_t offset = block * n;
        if (block > 0)
            for (std::size_t c = 0; c < n; ++c) out.at(block - 1, offset + c) = FieldElement{1};
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) out.at(s + r, offset + c) = g.at(r, c);
    }
    return LinearCode::from_generator(std::move(out));
}

inline LinearCode tensor_product(const LinearCode& a, const LinearCode& b) {
    return LinearCode::from_generator(kronecker(a.generator(), b.generator()));
}

struct FunctionCodeSpec {
    std::size_t n = 0;
    std::size_t k = 0;  // weight threshold of f, or block count of g
    std::size_t r = 0;  // block length of g
    std::vector<std::uint32_t> alphas;  // alpha_1..alpha_k for f
};

/// Nonzero points of GF(q)^n in ascending base-q order, x_1 most significant.
inline std::vector<Vec> nonzero_points(const Field& f, std::size_t n) {
    std::vector<Vec> out;
    Vec x(n, f.zero());
    while (true) {
        std::size_t i = n;
        while (i > 0 && x[i - 1].enc == f.q() - 1) {
            x[i - 1] = f.zero();
            --i;
        }
        if (i == 0) return out;
        x[i - 1] = FieldElement{x[i - 1].enc + 1};
        out.push_back(x);
    }
}

/// f(x) = alpha_wt(x) for 1 <= wt(x) <= k, else 0.
inline FieldElement evaluate_f(const FunctionCodeSpec& spec, const Vec& x) {
    const std::size_t w = hamming_weight(x);
    if (w == 0 || w > spec.k) return FieldElement{0};
    return FieldElement{spec.alphas.at(w - 1)};
}

/// g_{r,k}(x) = sum over blocks j of x_{jr+1} * ... * x_{jr+r}.
inline FieldElement evaluate_g(const Field& f, std::size_t r, std::size_t k, const Vec& x) {
    FieldElement total = f.zero();
    for (std::size_t j = 0; j < k; ++j) {
        FieldElement prod = f.one();
        for (std::size_t l = 0; l < r; ++l) prod = f.mul(prod, x.at(j * r + l));
        total = f.add(total, prod);
    }
    return total;
}

namespace detail {

// Rows (h(x))_x and (x_i)_x over nonzero x. The h-row is dropped if it lies in the span of
// the coordinate rows, so the result always has full rank.
inline LinearCode function_code(const FieldRef& field, std::size_t n, const std::function<FieldElement(const Vec&)>& h,
                                std::uint64_t budget) {
    const std::uint64_t length = checked_pow(field->q(), n, budget + 1);
    if (length - 1 > budget)
        throw Error(ErrorKind::BudgetExceeded, "q^n - 1 = " + std::to_string(length - 1) + " columns exceeds budget");
    const auto points = nonzero_points(*field, n);
    Vec h_row(points.size());
    std::vector<Vec> coord_rows(n, Vec(points.size()));
    for (std::size_t c = 0; c < points.size(); ++c) {
        h_row[c] = h(points[c]);
        for (std::size_t i = 0; i < n; ++i) coord_rows[i][c] = points[c][i];
    }
    const bool keep_h = !in_span(field, h_row, coord_rows).has_value();
    std::vector<Vec> rows;
    if (keep_h) rows.push_back(h_row);
    rows.insert(rows.end(), coord_rows.begin(), coord_rows.end());
    Matrix g(field, rows.size(), points.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < points.size(); ++c) g.at(r, c) = rows[r][c];
    return LinearCode::from_generator(std::move(g));
}

}  // namespace detail

inline LinearCode cf_code(const FunctionCodeSpec& spec, std::uint64_t q, std::uint64_t budget = kDefaultBudget) {
    detail::require(q % 2 == 1, "C_f needs odd q");
    detail::require(spec.n > 3, "C_f needs n > 3");
    detail::require(spec.k >= 2 && spec.k + 2 <= spec.n, "C_f needs 2 <= k <= n - 2");
    detail::require(spec.alphas.size() == spec.k, "C_f needs exactly k alphas");
    auto field = build_field(q);
    for (auto a : spec.alphas) detail::require(a != 0 && a < q, "alphas must be nonzero field elements");
    return detail::function_code(field, spec.n, [&](const Vec& x) { return evaluate_f(spec, x); }, budget);
}

inline LinearCode cg_code(std::size_t r, std::size_t k, std::uint64_t q, std::uint64_t budget = kDefaultBudget) {
    detail::require(r >= 2 && k >= 2, "C_g needs r, k >= 2");
    auto field = build_field(q);
    const Field& f = *field;
    return detail::function_code(field, r * k, [&](const Vec& x) { return evaluate_g(f, r, k, x); }, budget);
}

// ---------------------------------------------------------------------------
// closed-form predictions

/// Binomial coefficient, zero outside 0 <= k <= n.
inline BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

inline BigInt big_pow(long long base, long long exp) {
    BigInt out = 1;
    for (long long i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Weight of a first-construction codeword built from s nonzero message coordinates.
inline BigInt predicted_ws(long long s, long long t, long long q) {
    if (s == 0) return 0;
    return BigInt(s) + binom(s, 2) * (q - 2) + BigInt(s) * (t - s) * (q - 1);
}

struct StepCheck {
    long long s = 0;
    BigInt difference;  // w_s - w_{s-1}
    BigInt predicted;   // -t + (t - s) q + 2
    bool holds = false;
};

struct FirstParams {
    BigInt n, k, d, w_min, w_max;
    bool within_hypothesis = false;  // q >= t - 2
    std::vector<StepCheck> steps;
};

inline FirstParams predicted_first_params(long long t, long long q) {
    FirstParams p;
    p.n = binom(t, 2) * (q - 1) + t;
    p.k = t;
    p.d = BigInt(t - 1) * (q - 1) + 1;
    p.w_min = BigInt(1) + BigInt(t - 1) * (q - 1);
    p.w_max = BigInt(t - 1) + binom(t - 1, 2) * (q - 2) + BigInt(t - 1) * (q - 1);
    p.within_hypothesis = q >= t - 2;
    for (long long s = 1; s <= t; ++s) {
        StepCheck step;
        step.s = s;
        step.difference = predicted_ws(s, t, q) - predicted_ws(s - 1, t, q);
        step.predicted = BigInt(-t) + BigInt(t - s) * q + 2;
        step.holds = step.difference == step.predicted;
        p.steps.push_back(std::move(step));
    }
    return p;
}

/// Number of zero coordinates, in the weight-s block, contributed by supports meeting a
/// weight-r message in at least two places.
inline BigInt psi(long long r, long long t, long long s, long long q) {
    BigInt total = 0;
    for (long long z = 2; z <= r; ++z) {
        BigInt alternating = 0;
        for (long long i = 1; i <= z - 1; ++i) {
            const BigInt term = big_pow(q - 1, i);
            if ((z - 1 + i) % 2 == 0) alternating += term;
            else alternating -= term;
        }
        if (s - z < 0) continue;
        total += binom(r, z) * binom(t - r, s - z) * big_pow(q - 1, s - z) * alternating;
    }
    return total;
}

struct WeightPrediction {
    long long r = 0;
    BigInt weight;
};

/// Predicted weight of a weight_s(s, t, q) codeword whose message has weight r, for r = 0..t.
inline std::vector<WeightPrediction> predicted_dprime_weights(long long t, long long s, long long q) {
    const BigInt big_n = BigInt(t) + binom(t, s) * big_pow(q - 1, s);
    std::vector<WeightPrediction> out;
    for (long long r = 0; r <= t; ++r) {
        const BigInt w = big_n - t + r - psi(r, t, s, q) - binom(t - r, s) * big_pow(q - 1, s);
        out.push_back({r, w});
    }
    return out;
}

struct SecondBound {
    BigInt n, dim, d_upper;
};

inline SecondBound predicted_second_bound(long long t, long long k, long long q) {
    detail::require(k >= 2 && k <= t - 1, "second construction needs 2 <= k <= t - 1");
    return {binom(t, k) * big_pow(q - 1, k - 1) + t, BigInt(t), BigInt(1) + binom(t - 1, k - 1) * big_pow(q - 1, k - 1)};
}

}  // namespace mincodes
