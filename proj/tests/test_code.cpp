#include <gtest/gtest.h>

#include <random>

#include "mincodes/code.hpp"
#include "oracles.hpp"

using namespace mincodes;

namespace {

LinearCode code_of(std::uint64_t q, std::vector<std::vector<std::uint32_t>> rows) {
    return LinearCode::from_generator(Matrix::from_rows(build_field(q), rows));
}

oracle::Word raw(const Vec& v) {
    oracle::Word w;
    for (auto e : v) w.push_back(e.enc);
    return w;
}

}  // namespace

TEST(LinearCode, RejectsRankDeficientAndEmpty) {
    try {
        code_of(2, {{1, 1}, {1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
    }
    EXPECT_THROW(LinearCode::from_generator(Matrix(build_field(2), 0, 3)), Error);
}

TEST(LinearCode, ZeroColumnIsRecorded) {
    EXPECT_TRUE(code_of(2, {{1, 0}}).has_zero_column());
    EXPECT_FALSE(code_of(2, {{1, 1}}).has_zero_column());
}

TEST(Enumeration, OrderAndExample) {
    const auto c = code_of(2, {{1, 0, 1}, {0, 1, 1}});
    const auto words = enumerate_codewords(c);
    ASSERT_EQ(words.size(), 4u);
    EXPECT_EQ(raw(words[0].values), (oracle::Word{0, 0, 0}));
    EXPECT_EQ(raw(words[1].values), (oracle::Word{0, 1, 1}));
    EXPECT_EQ(raw(words[2].values), (oracle::Word{1, 0, 1}));
    EXPECT_EQ(raw(words[3].values), (oracle::Word{1, 1, 0}));
    EXPECT_EQ(words[3].support, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(words[3].weight, 2u);
}

TEST(Enumeration, BudgetExceeded) {
    const auto c = code_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    try {
        enumerate_codewords(c, 26);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
    EXPECT_EQ(enumerate_codewords(c, 27).size(), 27u);
}

TEST(WeightDistribution, Examples) {
    const auto wd = weight_distribution(code_of(2, {{1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(wd.counts, (std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 3}}));
    const auto rep = weight_distribution(code_of(3, {{1, 1, 1}}));
    EXPECT_EQ(rep.counts, (std::map<std::size_t, std::uint64_t>{{0, 1}, {3, 2}}));
    EXPECT_EQ(minimum_distance(code_of(3, {{1, 1, 1}})), 3u);
}

TEST(DualCode, Examples) {
    const auto dual = dual_code(code_of(2, {{1, 1, 1}}));
    EXPECT_EQ(dual.k(), 2u);
    for (const auto& w : enumerate_codewords(dual)) EXPECT_EQ(w.weight % 2, 0u);
    try {
        dual_code(code_of(5, {{1, 0}, {0, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TrivialDual);
    }
}

// The incremental walker against independent enumeration with schoolbook arithmetic.
TEST(CodeProperties, EnumerationMatchesOracleAndIsLinear) {
    std::mt19937 rng(7);
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = build_field(q);
        for (int trial = 0; trial < 12; ++trial) {
            const std::size_t k = 1 + rng() % 3, n = k + rng() % 5;
            Matrix g(f, k, n);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) g.at(r, c) = FieldElement{static_cast<std::uint32_t>(rng() % q)};
            if (rank(g) != k) continue;
            const auto code = LinearCode::from_generator(g);
            const auto words = enumerate_codewords(code);
            const auto expected = oracle::enumerate(g);
            ASSERT_EQ(words.size(), expected.words.size());
            for (std::size_t i = 0; i < words.size(); ++i) {
                EXPECT_EQ(raw(words[i].coeffs), expected.messages[i]);
                EXPECT_EQ(raw(words[i].values), expected.words[i]);
            }
            const auto wd = weight_distribution(code);
            EXPECT_EQ(wd.counts, oracle::distribution(g));
            EXPECT_EQ(wd.total(), oracle::ipow(q, k));
            for (const auto& [w, count] : wd.counts)
                if (w != 0) {
                    EXPECT_EQ(count % (q - 1), 0u);
                }

            // linearity: encode(a u + b v) = a encode(u) + b encode(v)
            const auto& u = words[rng() % words.size()];
            const auto& v = words[rng() % words.size()];
            const FieldElement a{static_cast<std::uint32_t>(rng() % q)}, b{static_cast<std::uint32_t>(rng() % q)};
            Vec mix(k), sum(n);
            for (std::size_t i = 0; i < k; ++i) mix[i] = f->add(f->mul(a, u.coeffs[i]), f->mul(b, v.coeffs[i]));
            for (std::size_t i = 0; i < n; ++i) sum[i] = f->add(f->mul(a, u.values[i]), f->mul(b, v.values[i]));
            EXPECT_EQ(code.encode(mix).values, sum);
            EXPECT_EQ(code.coefficients_of(sum), mix);

            if (n > k) {
                const auto dual = dual_code(code);
                EXPECT_EQ(dual.k(), n - k);
                for (const auto& w : enumerate_codewords(dual)) {
                    for (std::size_t r = 0; r < k; ++r) {
                        FieldElement dot = f->zero();
                        for (std::size_t c = 0; c < n; ++c) dot = f->add(dot, f->mul(w.values[c], g.at(r, c)));
                        EXPECT_TRUE(dot.is_zero());
                    }
                }
            }
        }
    }
}

TEST(CodeProperties, ProjectiveRepresentativesHaveLeadingOne) {
    const auto code = code_of(5, {{1, 2, 3, 4}, {0, 1, 1, 2}});
    std::size_t count = 0;
    for_each_projective(code, [&](const Vec& u, const Vec&) {
        ++count;
        const auto lead = std::find_if(u.begin(), u.end(), [](FieldElement e) { return !e.is_zero(); });
        ASSERT_NE(lead, u.end());
        EXPECT_EQ(*lead, FieldElement{1});
    });
    EXPECT_EQ(count, (25u - 1) / 4);
}
