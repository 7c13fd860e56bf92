#pragma once

// Arithmetic in GF(p^m) over integer-encoded elements.
//
// An element is stored as enc = sum c_i p^i, which stands for the residue class of
// sum c_i x^i modulo a fixed monic irreducible polynomial of degree m. For m = 1 this
// is just the integer mod p. The modulus and the primitive element are chosen as the
// smallest encodings that qualify, so every field of a given order is built the same way.

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "error.hpp"

namespace mincodes {

struct FieldElement {
    std::uint32_t enc = 0;

    constexpr bool is_zero() const noexcept { return enc == 0; }
    constexpr auto operator<=>(const FieldElement&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << e.enc; }

using Vec = std::vector<FieldElement>;

class Field;
using FieldRef = std::shared_ptr<const Field>;

FieldRef build_field(std::uint64_t q);

class Field {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Coefficients c_0..c_m of the modulus, c_m = 1. For m = 1 this is {0, 1} (the polynomial x).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FieldElement xi() const noexcept { return xi_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }

    FieldElement element(std::uint64_t enc) const {
        if (enc >= q_) throw Error(ErrorKind::BadParams, "encoding " + std::to_string(enc) + " outside GF(" + std::to_string(q_) + ")");
        return {static_cast<std::uint32_t>(enc)};
    }
    bool contains(FieldElement a) const noexcept { return a.enc < q_; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        if (!add_.empty()) return {add_[a.enc * q_ + b.enc]};
        return {add_direct(a.enc, b.enc)};
    }
    FieldElement neg(FieldElement a) const noexcept {
        if (!neg_.empty()) return {neg_[a.enc]};
        return {neg_direct(a.enc)};
    }
    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (!mul_.empty()) return {mul_[a.enc * q_ + b.enc]};
        return {mul_direct(a.enc, b.enc)};
    }
    FieldElement inv(FieldElement a) const {
        if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        if (!inv_.empty()) return {inv_[a.enc]};
        // a^(q-2) = a^-1 in the multiplicative group of order q - 1
        return pow(a, q_ - 2);
    }
    FieldElement div(FieldElement a, FieldElement b) const {
        if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
        return mul(a, inv(b));
    }
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept {
        FieldElement result = one();
        FieldElement base = a;
        while (e > 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    /// All q elements in ascending encoding order.
    Vec elements() const {
        Vec out(q_);
        for (std::uint32_t e = 0; e < q_; ++e) out[e] = {e};
        return out;
    }

    /// [xi, xi^2, ..., xi^(q-2)]; empty for q = 2.
    Vec powers_of_xi() const {
        Vec out;
        if (q_ < 3) return out;
        out.reserve(q_ - 2);
        FieldElement x = xi_;
        for (std::uint32_t i = 1; i + 1 < q_; ++i) {
            out.push_back(x);
            x = mul(x, xi_);
        }
        return out;
    }

    std::uint64_t multiplicative_order(FieldElement a) const {
        if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
        std::uint64_t order = 1;
        for (FieldElement x = a; x != one(); x = mul(x, a)) ++order;
        return order;
    }

    friend FieldRef build_field(std::uint64_t q);

private:
    static constexpr std::uint32_t kTableLimit = 256;

    Field(std::uint32_t p, std::uint32_t m, std::uint32_t q) : p_(p), m_(m), q_(q) {}

    std::vector<std::uint32_t> digits(std::uint32_t enc) const {
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            d[i] = enc % p_;
            enc /= p_;
        }
        return d;
    }
    std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
        std::uint32_t enc = 0;
        for (std::uint32_t i = m_; i-- > 0;) enc = enc * p_ + d[i];
        return enc;
    }

    std::uint32_t add_direct(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return (a + b) % p_;
        auto da = digits(a);
        auto db = digits(b);
        for (std::uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
        return encode(da);
    }
    std::uint32_t neg_direct(std::uint32_t a) const {
        if (m_ == 1) return (p_ - a) % p_;
        auto da = digits(a);
        for (auto& c : da) c = (p_ - c) % p_;
        return encode(da);
    }
    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
        return encode(polymulmod(digits(a), digits(b), modulus_, p_));
    }

    // Product of two polynomials of degree < m reduced by a monic modulus of degree m.
    static std::vector<std::uint32_t> polymulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                                 const std::vector<std::uint32_t>& mod, std::uint32_t p) {
        const std::size_t m = mod.size() - 1;
        std::vector<std::uint64_t> prod(2 * m, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
        for (std::size_t deg = prod.size(); deg-- > m;) {
            const std::uint64_t lead = prod[deg];
            if (lead == 0) continue;
            for (std::size_t i = 0; i <= m; ++i) {
                const std::size_t pos = deg - m + i;
                prod[pos] = (prod[pos] + (p - lead) * mod[i]) % p;
            }
        }
        return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m)};
    }

    // Trial division by every monic polynomial of degree 1..deg/2.
    static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
        const std::size_t deg = f.size() - 1;
        for (std::size_t d = 1; d <= deg / 2; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> g(d + 1, 0);
                std::uint64_t c = code;
                for (std::size_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(c % p);
                    c /= p;
                }
                g[d] = 1;
                if (divides(g, f, p)) return false;
            }
        }
        return true;
    }

    static bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f, std::uint32_t p) {
        const std::size_t dg = g.size() - 1;
        for (std::size_t deg = f.size(); deg-- > dg;) {
            const std::uint64_t lead = f[deg];
            if (lead == 0) continue;
            for (std::size_t i = 0; i <= dg; ++i) {
                const std::size_t pos = deg - dg + i;
                f[pos] = static_cast<std::uint32_t>((f[pos] + (p - lead) * g[i]) % p);
            }
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (f[i] != 0) return false;
        return true;
    }

    void build_tables() {
        if (q_ > kTableLimit) return;
        add_.resize(std::size_t{q_} * q_);
        mul_.resize(std::size_t{q_} * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_[a] = neg_direct(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[a * q_ + b] = add_direct(a, b);
                mul_[a * q_ + b] = mul_direct(a, b);
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
            }
        }
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    FieldElement xi_{};
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Builds GF(q). Throws NotPrimePower unless q = p^m for a prime p.
inline FieldRef build_field(std::uint64_t q) {
    if (q < 2 || q > (std::uint64_t{1} << 31))
        throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a supported prime power");
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint64_t rest = q;
    std::uint32_t m = 0;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " has more than one prime factor");

    std::shared_ptr<Field> f(new Field(static_cast<std::uint32_t>(p), m, static_cast<std::uint32_t>(q)));
    if (m == 1) {
        f->modulus_ = {0, 1};
    } else {
        // smallest encoding sum c_i p^i with c_m = 1
        for (std::uint64_t low = 0; low < q; ++low) {
            std::vector<std::uint32_t> cand(m + 1, 0);
            std::uint64_t c = low;
            for (std::uint32_t i = 0; i < m; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            cand[m] = 1;
            if (Field::is_irreducible(cand, f->p_)) {
                f->modulus_ = std::move(cand);
                break;
            }
        }
    }
    f->build_tables();
    for (std::uint32_t g = 1; g < f->q_; ++g) {
        if (f->multiplicative_order({g}) == q - 1) {
            f->xi_ = {g};
            break;
        }
    }
    return f;
}

}  // namespace mincodes
