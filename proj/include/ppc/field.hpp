#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ppc/errors.hpp"

namespace ppc {

/// Field element, encoded as the integer sum coeffs[i]*p^i of its
/// polynomial-basis coordinates. Always in [0, q). This integer is also the
/// element's serialized form.
using elt = std::uint32_t;

/// Arithmetic context for GF(p^r). Immutable after construction and safe to
/// share across threads; all operations are pure.
///
/// Construction verifies that p is prime, that the modulus (given or searched
/// in lexicographic coefficient order) is irreducible over GF(p), and picks
/// the least primitive element. Small fields get lookup tables; larger ones
/// fall back to log/antilog (q <= 2^16) or direct polynomial arithmetic.
class FieldCtx {
  public:
    static constexpr std::uint32_t full_table_max_q = 256;
    static constexpr std::uint32_t log_table_max_q = 1u << 16;

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Monic irreducible modulus over GF(p), little-endian, length r+1.
    /// Empty when r == 1.
    const std::vector<elt>& modulus() const noexcept { return modulus_; }

    /// Lexicographically least generator of the multiplicative group.
    elt primitive() const noexcept { return primitive_; }

    bool same(const FieldCtx& o) const noexcept {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }

    elt add(elt a, elt b) const {
        if (r_ == 1) {
            elt s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[std::size_t(a) * q_ + b];
        return add_generic(a, b);
    }

    elt neg(elt a) const {
        if (r_ == 1) return a ? p_ - a : 0;
        if (p_ == 2) return a;
        if (!neg_.empty()) return neg_[a];
        return neg_generic(a);
    }

    elt sub(elt a, elt b) const {
        if (r_ == 1) return a >= b ? a - b : a + p_ - b;
        if (p_ == 2) return a ^ b;
        if (!add_.empty()) return add_[std::size_t(a) * q_ + neg_[b]];
        return add_generic(a, neg_generic(b));
    }

    elt mul(elt a, elt b) const {
        if (r_ == 1) return elt((std::uint64_t(a) * b) % p_);
        if (!mul_.empty()) return mul_[std::size_t(a) * q_ + b];
        if (!log_.empty()) return (a && b) ? exp_[log_[a] + log_[b]] : 0;
        return mul_generic(a, b);
    }

    elt inv(elt a) const {
        require(a != 0, errc::zero_element, "inverse of zero");
        if (!inv_.empty()) return inv_[a];
        return pow(a, q_ - 2);
    }

    elt div(elt a, elt b) const { return mul(a, inv(b)); }

    /// a^e with 0^0 = 1.
    elt pow(elt a, std::uint64_t e) const {
        elt acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// The image of the integer k in the prime subfield (k mod p).
    elt from_int(std::uint64_t k) const { return elt(k % p_); }
    elt from_int(std::int64_t k) const {
        std::int64_t m = k % std::int64_t(p_);
        return elt(m < 0 ? m + p_ : m);
    }

    /// Polynomial-basis coordinates, little-endian, length r.
    std::vector<elt> digits(elt a) const {
        std::vector<elt> d(r_);
        for (std::uint32_t i = 0; i < r_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    // Hot-loop hooks for the linear-algebra kernels.
    bool prime_small() const noexcept { return r_ == 1 && p_ <= 251; }
    std::uint32_t barrett16() const noexcept { return barrett_; }  // floor(2^16 / p)
    const elt* log_table() const noexcept { return log_.empty() ? nullptr : log_.data(); }
    const elt* exp_table() const noexcept { return exp_.empty() ? nullptr : exp_.data(); }

  private:
    friend std::shared_ptr<const FieldCtx> field_create(std::uint32_t, std::uint32_t,
                                                        const std::vector<elt>*);
    FieldCtx() = default;

    elt add_generic(elt a, elt b) const;
    elt neg_generic(elt a) const;
    elt mul_generic(elt a, elt b) const;

    void build_tables();

    std::uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<elt> modulus_;
    elt primitive_ = 0;
    std::uint32_t barrett_ = 0;

    std::vector<elt> log_, exp_;               // q <= 2^16
    std::vector<elt> add_, mul_, neg_, inv_;   // q <= 256, r > 1
};

using Field = std::shared_ptr<const FieldCtx>;

/// Builds GF(p^r). When `modulus` is null and r > 1, the modulus is the first
/// irreducible monic polynomial in lexicographic coefficient order, so the
/// construction is reproducible across runs and machines.
Field field_create(std::uint32_t p, std::uint32_t r,
                   const std::vector<elt>* modulus = nullptr);

inline Field field_create(std::uint32_t p, std::uint32_t r, const std::vector<elt>& modulus) {
    return field_create(p, r, &modulus);
}

/// Least i >= 1 with a^i = 1; divides q-1. Throws zero_element for a = 0.
std::uint64_t element_order(const FieldCtx& F, elt a);

/// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, int>> prime_factors(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

}  // namespace ppc
