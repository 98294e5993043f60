#pragma once

#include <vector>

#include "ppc/field.hpp"

namespace ppc {

/// Univariate polynomial over a FieldCtx, little-endian coefficients with
/// trailing zeros trimmed (leading coefficient nonzero unless zero poly).
/// The owning field is passed to every operation.
struct UniPoly {
    std::vector<elt> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<elt> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const noexcept { return c.empty(); }
    /// Degree, -1 for the zero polynomial.
    int deg() const noexcept { return int(c.size()) - 1; }
    elt lead() const noexcept { return c.empty() ? 0 : c.back(); }
    elt at(std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const UniPoly& o) const noexcept { return c == o.c; }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(elt v) { return UniPoly(std::vector<elt>{v}); }
    /// x^k
    static UniPoly monomial(std::size_t k, elt v = 1) {
        std::vector<elt> c(k + 1, 0);
        c[k] = v;
        return UniPoly(std::move(c));
    }
};

UniPoly uni_add(const FieldCtx& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const FieldCtx& F, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const FieldCtx& F, const UniPoly& a, elt s);
UniPoly uni_mul(const FieldCtx& F, const UniPoly& a, const UniPoly& b);

/// Quotient and remainder; b must be nonzero.
struct UniDivmod {
    UniPoly quot, rem;
};
UniDivmod uni_divmod(const FieldCtx& F, const UniPoly& a, const UniPoly& b);

/// Monic gcd.
UniPoly uni_gcd(const FieldCtx& F, UniPoly a, UniPoly b);

UniPoly uni_make_monic(const FieldCtx& F, UniPoly a);
UniPoly uni_pow(const FieldCtx& F, UniPoly base, std::uint64_t e);
UniPoly uni_powmod(const FieldCtx& F, UniPoly base, std::uint64_t e, const UniPoly& mod);
UniPoly uni_mod(const FieldCtx& F, const UniPoly& a, const UniPoly& mod);

elt uni_eval(const FieldCtx& F, const UniPoly& a, elt x);

/// h(0)^{-1} x^deg(h) h(1/x); requires h(0) != 0.
UniPoly uni_reverse_normalized(const FieldCtx& F, const UniPoly& h);

/// Degrees of the irreducible factors of a monic squarefree polynomial,
/// as (degree, count) pairs in ascending degree order. Distinct-degree
/// factorization: gcd steps against x^(q^d) - x.
std::vector<std::pair<int, int>> factor_degree_profile(const FieldCtx& F, UniPoly h);

/// Unique interpolating polynomial of degree < n through n distinct points.
UniPoly uni_interpolate(const FieldCtx& F, const std::vector<elt>& xs,
                        const std::vector<elt>& ys);

}  // namespace ppc
