#pragma once

#include <cstddef>
#include <vector>

#include "ppc/affine.hpp"
#include "ppc/field.hpp"
#include "ppc/unipoly.hpp"

namespace ppc {

/// Bivariate polynomial over a FieldCtx, dense grid indexed
/// [x-degree][y-degree]. nx/ny are tracked bounds (deg_x < nx, deg_y < ny);
/// entries beyond actual degree are zero.
struct BiPoly {
    std::size_t nx = 0, ny = 0;
    std::vector<elt> c;

    BiPoly() = default;
    BiPoly(std::size_t nx_, std::size_t ny_) : nx(nx_), ny(ny_), c(nx_ * ny_, 0) {}

    elt at(std::size_t i, std::size_t j) const noexcept {
        return (i < nx && j < ny) ? c[i * ny + j] : 0;
    }
    elt& ref(std::size_t i, std::size_t j) { return c[i * ny + j]; }

    bool is_zero() const noexcept {
        for (elt v : c)
            if (v) return false;
        return true;
    }

    /// Actual degrees; -1 for the zero polynomial.
    int deg_x() const noexcept {
        for (std::size_t i = nx; i-- > 0;)
            for (std::size_t j = 0; j < ny; ++j)
                if (c[i * ny + j]) return int(i);
        return -1;
    }
    int deg_y() const noexcept {
        for (std::size_t j = ny; j-- > 0;)
            for (std::size_t i = 0; i < nx; ++i)
                if (c[i * ny + j]) return int(j);
        return -1;
    }

    static BiPoly constant(elt v) {
        BiPoly f(1, 1);
        f.c[0] = v;
        return f;
    }
    static BiPoly monomial(std::size_t i, std::size_t j, elt v = 1) {
        BiPoly f(i + 1, j + 1);
        f.ref(i, j) = v;
        return f;
    }
};

/// Equality of coefficients, padding ignored.
bool bi_equal(const BiPoly& a, const BiPoly& b);

BiPoly bi_add(const FieldCtx& F, const BiPoly& a, const BiPoly& b);
BiPoly bi_sub(const FieldCtx& F, const BiPoly& a, const BiPoly& b);
BiPoly bi_scale(const FieldCtx& F, const BiPoly& a, elt s);
BiPoly bi_mul(const FieldCtx& F, const BiPoly& a, const BiPoly& b);

elt bi_eval(const FieldCtx& F, const BiPoly& f, elt x, elt y);

/// f(l1(x), l2(y)) expanded; degrees are preserved by affine substitution.
BiPoly bi_compose_affine(const FieldCtx& F, const BiPoly& f, const AffineMap& l1,
                         const AffineMap& l2);

/// Division of f by a nonzero univariate g taken as a polynomial in y:
/// f = quot*g + rem, deg_y(rem) < deg(g), and the x-degrees of quot and rem
/// never exceed deg_x(f).
struct BiDivmod {
    BiPoly quot, rem;
};
BiDivmod bi_divmod_y(const FieldCtx& F, const BiPoly& f, const UniPoly& g);

/// f * g(x) (convolution along the x axis only).
BiPoly bi_mul_unipoly_x(const FieldCtx& F, const BiPoly& f, const UniPoly& g);
/// f * g(y).
BiPoly bi_mul_unipoly_y(const FieldCtx& F, const BiPoly& f, const UniPoly& g);

/// Row-major coefficient vector padded to an s-by-t grid; the serialization
/// used for ordering and digests. Throws DegreeTooLarge if f does not fit.
std::vector<elt> bi_serial_key(const BiPoly& f, std::size_t s, std::size_t t);

}  // namespace ppc
