#include "ppc/bipoly.hpp"

#include <algorithm>

namespace ppc {

bool bi_equal(const BiPoly& a, const BiPoly& b) {
    std::size_t nx = std::max(a.nx, b.nx), ny = std::max(a.ny, b.ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

BiPoly bi_add(const FieldCtx& F, const BiPoly& a, const BiPoly& b) {
    BiPoly out(std::max(a.nx, b.nx), std::max(a.ny, b.ny));
    for (std::size_t i = 0; i < out.nx; ++i)
        for (std::size_t j = 0; j < out.ny; ++j)
            out.ref(i, j) = F.add(a.at(i, j), b.at(i, j));
    return out;
}

BiPoly bi_sub(const FieldCtx& F, const BiPoly& a, const BiPoly& b) {
    BiPoly out(std::max(a.nx, b.nx), std::max(a.ny, b.ny));
    for (std::size_t i = 0; i < out.nx; ++i)
        for (std::size_t j = 0; j < out.ny; ++j)
            out.ref(i, j) = F.sub(a.at(i, j), b.at(i, j));
    return out;
}

BiPoly bi_scale(const FieldCtx& F, const BiPoly& a, elt s) {
    BiPoly out = a;
    for (auto& v : out.c) v = F.mul(v, s);
    return out;
}

BiPoly bi_mul(const FieldCtx& F, const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BiPoly out(a.nx + b.nx - 1, a.ny + b.ny - 1);
    for (std::size_t i = 0; i < a.nx; ++i)
        for (std::size_t j = 0; j < a.ny; ++j) {
            elt v = a.at(i, j);
            if (!v) continue;
            for (std::size_t k = 0; k < b.nx; ++k)
                for (std::size_t l = 0; l < b.ny; ++l) {
                    elt w = b.at(k, l);
                    if (!w) continue;
                    elt& dst = out.ref(i + k, j + l);
                    dst = F.add(dst, F.mul(v, w));
                }
        }
    return out;
}

elt bi_eval(const FieldCtx& F, const BiPoly& f, elt x, elt y) {
    // Horner in x of Horner-in-y rows
    elt acc = 0;
    for (std::size_t i = f.nx; i-- > 0;) {
        elt row = 0;
        for (std::size_t j = f.ny; j-- > 0;) row = F.add(F.mul(row, y), f.c[i * f.ny + j]);
        acc = F.add(F.mul(acc, x), row);
    }
    return acc;
}

namespace {

// out = f*(a*x+b) restricted to the x axis
BiPoly mul_linear_x(const FieldCtx& F, const BiPoly& f, elt a, elt b) {
    BiPoly out(f.nx + 1, f.ny);
    for (std::size_t i = 0; i < f.nx; ++i)
        for (std::size_t j = 0; j < f.ny; ++j) {
            elt v = f.c[i * f.ny + j];
            if (!v) continue;
            out.ref(i + 1, j) = F.add(out.at(i + 1, j), F.mul(a, v));
            out.ref(i, j) = F.add(out.at(i, j), F.mul(b, v));
        }
    return out;
}

BiPoly mul_linear_y(const FieldCtx& F, const BiPoly& f, elt a, elt b) {
    BiPoly out(f.nx, f.ny + 1);
    for (std::size_t i = 0; i < f.nx; ++i)
        for (std::size_t j = 0; j < f.ny; ++j) {
            elt v = f.c[i * f.ny + j];
            if (!v) continue;
            out.ref(i, j + 1) = F.add(out.at(i, j + 1), F.mul(a, v));
            out.ref(i, j) = F.add(out.at(i, j), F.mul(b, v));
        }
    return out;
}

}  // namespace

BiPoly bi_compose_affine(const FieldCtx& F, const BiPoly& f, const AffineMap& l1,
                         const AffineMap& l2) {
    if (f.nx == 0 || f.ny == 0) return {};
    // Horner in x: acc = acc*(a1 x + b1) + row_i(y)
    BiPoly acc(1, f.ny);
    for (std::size_t i = f.nx; i-- > 0;) {
        if (i + 1 < f.nx) acc = mul_linear_x(F, acc, l1.a(), l1.b());
        for (std::size_t j = 0; j < f.ny; ++j)
            acc.ref(0, j) = F.add(acc.at(0, j), f.c[i * f.ny + j]);
        if (i == 0) break;
    }
    // then Horner in y on the x-substituted grid
    BiPoly out(acc.nx, 1);
    for (std::size_t j = f.ny; j-- > 0;) {
        if (j + 1 < f.ny) out = mul_linear_y(F, out, l2.a(), l2.b());
        for (std::size_t i = 0; i < acc.nx; ++i)
            out.ref(i, 0) = F.add(out.at(i, 0), acc.at(i, j));
        if (j == 0) break;
    }
    return out;
}

BiDivmod bi_divmod_y(const FieldCtx& F, const BiPoly& f, const UniPoly& g) {
    require(!g.is_zero(), errc::division_by_zero_poly, "division by zero polynomial");
    // per-x-row univariate division: g has constant coefficients, so rows
    // divide independently and deg_x never grows
    std::size_t dg = std::size_t(g.deg());
    BiPoly quot(f.nx, f.ny > dg ? f.ny - dg : 1);
    BiPoly rem(f.nx, std::min(f.ny, dg ? dg : 1));
    elt li = F.inv(g.lead());
    std::vector<elt> row(f.ny);
    for (std::size_t i = 0; i < f.nx; ++i) {
        for (std::size_t j = 0; j < f.ny; ++j) row[j] = f.at(i, j);
        for (std::size_t k = f.ny; k-- > dg;) {
            elt cv = row[k];
            if (cv == 0) continue;
            elt fct = F.mul(cv, li);
            quot.ref(i, k - dg) = fct;
            for (std::size_t l = 0; l <= dg; ++l)
                row[k - dg + l] = F.sub(row[k - dg + l], F.mul(fct, g.c[l]));
        }
        for (std::size_t j = 0; j < rem.ny && j < dg; ++j) rem.ref(i, j) = row[j];
        if (dg == 0)
            for (std::size_t j = 0; j < f.ny; ++j)
                require(row[j] == 0, errc::internal_no_solution, "constant division residue");
    }
    return {std::move(quot), std::move(rem)};
}

BiPoly bi_mul_unipoly_x(const FieldCtx& F, const BiPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    BiPoly out(f.nx + g.c.size() - 1, f.ny);
    for (std::size_t k = 0; k < g.c.size(); ++k) {
        elt w = g.c[k];
        if (!w) continue;
        for (std::size_t i = 0; i < f.nx; ++i)
            for (std::size_t j = 0; j < f.ny; ++j) {
                elt v = f.c[i * f.ny + j];
                if (!v) continue;
                elt& dst = out.ref(i + k, j);
                dst = F.add(dst, F.mul(v, w));
            }
    }
    return out;
}

BiPoly bi_mul_unipoly_y(const FieldCtx& F, const BiPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    BiPoly out(f.nx, f.ny + g.c.size() - 1);
    for (std::size_t k = 0; k < g.c.size(); ++k) {
        elt w = g.c[k];
        if (!w) continue;
        for (std::size_t i = 0; i < f.nx; ++i)
            for (std::size_t j = 0; j < f.ny; ++j) {
                elt v = f.c[i * f.ny + j];
                if (!v) continue;
                elt& dst = out.ref(i, j + k);
                dst = F.add(dst, F.mul(v, w));
            }
    }
    return out;
}

std::vector<elt> bi_serial_key(const BiPoly& f, std::size_t s, std::size_t t) {
    require(f.deg_x() < int(s) && f.deg_y() < int(t), errc::degree_too_large,
            "polynomial does not fit the s-by-t grid");
    std::vector<elt> key(s * t, 0);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j) key[i * t + j] = f.at(i, j);
    return key;
}

}  // namespace ppc
