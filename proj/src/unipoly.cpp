#include "ppc/unipoly.hpp"

#include <algorithm>

namespace ppc {

UniPoly uni_add(const FieldCtx& F, const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.add(a.at(i), b.at(i));
    out.trim();
    return out;
}

UniPoly uni_sub(const FieldCtx& F, const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.sub(a.at(i), b.at(i));
    out.trim();
    return out;
}

UniPoly uni_scale(const FieldCtx& F, const UniPoly& a, elt s) {
    UniPoly out = a;
    for (auto& v : out.c) v = F.mul(v, s);
    out.trim();
    return out;
}

UniPoly uni_mul(const FieldCtx& F, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    out.trim();
    return out;
}

UniDivmod uni_divmod(const FieldCtx& F, const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), errc::division_by_zero_poly, "division by zero polynomial");
    if (a.deg() < b.deg()) return {UniPoly{}, a};
    elt li = F.inv(b.lead());
    UniPoly rem = a;
    UniPoly quot;
    quot.c.assign(a.c.size() - b.c.size() + 1, 0);
    for (std::size_t k = a.c.size(); k-- >= b.c.size();) {
        elt cv = rem.at(k);
        if (cv != 0) {
            elt f = F.mul(cv, li);
            quot.c[k - b.c.size() + 1] = f;
            for (std::size_t i = 0; i < b.c.size(); ++i) {
                std::size_t pos = k - b.c.size() + 1 + i;
                rem.c[pos] = F.sub(rem.c[pos], F.mul(f, b.c[i]));
            }
        }
    }
    rem.trim();
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

UniPoly uni_gcd(const FieldCtx& F, UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = uni_divmod(F, a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_make_monic(F, std::move(a));
}

UniPoly uni_make_monic(const FieldCtx& F, UniPoly a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return uni_scale(F, a, F.inv(a.lead()));
}

UniPoly uni_pow(const FieldCtx& F, UniPoly base, std::uint64_t e) {
    UniPoly acc = UniPoly::constant(1);
    while (e) {
        if (e & 1) acc = uni_mul(F, acc, base);
        base = uni_mul(F, base, base);
        e >>= 1;
    }
    return acc;
}

UniPoly uni_mod(const FieldCtx& F, const UniPoly& a, const UniPoly& mod) {
    return uni_divmod(F, a, mod).rem;
}

UniPoly uni_powmod(const FieldCtx& F, UniPoly base, std::uint64_t e, const UniPoly& mod) {
    UniPoly acc = uni_mod(F, UniPoly::constant(1), mod);
    base = uni_mod(F, base, mod);
    while (e) {
        if (e & 1) acc = uni_mod(F, uni_mul(F, acc, base), mod);
        base = uni_mod(F, uni_mul(F, base, base), mod);
        e >>= 1;
    }
    return acc;
}

elt uni_eval(const FieldCtx& F, const UniPoly& a, elt x) {
    elt acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

UniPoly uni_reverse_normalized(const FieldCtx& F, const UniPoly& h) {
    require(!h.is_zero() && h.c[0] != 0, errc::bad_input,
            "reversal needs a nonzero constant term");
    UniPoly out;
    out.c.assign(h.c.rbegin(), h.c.rend());
    return uni_scale(F, out, F.inv(h.c[0]));
}

std::vector<std::pair<int, int>> factor_degree_profile(const FieldCtx& F, UniPoly h) {
    h = uni_make_monic(F, std::move(h));
    std::vector<std::pair<int, int>> profile;
    UniPoly x = UniPoly::monomial(1);
    UniPoly frob = uni_mod(F, x, h);  // x^(q^d) mod h, advanced each round
    int d = 0;
    while (h.deg() > 0) {
        ++d;
        if (2 * d > h.deg()) {
            profile.emplace_back(h.deg(), 1);
            break;
        }
        frob = uni_powmod(F, std::move(frob), F.q(), h);
        UniPoly g = uni_gcd(F, uni_sub(F, frob, x), h);
        if (g.deg() > 0) {
            profile.emplace_back(d, g.deg() / d);
            h = uni_divmod(F, h, g).quot;
            frob = uni_mod(F, frob, h);
        }
    }
    return profile;
}

UniPoly uni_interpolate(const FieldCtx& F, const std::vector<elt>& xs,
                        const std::vector<elt>& ys) {
    require(xs.size() == ys.size(), errc::shape_mismatch, "point count mismatch");
    std::size_t n = xs.size();
    if (n == 0) return {};
    // Newton's divided differences
    std::vector<elt> coef(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n; i-- > j;)
            coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(xs[i], xs[i - j]));
    UniPoly out = UniPoly::constant(coef.empty() ? 0 : coef[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // out = out*(x - xs[i]) + coef[i]
        UniPoly lin(std::vector<elt>{F.neg(xs[i]), 1});
        out = uni_mul(F, out, lin);
        out = uni_add(F, out, UniPoly::constant(coef[i]));
    }
    return out;
}

}  // namespace ppc
