#include "ppc/affine.hpp"

namespace ppc {

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    require(outer.field()->same(*inner.field()), errc::field_mismatch,
            "composing maps over different fields");
    const FieldCtx& F = *outer.field();
    elt a = F.mul(outer.a(), inner.a());
    elt b = F.add(F.mul(outer.a(), inner.b()), outer.b());
    return AffineMap(outer.field(), a, b);
}

AffineMap affine_inverse(const AffineMap& l) {
    const FieldCtx& F = *l.field();
    elt ai = F.inv(l.a());
    return AffineMap(l.field(), ai, F.neg(F.mul(ai, l.b())));
}

AffineMap affine_power(const AffineMap& l, std::uint64_t i) {
    const FieldCtx& F = *l.field();
    if (l.a() == 1) {
        // l^i(x) = x + i*b
        return AffineMap(l.field(), 1, F.mul(F.from_int(i), l.b()));
    }
    elt ai = F.pow(l.a(), i % (F.q() - 1));
    elt b = F.mul(l.b(), F.div(F.sub(ai, 1), F.sub(l.a(), 1)));
    return AffineMap(l.field(), ai, b);
}

std::uint64_t affine_order(const AffineMap& l) {
    if (l.a() != 1) return element_order(*l.field(), l.a());
    return l.b() == 0 ? 1 : l.field()->p();
}

std::vector<elt> orbit(const AffineMap& l, elt z, std::size_t len) {
    std::vector<elt> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(z);
        z = l.apply(z);
    }
    return out;
}

bool is_fixed_point(const AffineMap& l, elt z) { return l.apply(z) == z; }

std::vector<elt> fixed_points(const AffineMap& l) {
    const FieldCtx& F = *l.field();
    if (l.a() == 1) {
        if (l.b() != 0) return {};
        std::vector<elt> all(F.q());
        for (elt z = 0; z < F.q(); ++z) all[z] = z;
        return all;
    }
    // (a-1)z = -b
    return {F.div(F.neg(l.b()), F.sub(l.a(), 1))};
}

std::string affine_format(const AffineMap& l) {
    return std::to_string(l.a()) + "*x+" + std::to_string(l.b());
}

AffineMap affine_parse(Field F, const std::string& text) {
    auto star = text.find("*x+");
    require(star != std::string::npos, errc::bad_input, "expected \"a*x+b\": " + text);
    try {
        unsigned long a = std::stoul(text.substr(0, star));
        unsigned long b = std::stoul(text.substr(star + 3));
        return AffineMap(std::move(F), elt(a), elt(b));
    } catch (const std::logic_error&) {
        fail(errc::bad_input, "expected \"a*x+b\": " + text);
    }
}

std::vector<std::pair<int, int>> splitting_degree_profile(const AffineMap& l) {
    const FieldCtx& F = *l.field();
    // h(x) = x^q - a x - b; separable since h' = -a != 0
    std::vector<elt> c(F.q() + 1, 0);
    c[0] = F.neg(l.b());
    c[1] = F.add(c[1], F.neg(l.a()));
    c[F.q()] = F.add(c[F.q()], 1);
    return factor_degree_profile(F, UniPoly(std::move(c)));
}

}  // namespace ppc
