#include "ppc/cyclic.hpp"

#include "ppc/rng.hpp"

namespace ppc {

UnfoldedWord unfold(const CodeMatrix& c) {
    UnfoldedWord u;
    u.coeffs.resize(c.m * c.n);
    for (std::size_t j = 0; j < c.n; ++j)
        for (std::size_t i = 0; i < c.m; ++i) u.coeffs[c.m * j + i] = c.at(i, j);
    return u;
}

BiPoly shift_polynomial(const PpcCode& C, const BiPoly& f) {
    require(f.deg_x() < int(C.s()) && f.deg_y() < int(C.t()), errc::degree_too_large,
            "message degrees exceed (s, t)");
    return bi_compose_affine(C.ctx(), f, C.l1(), C.l2());
}

namespace {

void check_default(const PpcCode& C) {
    require(C.is_default_instantiation(), errc::non_default_instantiation,
            "generator polynomial needs l1 = x+1, l2 = gamma*x, alpha = 0, beta = 1");
}

}  // namespace

UniPoly check_polynomial(const PpcCode& C) {
    check_default(C);
    const FieldCtx& F = C.ctx();
    elt gamma = C.l2().a();
    UniPoly h = UniPoly::constant(1);
    for (std::size_t j = F.q() - C.t(); j <= F.q() - 1; ++j) {
        UniPoly lin(std::vector<elt>{F.neg(F.pow(gamma, j)), 1});
        for (std::size_t k = 0; k < C.s(); ++k) h = uni_mul(F, h, lin);
    }
    return h;
}

UniPoly generator_poly(const PpcCode& C) {
    check_default(C);
    const FieldCtx& F = C.ctx();
    // (x^(q-1) - 1)^p; equals x^N - 1 in characteristic p
    UniPoly base = UniPoly::monomial(F.q() - 1);
    base.c[0] = F.neg(1);
    UniPoly numerator = uni_pow(F, base, F.p());
    UniDivmod qr = uni_divmod(F, numerator, check_polynomial(C));
    require(qr.rem.is_zero(), errc::inexact_division,
            "generator division left a remainder (arithmetic bug)");
    return qr.quot;
}

Matrix hasse_parity_matrix(const FieldCtx& F, elt beta, std::size_t r, std::size_t N) {
    require(1 <= r && r <= F.p(), errc::multiplicity_exceeds_characteristic,
            "multiplicity parameter must lie in [1, p]");
    Matrix H(r, N);
    elt bj = 1;  // beta^j
    for (std::size_t j = 0; j < N; ++j) {
        elt jf = F.from_int(std::uint64_t(j));
        elt ji = 1;  // j^i
        for (std::size_t i = 0; i < r; ++i) {
            H.ref(i, j) = F.mul(ji, bj);
            ji = F.mul(ji, jf);
        }
        bj = F.mul(bj, beta);
    }
    return H;
}

CyclicReport verify_cyclic_structure(const PpcCode& C, std::size_t trials,
                                     std::uint64_t seed) {
    const FieldCtx& F = C.ctx();
    CyclicReport rep;
    const std::size_t N = C.N(), st = C.s() * C.t();

    // x^N - 1 = (x^(q-1) - 1)^p, the factorization behind the generator
    {
        UniPoly base = UniPoly::monomial(F.q() - 1);
        base.c[0] = F.neg(1);
        UniPoly xn1 = UniPoly::monomial(N);
        xn1.c[0] = F.neg(1);
        rep.clauses.push_back(
            {"numerator_identity", uni_pow(F, base, F.p()) == xn1, ""});
    }

    UniPoly g, h;
    try {
        g = generator_poly(C);
        h = check_polynomial(C);
    } catch (const error& e) {
        rep.clauses.push_back({"generator_exact_division", false, e.what()});
        return rep;
    }
    rep.clauses.push_back({"generator_exact_division", true, ""});
    rep.clauses.push_back(
        {"generator_degree", std::size_t(g.deg()) == N - st,
         "deg(g) = " + std::to_string(g.deg())});

    {
        UniPoly xn1 = UniPoly::monomial(N);
        xn1.c[0] = F.neg(1);
        rep.clauses.push_back(
            {"generator_divides_xN_minus_1", uni_divmod(F, xn1, g).rem.is_zero(), ""});
        rep.clauses.push_back({"check_product", uni_mul(F, g, h) == xn1, ""});
        // reversed check polynomial is the dual code's generator
        elt gamma = C.l2().a();
        UniPoly dual_gen = UniPoly::constant(1);
        for (std::size_t j = 0; j < C.t(); ++j) {
            UniPoly lin(std::vector<elt>{F.neg(F.pow(gamma, j)), 1});
            for (std::size_t k = 0; k < C.s(); ++k) dual_gen = uni_mul(F, dual_gen, lin);
        }
        rep.clauses.push_back(
            {"dual_reversal", uni_reverse_normalized(F, h) == dual_gen, ""});
    }

    AuditClause shift{"cyclic_shift", true, ""};
    AuditClause divis{"codeword_divisible", true, ""};
    for (std::size_t k = 0; k < trials; ++k) {
        std::uint64_t sub = SplitMix64::substream(seed, k);
        SplitMix64 rng(sub);
        BiPoly f(C.s(), C.t());
        for (auto& cf : f.c) cf = elt(rng.below(F.q()));

        UnfoldedWord u = unfold(encode(C, f));
        UnfoldedWord v = unfold(encode(C, shift_polynomial(C, f)));
        bool ok = true;
        for (std::size_t z = 0; z < N && ok; ++z) ok = v.coeffs[z] == u.coeffs[(z + 1) % N];
        if (!ok && shift.pass) {
            shift.pass = false;
            shift.detail = "seed " + std::to_string(sub);
        }

        UniPoly c(std::vector<elt>(u.coeffs));
        if (!uni_divmod(F, c, g).rem.is_zero() && divis.pass) {
            divis.pass = false;
            divis.detail = "seed " + std::to_string(sub);
        }
    }
    rep.clauses.push_back(std::move(shift));
    rep.clauses.push_back(std::move(divis));
    return rep;
}

}  // namespace ppc
