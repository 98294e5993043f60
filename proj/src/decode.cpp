#include "ppc/decode.hpp"

#include <algorithm>
#include <chrono>

namespace ppc {

namespace {

void check_window(const PpcCode& C, std::size_t w) {
    require(C.s() < C.m(), errc::window_out_of_range,
            "decoding requires s < m (s = m has no valid window)");
    require(1 <= w && w <= C.m() - C.s(), errc::window_out_of_range,
            "w must lie in [1, m-s = " + std::to_string(C.m() - C.s()) + "]");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t pow_clamped(std::uint64_t base, std::size_t e) {
    std::uint64_t v = 1;
    const std::uint64_t lim = std::uint64_t(1) << 62;
    for (std::size_t k = 0; k < e; ++k) {
        if (v > lim / base) return lim;
        v *= base;
    }
    return v;
}

}  // namespace

std::size_t degree_budget(const PpcCode& C, std::size_t w) {
    check_window(C, w);
    std::size_t den = w * (C.m() - C.s() - w + 1);
    return C.N() / den + C.t();
}

ThresholdInfo agreement_threshold(const PpcCode& C, std::size_t w) {
    check_window(C, w);
    std::uint64_t den = w * (C.m() - C.s() - w + 1);
    std::uint64_t nm = C.N();
    ThresholdInfo ti;
    ti.value = std::size_t((nm + den - 1) / den + C.t());
    ti.vacuous = ti.value > C.n();
    ti.raw_num = nm + std::uint64_t(C.t()) * den;
    ti.raw_den = den;
    return ti;
}

InterpPoly interpolate(const PpcCode& C, const CodeMatrix& r, std::size_t w) {
    check_window(C, w);
    require(r.m == C.m() && r.n == C.n(), errc::shape_mismatch, "received word shape");
    const FieldCtx& F = C.ctx();
    const std::size_t m = C.m(), n = C.n();
    const std::size_t D = degree_budget(C, w);
    const std::size_t dX = C.m() - C.s() - w + 1;  // x-coefficients per part
    const std::size_t dY = D - C.t() + 1;          // y-coefficients per part

    Matrix M(n * (m - w + 1), w * dX * dY);
    std::vector<elt> xpow(dX), ypow(dY);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= m - w; ++i) {
            std::size_t row = j * (m - w + 1) + i;
            std::size_t v = j * m + i;
            elt x = C.eval_x(v), y = C.eval_y(v);
            xpow[0] = 1;
            for (std::size_t a = 1; a < dX; ++a) xpow[a] = F.mul(xpow[a - 1], x);
            ypow[0] = 1;
            for (std::size_t b = 1; b < dY; ++b) ypow[b] = F.mul(ypow[b - 1], y);
            elt* out = M.row(row);
            for (std::size_t k = 0; k < w; ++k) {
                elt rv = r.at(i + k, j);
                if (rv == 0) {
                    out += dX * dY;
                    continue;
                }
                for (std::size_t a = 0; a < dX; ++a) {
                    elt xa = F.mul(rv, xpow[a]);
                    for (std::size_t b = 0; b < dY; ++b) *out++ = F.mul(xa, ypow[b]);
                }
            }
        }

    std::vector<elt> sol = nullspace_vector(F, std::move(M));
    require(!sol.empty(), errc::internal_no_solution,
            "interpolation system has no nonzero solution (arithmetic bug)");

    InterpPoly Q;
    Q.w = w;
    Q.D = D;
    Q.parts.reserve(w);
    for (std::size_t k = 0; k < w; ++k) {
        BiPoly p(dX, dY);
        std::copy(sol.begin() + k * dX * dY, sol.begin() + (k + 1) * dX * dY, p.c.begin());
        Q.parts.push_back(std::move(p));
    }
    return Q;
}

bool verify_interpolation(const PpcCode& C, const InterpPoly& Q, const CodeMatrix& r) {
    const FieldCtx& F = C.ctx();
    const std::size_t m = C.m(), n = C.n(), w = Q.w;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= m - w; ++i) {
            std::size_t v = j * m + i;
            elt sum = 0;
            for (std::size_t k = 0; k < w; ++k) {
                elt rv = r.at(i + k, j);
                if (rv)
                    sum = F.add(sum, F.mul(rv, bi_eval(F, Q.parts[k], C.eval_x(v),
                                                       C.eval_y(v))));
            }
            if (sum != 0) return false;
        }
    return true;
}

namespace {

void check_reduction_supported(const PpcCode& C) {
    const FieldCtx& F = C.ctx();
    require(C.l2().b() == 0 && element_order(F, C.l2().a()) == F.q() - 1,
            errc::unsupported_affine_map,
            "coprimality reduction needs l2 = gamma*x with gamma a generator");
}

bool all_divisible_by_y(const InterpPoly& Q) {
    for (const BiPoly& p : Q.parts)
        for (std::size_t i = 0; i < p.nx; ++i)
            if (p.at(i, 0) != 0) return false;
    return true;
}

// y^(q-1) - gamma, the non-linear irreducible factor of y^q - l2(y)
UniPoly orbit_factor(const FieldCtx& F, elt gamma) {
    std::vector<elt> c(F.q(), 0);
    c[0] = F.neg(gamma);
    c[F.q() - 1] = 1;
    return UniPoly(std::move(c));
}

}  // namespace

InterpPoly reduce_coprime(const PpcCode& C, InterpPoly Q) {
    check_reduction_supported(C);
    const FieldCtx& F = C.ctx();
    while (all_divisible_by_y(Q)) {
        for (BiPoly& p : Q.parts) {
            BiPoly shifted(p.nx, p.ny > 1 ? p.ny - 1 : 1);
            for (std::size_t i = 0; i < p.nx; ++i)
                for (std::size_t j = 1; j < p.ny; ++j) shifted.ref(i, j - 1) = p.at(i, j);
            p = std::move(shifted);
        }
    }
    UniPoly v = orbit_factor(F, C.l2().a());
    for (;;) {
        std::vector<BiPoly> quots;
        quots.reserve(Q.parts.size());
        bool all_exact = true;
        for (const BiPoly& p : Q.parts) {
            BiDivmod qr = bi_divmod_y(F, p, v);
            if (!qr.rem.is_zero()) {
                all_exact = false;
                break;
            }
            quots.push_back(std::move(qr.quot));
        }
        if (!all_exact) break;
        Q.parts = std::move(quots);
    }
    return Q;
}

bool coprime_with_orbit_poly(const PpcCode& C, const InterpPoly& Q) {
    check_reduction_supported(C);
    const FieldCtx& F = C.ctx();
    if (all_divisible_by_y(Q)) return false;
    UniPoly v = orbit_factor(F, C.l2().a());
    for (const BiPoly& p : Q.parts)
        if (!bi_divmod_y(F, p, v).rem.is_zero()) return true;
    return false;
}

BiPoly q_hat(const PpcCode& C, const InterpPoly& Q, const BiPoly& f) {
    const FieldCtx& F = C.ctx();
    BiPoly acc;
    for (std::size_t k = 0; k < Q.w; ++k) {
        AffineMap l1k = affine_power(C.l1(), k);
        AffineMap l2k = affine_power(C.l2(), k);
        BiPoly fk = bi_compose_affine(F, f, l1k, l2k);
        acc = bi_add(F, acc, bi_mul(F, Q.parts[k], fk));
    }
    return acc;
}

std::vector<BiPoly> candidate_subspace(const PpcCode& C, const InterpPoly& Q) {
    const FieldCtx& F = C.ctx();
    const std::size_t m = C.m(), s = C.s(), t = C.t(), w = Q.w, D = Q.D;
    require(w >= 1 && Q.parts.size() == w, errc::bad_input, "malformed interpolation poly");

    // One equation per monomial x^u y^v, u < m-w, v < D; one unknown per
    // message coefficient (a, b). Column (a, b) holds the coefficients of
    // sum_k p_k * (l1^k x)^a * (l2^k y)^b, assembled as two 1-D convolutions
    // per (k, a, b).
    Matrix M((m - w) * D, s * t);
    for (std::size_t k = 0; k < w; ++k) {
        if (Q.parts[k].is_zero()) continue;
        AffineMap l1k = affine_power(C.l1(), k);
        AffineMap l2k = affine_power(C.l2(), k);
        UniPoly lin_x(std::vector<elt>{l1k.b(), l1k.a()});
        UniPoly lin_y(std::vector<elt>{l2k.b(), l2k.a()});
        UniPoly ypow = UniPoly::constant(1);
        std::vector<UniPoly> ypows;
        ypows.reserve(t);
        for (std::size_t b = 0; b < t; ++b) {
            ypows.push_back(ypow);
            ypow = uni_mul(F, ypow, lin_y);
        }
        UniPoly xpow = UniPoly::constant(1);
        for (std::size_t a = 0; a < s; ++a) {
            BiPoly R = bi_mul_unipoly_x(F, Q.parts[k], xpow);
            for (std::size_t b = 0; b < t; ++b) {
                BiPoly G = bi_mul_unipoly_y(F, R, ypows[b]);
                std::size_t col = a * t + b;
                for (std::size_t u = 0; u < G.nx; ++u)
                    for (std::size_t v = 0; v < G.ny; ++v) {
                        elt g = G.c[u * G.ny + v];
                        if (g) {
                            elt& dst = M.ref(u * D + v, col);
                            dst = F.add(dst, g);
                        }
                    }
            }
            xpow = uni_mul(F, xpow, lin_x);
        }
    }

    std::vector<std::vector<elt>> vecs = nullspace(F, std::move(M));
    require(vecs.size() <= w - 1, errc::dimension_bound_violated,
            "candidate subspace dimension " + std::to_string(vecs.size()) +
                " exceeds w-1 = " + std::to_string(w - 1));
    std::vector<BiPoly> basis;
    basis.reserve(vecs.size());
    for (const auto& v : vecs) {
        BiPoly f(s, t);
        std::copy(v.begin(), v.end(), f.c.begin());
        basis.push_back(std::move(f));
    }
    return basis;
}

std::vector<BiPoly> filter_list(const PpcCode& C, const std::vector<BiPoly>& basis,
                                const CodeMatrix& r, std::size_t threshold,
                                std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    const std::size_t dim = basis.size();
    std::uint64_t combos = pow_clamped(F.q(), dim);
    require(combos <= cap, errc::subspace_too_large_to_enumerate,
            "q^dim = " + std::to_string(combos) + " exceeds the enumeration cap");

    std::vector<CodeMatrix> enc;
    enc.reserve(dim);
    for (const BiPoly& b : basis) enc.push_back(encode(C, b));

    std::vector<std::vector<elt>> hits;  // serialized keys of agreeing messages
    std::vector<elt> combo(dim, 0);
    CodeMatrix cw(C.m(), C.n());
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t k = dim; k-- > 0;) {
            combo[k] = elt(x % F.q());
            x /= F.q();
        }
        std::fill(cw.e.begin(), cw.e.end(), 0);
        for (std::size_t k = 0; k < dim; ++k) {
            elt ck = combo[k];
            if (!ck) continue;
            for (std::size_t z = 0; z < cw.e.size(); ++z)
                cw.e[z] = F.add(cw.e[z], F.mul(ck, enc[k].e[z]));
        }
        if (column_agreement(cw, r) < threshold) continue;
        BiPoly f(C.s(), C.t());
        for (std::size_t k = 0; k < dim; ++k) {
            elt ck = combo[k];
            if (!ck) continue;
            for (std::size_t z = 0; z < f.c.size(); ++z)
                f.c[z] = F.add(f.c[z], F.mul(ck, basis[k].c[z]));
        }
        hits.push_back(bi_serial_key(f, C.s(), C.t()));
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    std::vector<BiPoly> out;
    out.reserve(hits.size());
    for (const auto& key : hits) {
        BiPoly f(C.s(), C.t());
        f.c = key;
        out.push_back(std::move(f));
    }
    return out;
}

bool in_span(const PpcCode& C, const std::vector<BiPoly>& basis, const BiPoly& f) {
    const FieldCtx& F = C.ctx();
    const std::size_t st = C.s() * C.t();
    Matrix M(basis.size() + 1, st);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto key = bi_serial_key(basis[i], C.s(), C.t());
        std::copy(key.begin(), key.end(), M.row(i));
    }
    auto fk = bi_serial_key(f, C.s(), C.t());
    std::copy(fk.begin(), fk.end(), M.row(basis.size()));
    Matrix B(basis.size(), st);
    std::copy(M.a.begin(), M.a.begin() + basis.size() * st, B.a.begin());
    return matrix_rank(F, std::move(M)) == matrix_rank(F, std::move(B));
}

DecodeOutput list_decode(const PpcCode& C, const CodeMatrix& r, std::size_t w,
                         std::optional<std::size_t> threshold, std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    DecodeOutput out;
    ThresholdInfo ti = agreement_threshold(C, w);
    out.threshold = threshold.value_or(ti.value);

    auto t0 = std::chrono::steady_clock::now();
    InterpPoly Q = interpolate(C, r, w);
    out.stats.t_interpolate = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Q = reduce_coprime(C, Q);
    out.stats.interpolation_verified = verify_interpolation(C, Q, r);
    out.stats.coprime_after_reduction = coprime_with_orbit_poly(C, Q);
    out.stats.t_reduce = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    out.basis = candidate_subspace(C, Q);
    out.stats.t_subspace = seconds_since(t0);

    out.stats.w = w;
    out.stats.D = Q.D;
    out.stats.constraints = C.n() * (C.m() - w + 1);
    out.stats.variables =
        w * (C.m() - C.s() - w + 1) * (Q.D - C.t() + 1);
    out.stats.dimension = out.basis.size();
    out.stats.threshold_num = ti.raw_num;
    out.stats.threshold_den = ti.raw_den;
    out.stats.threshold_vacuous = ti.vacuous;

    t0 = std::chrono::steady_clock::now();
    if (pow_clamped(F.q(), out.basis.size()) <= cap) {
        out.list = filter_list(C, out.basis, r, out.threshold, cap);
        out.stats.enumerated = true;
    }
    out.stats.t_filter = seconds_since(t0);
    return out;
}

}  // namespace ppc
