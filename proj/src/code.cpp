#include "ppc/code.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppc {

PpcCode::PpcCode(Field F, const AffineMap& l1, const AffineMap& l2, elt alpha, elt beta,
                 std::size_t s, std::size_t t)
    : F_(std::move(F)),
      l1_(l1),
      l2_(l2),
      l2m_(AffineMap::identity(F_)),
      alpha_(alpha),
      beta_(beta) {
    require(l1_.field()->same(*F_) && l2_.field()->same(*F_), errc::field_mismatch,
            "affine maps over a different field");
    m_ = std::size_t(affine_order(l1_));
    n_ = std::size_t(affine_order(l2_));
    require(std::gcd(m_, n_) == 1, errc::non_coprime_orders,
            "orders " + std::to_string(m_) + ", " + std::to_string(n_) + " share a factor");
    require(!is_fixed_point(l1_, alpha_), errc::fixed_point_base, "alpha is fixed by l1");
    require(!is_fixed_point(l2_, beta_), errc::fixed_point_base, "beta is fixed by l2");
    require(1 <= s && s <= m_, errc::degrees_out_of_range,
            "s must lie in [1, m = " + std::to_string(m_) + "]");
    require(1 <= t && t <= n_, errc::degrees_out_of_range,
            "t must lie in [1, n = " + std::to_string(n_) + "]");
    s_ = s;
    t_ = t;

    l2m_ = affine_power(l2_, m_);
    A_ = orbit(l1_, alpha_, m_);
    B_ = orbit(l2m_, beta_, n_);

    // minv = m^-1 mod n in [0, n), by extended Euclid
    {
        std::int64_t r0 = std::int64_t(n_), r1 = std::int64_t(m_ % n_);
        std::int64_t s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        minv_ = std::size_t(((s0 % std::int64_t(n_)) + std::int64_t(n_)) % std::int64_t(n_));
    }

    std::size_t N = m_ * n_;
    xs_.resize(N);
    ys_.resize(N);
    elt x = alpha_, y = beta_;
    for (std::size_t v = 0; v < N; ++v) {
        xs_[v] = x;
        ys_[v] = y;
        x = l1_.apply(x);
        y = l2_.apply(y);
    }
    std::vector<std::pair<elt, elt>> pts(N);
    for (std::size_t v = 0; v < N; ++v) pts[v] = {xs_[v], ys_[v]};
    std::sort(pts.begin(), pts.end());
    require(std::adjacent_find(pts.begin(), pts.end()) == pts.end(), errc::bad_input,
            "evaluation points collide (orbit invariant violated)");

    default_ = l1_.a() == 1 && l1_.b() == 1 && alpha_ == 0 && beta_ == 1 && l2_.b() == 0 &&
               l2_.a() != 0 && element_order(*F_, l2_.a()) == F_->q() - 1;
}

PpcCode ppc_default(Field F, std::size_t s, std::size_t t) {
    require(F->q() > 2, errc::bad_input, "default instantiation needs q > 2");
    AffineMap l1(F, 1, 1);
    AffineMap l2(F, F->primitive(), 0);
    return PpcCode(F, l1, l2, 0, 1, s, t);
}

namespace {

void check_message_degrees(const PpcCode& C, const BiPoly& f) {
    require(f.deg_x() < int(C.s()) && f.deg_y() < int(C.t()), errc::degree_too_large,
            "message degrees exceed (s, t)");
}

}  // namespace

CodeMatrix encode(const PpcCode& C, const BiPoly& f) {
    check_message_degrees(C, f);
    const FieldCtx& F = C.ctx();
    CodeMatrix cw(C.m(), C.n());
    for (std::size_t j = 0; j < C.n(); ++j)
        for (std::size_t i = 0; i < C.m(); ++i) {
            std::size_t v = j * C.m() + i;
            cw.ref(i, j) = bi_eval(F, f, C.eval_x(v), C.eval_y(v));
        }
    return cw;
}

CodeMatrix encode_via_tensor(const PpcCode& C, const BiPoly& f) {
    check_message_degrees(C, f);
    const FieldCtx& F = C.ctx();
    // plain tensor codeword on A x B, then shift row i left by i*m^-1
    CodeMatrix cw(C.m(), C.n());
    for (std::size_t i = 0; i < C.m(); ++i)
        for (std::size_t j = 0; j < C.n(); ++j) {
            std::size_t jj = (j + i * C.m_inverse()) % C.n();
            cw.ref(i, j) = bi_eval(F, f, C.A()[i], C.B()[jj]);
        }
    return cw;
}

bool row_in_rs(const PpcCode& C, const std::vector<elt>& row) {
    require(row.size() == C.n(), errc::shape_mismatch, "row length != n");
    const FieldCtx& F = C.ctx();
    std::vector<elt> xs(C.B().begin(), C.B().begin() + C.t());
    std::vector<elt> ys(row.begin(), row.begin() + C.t());
    UniPoly g = uni_interpolate(F, xs, ys);
    for (std::size_t j = C.t(); j < C.n(); ++j)
        if (uni_eval(F, g, C.B()[j]) != row[j]) return false;
    return true;
}

std::size_t column_agreement(const CodeMatrix& a, const CodeMatrix& b) {
    require(a.m == b.m && a.n == b.n, errc::shape_mismatch, "matrix shapes differ");
    std::size_t agree = 0;
    for (std::size_t j = 0; j < a.n; ++j) {
        bool same = true;
        for (std::size_t i = 0; i < a.m && same; ++i) same = a.at(i, j) == b.at(i, j);
        agree += same;
    }
    return agree;
}

std::uint64_t message_count(const FieldCtx& F, std::size_t s, std::size_t t) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < s * t; ++k) {
        if (total > (std::uint64_t(1) << 63) / F.q()) return std::uint64_t(1) << 63;
        total *= F.q();
    }
    return total;
}

BiPoly message_from_index(const FieldCtx& F, std::size_t s, std::size_t t, std::uint64_t idx) {
    BiPoly f(s, t);
    for (std::size_t k = s * t; k-- > 0;) {
        f.c[k] = elt(idx % F.q());
        idx /= F.q();
    }
    return f;
}

Matrix monomial_table(const PpcCode& C) {
    const FieldCtx& F = C.ctx();
    Matrix T(C.N(), C.s() * C.t());
    for (std::size_t v = 0; v < C.N(); ++v) {
        elt xa = 1;
        for (std::size_t a = 0; a < C.s(); ++a) {
            elt w = xa;
            for (std::size_t b = 0; b < C.t(); ++b) {
                T.ref(v, a * C.t() + b) = w;
                w = F.mul(w, C.eval_y(v));
            }
            xa = F.mul(xa, C.eval_x(v));
        }
    }
    return T;
}

namespace {

// weights of the codeword of message index `idx`, via the monomial table
std::pair<std::size_t, std::size_t> codeword_weights(const FieldCtx& F, const PpcCode& C,
                                                     const Matrix& T, std::uint64_t idx,
                                                     std::vector<elt>& coeffs) {
    std::size_t st = C.s() * C.t();
    for (std::size_t k = st; k-- > 0;) {
        coeffs[k] = elt(idx % F.q());
        idx /= F.q();
    }
    std::size_t nonzero_cols = 0, nonzero_syms = 0;
    for (std::size_t j = 0; j < C.n(); ++j) {
        bool col_nonzero = false;
        for (std::size_t i = 0; i < C.m(); ++i) {
            const elt* row = T.row(j * C.m() + i);
            elt sum = 0;
            for (std::size_t k = 0; k < st; ++k) sum = F.add(sum, F.mul(row[k], coeffs[k]));
            if (sum) {
                ++nonzero_syms;
                col_nonzero = true;
            }
        }
        nonzero_cols += col_nonzero;
    }
    return {nonzero_cols, nonzero_syms};
}

}  // namespace

DistanceResult min_distance_exhaustive(const PpcCode& C, std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    std::uint64_t total = message_count(F, C.s(), C.t());
    require(total <= cap, errc::too_large_to_enumerate,
            "q^(s*t) exceeds the enumeration cap");
    Matrix T = monomial_table(C);
    std::size_t min_cols = C.n() + 1, min_syms = C.N() + 1;
#pragma omp parallel
    {
        std::size_t lc = C.n() + 1, ls = C.N() + 1;
        std::vector<elt> coeffs(C.s() * C.t());
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 1; idx < std::int64_t(total); ++idx) {
            auto [wc, ws] = codeword_weights(F, C, T, std::uint64_t(idx), coeffs);
            lc = std::min(lc, wc);
            ls = std::min(ls, ws);
        }
#pragma omp critical
        {
            min_cols = std::min(min_cols, lc);
            min_syms = std::min(min_syms, ls);
        }
    }
    return {min_cols, min_syms};
}

DistanceResult min_distance_exhaustive_serial(const PpcCode& C, std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    std::uint64_t total = message_count(F, C.s(), C.t());
    require(total <= cap, errc::too_large_to_enumerate,
            "q^(s*t) exceeds the enumeration cap");
    Matrix T = monomial_table(C);
    std::size_t min_cols = C.n() + 1, min_syms = C.N() + 1;
    std::vector<elt> coeffs(C.s() * C.t());
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto [wc, ws] = codeword_weights(F, C, T, idx, coeffs);
        min_cols = std::min(min_cols, wc);
        min_syms = std::min(min_syms, ws);
    }
    return {min_cols, min_syms};
}

}  // namespace ppc
