#include "ppc/linalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#ifdef __SSE2__
#include <emmintrin.h>
#endif

namespace ppc {

namespace {

// Barrett reduction of x < 2^16 by p <= 251 with M16 = floor(2^16/p):
// q = (x*M16) >> 16 undershoots x/p by less than one, so one conditional
// subtraction lands in [0, p). The loop is branch-free and auto-vectorizes.
inline void submul_barrett(std::uint32_t p, std::uint32_t M16, elt f, elt* __restrict dst,
                           const elt* __restrict src, std::size_t from, std::size_t len) {
    const std::uint32_t g = p - f;
    for (std::size_t j = from; j < len; ++j) {
        std::uint32_t x = dst[j] + g * src[j];
        std::uint32_t q = (x * M16) >> 16;
        x -= q * p;
        dst[j] = x >= p ? x - p : x;
    }
}

inline void scale_barrett(std::uint32_t p, std::uint32_t M16, elt f, elt* __restrict dst,
                          std::size_t from, std::size_t len) {
    for (std::size_t j = from; j < len; ++j) {
        std::uint32_t x = f * dst[j];
        std::uint32_t q = (x * M16) >> 16;
        x -= q * p;
        dst[j] = x >= p ? x - p : x;
    }
}

}  // namespace

void row_submul(const FieldCtx& F, elt* dst, const elt* src, elt f, std::size_t from,
                std::size_t len) {
    if (f == 0) return;
    if (F.prime_small()) {
        submul_barrett(F.p(), F.barrett16(), f, dst, src, from, len);
        return;
    }
    if (F.r() == 1) {
        const std::uint64_t p = F.p(), g = p - f;
        for (std::size_t j = from; j < len; ++j)
            dst[j] = elt((dst[j] + g * src[j]) % p);
        return;
    }
    const elt* lg = F.log_table();
    const elt* ex = F.exp_table();
    if (lg) {
        const elt lf = lg[f];
        for (std::size_t j = from; j < len; ++j) {
            elt s = src[j];
            if (s) dst[j] = F.sub(dst[j], ex[lf + lg[s]]);
        }
        return;
    }
    for (std::size_t j = from; j < len; ++j) dst[j] = F.sub(dst[j], F.mul(f, src[j]));
}

void row_scale(const FieldCtx& F, elt* dst, elt f, std::size_t from, std::size_t len) {
    if (f == 1) return;
    if (F.prime_small()) {
        scale_barrett(F.p(), F.barrett16(), f, dst, from, len);
        return;
    }
    for (std::size_t j = from; j < len; ++j) dst[j] = F.mul(f, dst[j]);
}

namespace {

inline void submul_barrett_u16(std::uint32_t p, std::uint32_t M16, std::uint16_t f,
                               std::uint16_t* __restrict dst,
                               const std::uint16_t* __restrict src, std::size_t from,
                               std::size_t len) {
    const std::uint32_t g = p - f;
    std::size_t j = from;
#ifdef __SSE2__
    // 8 lanes of the Barrett update: all intermediates stay below 2^16
    // (g*s <= 250^2, x <= 62750), pmulhuw gives (x*M16)>>16 directly, and
    // the conditional subtract is a saturating-subtract compare mask.
    const __m128i vg = _mm_set1_epi16(short(g));
    const __m128i vM = _mm_set1_epi16(short(M16));
    const __m128i vp = _mm_set1_epi16(short(p));
    const __m128i vpm1 = _mm_set1_epi16(short(p - 1));
    const __m128i zero = _mm_setzero_si128();
    for (; j + 8 <= len; j += 8) {
        __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + j));
        __m128i x = _mm_loadu_si128(reinterpret_cast<__m128i*>(dst + j));
        x = _mm_add_epi16(x, _mm_mullo_epi16(vg, s));
        __m128i q = _mm_mulhi_epu16(x, vM);
        x = _mm_sub_epi16(x, _mm_mullo_epi16(q, vp));
        __m128i over = _mm_cmpeq_epi16(_mm_subs_epu16(x, vpm1), zero);  // x < p
        x = _mm_sub_epi16(x, _mm_andnot_si128(over, vp));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + j), x);
    }
#endif
    for (; j < len; ++j) {
        std::uint32_t x = dst[j] + g * src[j];
        std::uint32_t q = (x * M16) >> 16;
        x -= q * p;
        dst[j] = std::uint16_t(x >= p ? x - p : x);
    }
}

inline void scale_barrett_u16(std::uint32_t p, std::uint32_t M16, std::uint16_t f,
                              std::uint16_t* __restrict dst, std::size_t from,
                              std::size_t len) {
    for (std::size_t j = from; j < len; ++j) {
        std::uint32_t x = std::uint32_t(f) * dst[j];
        std::uint32_t q = (x * M16) >> 16;
        x -= q * p;
        dst[j] = std::uint16_t(x >= p ? x - p : x);
    }
}

// Same elimination as the generic path, on a 16-bit copy: small prime
// fields fit in uint16, and the update loops are memory-bound, so halving
// the element width nearly halves the wall time. Identical arithmetic,
// identical result.
Echelon eliminate_small_prime(const FieldCtx& F, Matrix& M, bool parallel) {
    const std::size_t rows = M.rows, cols = M.cols;
    const std::uint32_t p = F.p(), M16 = F.barrett16();
    std::vector<std::uint16_t> B(rows * cols);
    for (std::size_t z = 0; z < B.size(); ++z) B[z] = std::uint16_t(M.a[z]);
    Echelon e;
    for (std::size_t col = 0; col < cols && e.rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = e.rank; i < rows; ++i)
            if (B[i * cols + col] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != e.rank)
            std::swap_ranges(B.begin() + piv * cols, B.begin() + (piv + 1) * cols,
                             B.begin() + e.rank * cols);
        std::uint16_t* prow = B.data() + e.rank * cols;
        scale_barrett_u16(p, M16, std::uint16_t(F.inv(prow[col])), prow, col, cols);
        const std::ptrdiff_t lo = std::ptrdiff_t(e.rank) + 1;
        const std::ptrdiff_t hi = std::ptrdiff_t(rows);
        if (parallel && hi - lo >= 32) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                std::uint16_t f = B[std::size_t(i) * cols + col];
                if (f)
                    submul_barrett_u16(p, M16, f, B.data() + std::size_t(i) * cols, prow,
                                       col, cols);
            }
        } else {
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                std::uint16_t f = B[std::size_t(i) * cols + col];
                if (f)
                    submul_barrett_u16(p, M16, f, B.data() + std::size_t(i) * cols, prow,
                                       col, cols);
            }
        }
        e.pivot_cols.push_back(col);
        ++e.rank;
    }
    for (std::size_t z = 0; z < B.size(); ++z) M.a[z] = B[z];
    return e;
}

}  // namespace

Echelon row_echelon(const FieldCtx& F, Matrix& M, bool parallel) {
    if (F.prime_small() && M.rows * M.cols >= (std::size_t(1) << 16))
        return eliminate_small_prime(F, M, parallel);
    Echelon e;
    const std::size_t rows = M.rows, cols = M.cols;
    for (std::size_t col = 0; col < cols && e.rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = e.rank; i < rows; ++i)
            if (M.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != e.rank)
            std::swap_ranges(M.row(piv), M.row(piv) + cols, M.row(e.rank));
        row_scale(F, M.row(e.rank), F.inv(M.at(e.rank, col)), col, cols);
        const elt* prow = M.row(e.rank);
        const std::ptrdiff_t lo = std::ptrdiff_t(e.rank) + 1;
        const std::ptrdiff_t hi = std::ptrdiff_t(rows);
        if (parallel && hi - lo >= 32) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                elt f = M.at(std::size_t(i), col);
                if (f) row_submul(F, M.row(std::size_t(i)), prow, f, col, cols);
            }
        } else {
            for (std::ptrdiff_t i = lo; i < hi; ++i) {
                elt f = M.at(std::size_t(i), col);
                if (f) row_submul(F, M.row(std::size_t(i)), prow, f, col, cols);
            }
        }
        e.pivot_cols.push_back(col);
        ++e.rank;
    }
    return e;
}

namespace {

// Kernel vector for one free column of an echelon form with unit pivots:
// back-substitution over pivot rows, visiting only pivot columns and the
// free column itself.
std::vector<elt> kernel_vector(const FieldCtx& F, const Matrix& M, const Echelon& e,
                               std::size_t jf) {
    std::vector<elt> v(M.cols, 0);
    v[jf] = 1;
    for (std::size_t i = e.rank; i-- > 0;) {
        std::size_t pc = e.pivot_cols[i];
        if (pc > jf) continue;  // entry (i, jf) is left of the pivot, hence 0
        elt s = M.at(i, jf);
        for (std::size_t k = i + 1; k < e.rank; ++k) {
            std::size_t pck = e.pivot_cols[k];
            elt vk = v[pck];
            if (vk) s = F.add(s, F.mul(M.at(i, pck), vk));
        }
        v[pc] = F.neg(s);
    }
    return v;
}

}  // namespace

std::vector<std::vector<elt>> nullspace(const FieldCtx& F, Matrix M) {
    Echelon e = row_echelon(F, M, true);
    std::vector<std::vector<elt>> basis;
    basis.reserve(M.cols - e.rank);
    std::size_t next_pivot = 0;
    for (std::size_t j = 0; j < M.cols; ++j) {
        if (next_pivot < e.rank && e.pivot_cols[next_pivot] == j) {
            ++next_pivot;
            continue;
        }
        basis.push_back(kernel_vector(F, M, e, j));
    }
    return basis;
}

std::vector<elt> nullspace_vector(const FieldCtx& F, Matrix M) {
    // The first free column sits within the first rank+1 <= rows+1 columns,
    // the canonical kernel vector for it is supported there, and elimination
    // is column-local, so columns beyond rows+1 never influence the result.
    // Truncating up front saves most of the elimination traffic on wide
    // systems.
    const std::size_t cols = M.cols;
    if (M.cols > M.rows + 1) {
        Matrix T(M.rows, M.rows + 1);
        for (std::size_t i = 0; i < M.rows; ++i)
            std::copy(M.row(i), M.row(i) + T.cols, T.row(i));
        M = std::move(T);
    }
    Echelon e = row_echelon(F, M, true);
    std::size_t next_pivot = 0;
    for (std::size_t j = 0; j < M.cols; ++j) {
        if (next_pivot < e.rank && e.pivot_cols[next_pivot] == j) {
            ++next_pivot;
            continue;
        }
        std::vector<elt> v = kernel_vector(F, M, e, j);
        v.resize(cols, 0);
        return v;
    }
    return {};
}

std::vector<std::vector<elt>> nullspace_serial(const FieldCtx& F, Matrix M) {
    const std::size_t rows = M.rows, cols = M.cols;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (M.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(M.ref(piv, j), M.ref(rank, j));
        elt inv = F.inv(M.at(rank, col));
        for (std::size_t j = col; j < cols; ++j) M.ref(rank, j) = F.mul(inv, M.at(rank, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            elt f = M.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                M.ref(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(rank, j)));
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    // reduced form: kernel vector for free column jf reads off row entries
    std::vector<std::vector<elt>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        if (next_pivot < rank && pivot_cols[next_pivot] == j) {
            ++next_pivot;
            continue;
        }
        std::vector<elt> v(cols, 0);
        v[j] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_cols[i]] = F.neg(M.at(i, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t matrix_rank(const FieldCtx& F, Matrix M) { return row_echelon(F, M, true).rank; }

std::vector<elt> mat_vec(const FieldCtx& F, const Matrix& M, const std::vector<elt>& v) {
    require(v.size() == M.cols, errc::shape_mismatch, "vector length != matrix columns");
    std::vector<elt> out(M.rows, 0);
    for (std::size_t i = 0; i < M.rows; ++i) {
        elt s = 0;
        for (std::size_t j = 0; j < M.cols; ++j) s = F.add(s, F.mul(M.at(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

}  // namespace ppc
