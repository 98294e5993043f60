#pragma once

#include <cstddef>
#include <vector>

#include "ppc/field.hpp"

namespace ppc {

/// Dense row-major matrix over a FieldCtx.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<elt> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    elt* row(std::size_t i) noexcept { return a.data() + i * cols; }
    const elt* row(std::size_t i) const noexcept { return a.data() + i * cols; }
    elt at(std::size_t i, std::size_t j) const noexcept { return a[i * cols + j]; }
    elt& ref(std::size_t i, std::size_t j) noexcept { return a[i * cols + j]; }
};

/// dst[j] -= f*src[j] for j in [from, len). Exact arithmetic, so concurrent
/// updates of distinct rows reproduce the sequential result bit for bit.
void row_submul(const FieldCtx& F, elt* dst, const elt* src, elt f, std::size_t from,
                std::size_t len);

/// dst[j] *= f for j in [from, len).
void row_scale(const FieldCtx& F, elt* dst, elt f, std::size_t from, std::size_t len);

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // ascending
};

/// In-place forward elimination to row echelon form with unit pivots.
/// Deterministic pivot order: leftmost column, then topmost row. Row updates
/// below the pivot run in parallel when `parallel` is set; the result is
/// identical either way.
Echelon row_echelon(const FieldCtx& F, Matrix& M, bool parallel = true);

/// Canonical basis of the right kernel {v : M v^T = 0}: one vector per free
/// column (ascending), with 1 at its free column and 0 at the others, i.e.
/// the reduced-echelon kernel basis. Empty result means trivial kernel.
std::vector<std::vector<elt>> nullspace(const FieldCtx& F, Matrix M);

/// First canonical kernel vector, or empty if the kernel is trivial.
/// Avoids materializing the full basis of wide systems.
std::vector<elt> nullspace_vector(const FieldCtx& F, Matrix M);

/// Textbook Gauss-Jordan reference, element-by-element field ops and no
/// OpenMP. Kept for validating the parallel kernels; must agree with
/// nullspace() exactly.
std::vector<std::vector<elt>> nullspace_serial(const FieldCtx& F, Matrix M);

std::size_t matrix_rank(const FieldCtx& F, Matrix M);

std::vector<elt> mat_vec(const FieldCtx& F, const Matrix& M, const std::vector<elt>& v);

}  // namespace ppc
