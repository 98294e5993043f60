#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ppc/affine.hpp"
#include "ppc/bipoly.hpp"
#include "ppc/field.hpp"
#include "ppc/linalg.hpp"

namespace ppc {

/// m-by-n array of symbols; column j is the code's j-th (folded) coordinate.
struct CodeMatrix {
    std::size_t m = 0, n = 0;
    std::vector<elt> e;

    CodeMatrix() = default;
    CodeMatrix(std::size_t m_, std::size_t n_) : m(m_), n(n_), e(m_ * n_, 0) {}

    elt at(std::size_t i, std::size_t j) const noexcept { return e[i * n + j]; }
    elt& ref(std::size_t i, std::size_t j) noexcept { return e[i * n + j]; }

    bool operator==(const CodeMatrix& o) const noexcept {
        return m == o.m && n == o.n && e == o.e;
    }
};

/// A permuted-product-code instance: two affine maps of coprime orders m, n,
/// non-fixed base points alpha, beta, and degree bounds s <= m, t <= n.
/// Codewords are the evaluations of f with deg_x < s, deg_y < t along the
/// joint orbit (l1^v(alpha), l2^v(beta)), v = 0..mn-1, folded column-wise
/// into m-by-n matrices. Immutable and shareable once built.
class PpcCode {
  public:
    PpcCode(Field F, const AffineMap& l1, const AffineMap& l2, elt alpha, elt beta,
            std::size_t s, std::size_t t);

    const Field& field() const noexcept { return F_; }
    const FieldCtx& ctx() const noexcept { return *F_; }
    const AffineMap& l1() const noexcept { return l1_; }
    const AffineMap& l2() const noexcept { return l2_; }
    /// l2^m, the row-code shift map of order n.
    const AffineMap& l2_folded() const noexcept { return l2m_; }
    elt alpha() const noexcept { return alpha_; }
    elt beta() const noexcept { return beta_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t N() const noexcept { return m_ * n_; }
    /// Representative of m^-1 mod n in [0, n).
    std::size_t m_inverse() const noexcept { return minv_; }

    elt eval_x(std::size_t v) const noexcept { return xs_[v]; }
    elt eval_y(std::size_t v) const noexcept { return ys_[v]; }

    /// Column evaluation set A = {l1^i(alpha)} of size m.
    const std::vector<elt>& A() const noexcept { return A_; }
    /// Row evaluation set B = {(l2^m)^j(beta)} of size n.
    const std::vector<elt>& B() const noexcept { return B_; }

    double rate() const noexcept { return double(s_ * t_) / double(m_ * n_); }

    /// l1 = x+1, l2 = gamma*x with gamma a generator, alpha = 0, beta = 1.
    bool is_default_instantiation() const noexcept { return default_; }

  private:
    Field F_;
    AffineMap l1_, l2_, l2m_;
    elt alpha_, beta_;
    std::size_t m_, n_, s_, t_, minv_;
    std::vector<elt> xs_, ys_;  // eval_table, index v = m*j + i
    std::vector<elt> A_, B_;
    bool default_ = false;
};

/// The length-maximizing instantiation l1 = x+1, l2 = gamma*x, alpha = 0,
/// beta = 1, giving m = p and n = q-1.
PpcCode ppc_default(Field F, std::size_t s, std::size_t t);

/// Entry (i, j) = f(l1^(jm+i)(alpha), l2^(jm+i)(beta)).
CodeMatrix encode(const PpcCode& C, const BiPoly& f);

/// Same codeword via the permuted-tensor route: evaluate f on A x B, then
/// shift row i left by i*m^-1 mod n. Must equal encode().
CodeMatrix encode_via_tensor(const PpcCode& C, const BiPoly& f);

/// True iff `row` is the evaluation on B of a polynomial of degree < t
/// (interpolate on the first t points, re-evaluate on the rest).
bool row_in_rs(const PpcCode& C, const std::vector<elt>& row);

/// Number of identical columns.
std::size_t column_agreement(const CodeMatrix& a, const CodeMatrix& b);

struct DistanceResult {
    std::size_t column_distance = 0;    // minimum nonzero-column count
    std::size_t unfolded_distance = 0;  // minimum nonzero-symbol count
};

/// Exact minimum distances by enumerating all q^(st)-1 nonzero codewords.
/// Throws TooLargeToEnumerate above `cap` messages.
DistanceResult min_distance_exhaustive(const PpcCode& C, std::uint64_t cap = 1000000);

/// Single-loop reference for the OpenMP scan above.
DistanceResult min_distance_exhaustive_serial(const PpcCode& C, std::uint64_t cap = 1000000);

/// N-by-(s*t) table with row v = [x_v^a * y_v^b], column index a*t + b.
/// Shared by the exhaustive scans so codeword entries are dot products.
Matrix monomial_table(const PpcCode& C);

/// Message with serialization index `idx`: row-major coefficient digits of
/// idx in base q, most significant first.
BiPoly message_from_index(const FieldCtx& F, std::size_t s, std::size_t t, std::uint64_t idx);

/// q^(st) clamped to 2^63, the number of messages.
std::uint64_t message_count(const FieldCtx& F, std::size_t s, std::size_t t);

}  // namespace ppc
