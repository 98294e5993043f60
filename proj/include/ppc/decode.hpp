#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppc/bipoly.hpp"
#include "ppc/code.hpp"

namespace ppc {

/// Interpolation polynomial Q = sum_i p_i(x, y) z_i with window w:
/// deg_x(p_i) <= m-s-w and deg_y(p_i) <= D-t, not all parts zero.
struct InterpPoly {
    std::size_t w = 0;
    std::size_t D = 0;
    std::vector<BiPoly> parts;
};

/// y-degree budget D = floor(nm / (w(m-s-w+1))) + t.
std::size_t degree_budget(const PpcCode& C, std::size_t w);

struct ThresholdInfo {
    std::size_t value = 0;  // ceil(nm / (w(m-s-w+1))) + t
    bool vacuous = false;   // value > n: the guarantee covers no received word
    std::uint64_t raw_num = 0, raw_den = 0;  // the exact rational bound
};

/// Minimum column agreement that forces a message into the candidate
/// subspace. Integer agreements make the ceiling of the real bound the tight
/// admissible threshold.
ThresholdInfo agreement_threshold(const PpcCode& C, std::size_t w);

/// Fits a nonzero Q vanishing on all n(m-w+1) constraint tuples
/// (l1^(jm+i)(alpha), l2^(jm+i)(beta), r_ij, ..., r_(i+w-1)j). Returns the
/// first canonical nullspace vector of the constraint system. Requires
/// s < m and 1 <= w <= m-s.
InterpPoly interpolate(const PpcCode& C, const CodeMatrix& r, std::size_t w);

/// Re-evaluates Q on every constraint tuple, independently of the solver.
bool verify_interpolation(const PpcCode& C, const InterpPoly& Q, const CodeMatrix& r);

/// Divides out the largest common powers of y and of y^(q-1) - gamma, the
/// irreducible factors of y^q - l2(y) for l2 = gamma*x with gamma a
/// generator. Only that instantiation is supported.
InterpPoly reduce_coprime(const PpcCode& C, InterpPoly Q);

/// gcd(Q, y^q - l2(y)) = 1, i.e. neither irreducible factor divides all
/// parts. Same instantiation requirement as reduce_coprime.
bool coprime_with_orbit_poly(const PpcCode& C, const InterpPoly& Q);

/// Q_f(x, y) = sum_i p_i(x, y) f(l1^i(x), l2^i(y)), the bivariate polynomial
/// that vanishes identically when f's codeword is close to r.
BiPoly q_hat(const PpcCode& C, const InterpPoly& Q, const BiPoly& f);

/// Basis of {f : deg_x < s, deg_y < t, q_hat(C, Q, f) == 0}, via the F_q
/// coefficient system over the s*t unknowns (one equation per monomial with
/// x-degree < m-w and y-degree < D). Q must be reduced; the dimension bound
/// |basis| <= w-1 is a theorem and its violation throws
/// DimensionBoundViolated.
std::vector<BiPoly> candidate_subspace(const PpcCode& C, const InterpPoly& Q);

/// All f in span(basis) whose encoding agrees with r on >= threshold
/// columns, sorted by coefficient serialization. Throws
/// SubspaceTooLargeToEnumerate when q^|basis| exceeds the cap.
std::vector<BiPoly> filter_list(const PpcCode& C, const std::vector<BiPoly>& basis,
                                const CodeMatrix& r, std::size_t threshold,
                                std::uint64_t cap = 1000000);

/// Membership of f in span(basis), by rank comparison.
bool in_span(const PpcCode& C, const std::vector<BiPoly>& basis, const BiPoly& f);

struct DecodeStats {
    std::size_t w = 0, D = 0;
    std::size_t constraints = 0, variables = 0;
    std::size_t dimension = 0;
    std::uint64_t threshold_num = 0, threshold_den = 0;
    bool threshold_vacuous = false;
    bool interpolation_verified = false;
    bool coprime_after_reduction = false;
    bool enumerated = false;
    double t_interpolate = 0, t_reduce = 0, t_subspace = 0, t_filter = 0;  // seconds
};

struct DecodeOutput {
    std::vector<BiPoly> basis;  // candidate subspace W, dimension <= w-1
    std::vector<BiPoly> list;   // agreement-filtered codeword polynomials
    std::size_t threshold = 0;
    DecodeStats stats;
};

/// Full pipeline: interpolate, reduce, extract the candidate subspace,
/// filter by agreement. Threshold defaults to agreement_threshold(C, w).
/// When q^dim exceeds `cap` the list is left empty and stats.enumerated is
/// false; the subspace basis is still returned.
DecodeOutput list_decode(const PpcCode& C, const CodeMatrix& r, std::size_t w,
                         std::optional<std::size_t> threshold = std::nullopt,
                         std::uint64_t cap = 1000000);

}  // namespace ppc
