#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppc/code.hpp"
#include "ppc/decode.hpp"
#include "ppc/unipoly.hpp"

namespace ppc {

/// Length-N codeword vector in running-index order v = m*j + i.
struct UnfoldedWord {
    std::vector<elt> coeffs;
};

UnfoldedWord unfold(const CodeMatrix& c);

/// f(l1(x), l2(y)): the message whose codeword is the one-step cyclic shift
/// of f's codeword.
BiPoly shift_polynomial(const PpcCode& C, const BiPoly& f);

/// Generator polynomial of the unfolded code for the default instantiation:
/// (x^(q-1) - 1)^p divided exactly by prod_{j=q-t}^{q-1} (x - gamma^j)^s.
/// deg(g) = N - s*t and g divides x^N - 1.
UniPoly generator_poly(const PpcCode& C);

/// Check polynomial h = prod_{j=q-t}^{q-1} (x - gamma^j)^s, so g*h = x^N - 1.
UniPoly check_polynomial(const PpcCode& C);

/// r-by-N matrix H[i][j] = j^i * beta^j (j taken mod p for the base, as an
/// integer exponent for beta^j). H c^T = 0 iff beta is a root of c(x) of
/// multiplicity >= r. Requires r <= p.
Matrix hasse_parity_matrix(const FieldCtx& F, elt beta, std::size_t r, std::size_t N);

struct AuditClause {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample seed or explanation when failing
};

struct CyclicReport {
    std::vector<AuditClause> clauses;

    bool all_pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

/// Batch audit of the unfolded code's cyclic structure over `trials` random
/// messages: shift identity, generator divisibility, degree identity, and
/// the check-polynomial product and reversal relations.
CyclicReport verify_cyclic_structure(const PpcCode& C, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace ppc
