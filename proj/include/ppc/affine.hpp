#pragma once

#include <string>
#include <vector>

#include "ppc/field.hpp"
#include "ppc/unipoly.hpp"

namespace ppc {

/// An element a*x+b of the affine group GA(q), a != 0. Composition is the
/// group law; powers use the closed form a^i x + b (a^i - 1)/(a - 1).
class AffineMap {
  public:
    AffineMap(Field F, elt a, elt b) : F_(std::move(F)), a_(a), b_(b) {
        require(a_ != 0, errc::bad_input, "affine map needs a != 0");
        require(a_ < F_->q() && b_ < F_->q(), errc::bad_input, "coefficient out of range");
    }

    static AffineMap identity(Field F) { return AffineMap(std::move(F), 1, 0); }

    const Field& field() const noexcept { return F_; }
    elt a() const noexcept { return a_; }
    elt b() const noexcept { return b_; }

    elt apply(elt z) const { return F_->add(F_->mul(a_, z), b_); }

    bool is_identity() const noexcept { return a_ == 1 && b_ == 0; }

    bool operator==(const AffineMap& o) const {
        return F_->same(*o.F_) && a_ == o.a_ && b_ == o.b_;
    }

  private:
    Field F_;
    elt a_, b_;
};

/// outer(inner(x)) = a2 a1 x + a2 b1 + b2. Throws FieldMismatch.
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// (ax+b)^-1 = a^-1 x - a^-1 b.
AffineMap affine_inverse(const AffineMap& l);

/// l^i, with l^0 = x.
AffineMap affine_power(const AffineMap& l, std::uint64_t i);

/// ord(a) if a != 1; p if a = 1, b != 0; 1 for the identity.
std::uint64_t affine_order(const AffineMap& l);

/// [z, l(z), ..., l^(len-1)(z)].
std::vector<elt> orbit(const AffineMap& l, elt z, std::size_t len);

bool is_fixed_point(const AffineMap& l, elt z);

/// All fixed points of l in F_q.
std::vector<elt> fixed_points(const AffineMap& l);

/// Textual form "a*x+b" with serialized elements, used in config files.
std::string affine_format(const AffineMap& l);
AffineMap affine_parse(Field F, const std::string& text);

/// Degrees of the irreducible factors of h(x) = x^q - l(x), as
/// (degree, count) pairs. Every degree is 1 or ord(l); the linear factors'
/// roots are exactly the fixed points of l.
std::vector<std::pair<int, int>> splitting_degree_profile(const AffineMap& l);

}  // namespace ppc
