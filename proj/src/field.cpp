#include "ppc/field.hpp"

#include <algorithm>
#include <numeric>

namespace ppc {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::no_modulus_found: return "NoModulusFound";
        case errc::zero_element: return "ZeroElement";
        case errc::division_by_zero_poly: return "DivisionByZeroPoly";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::degrees_out_of_range: return "DegreesOutOfRange";
        case errc::non_coprime_orders: return "NonCoprimeOrders";
        case errc::fixed_point_base: return "FixedPointBase";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::too_large_to_enumerate: return "TooLargeToEnumerate";
        case errc::window_out_of_range: return "WindowOutOfRange";
        case errc::internal_no_solution: return "InternalNoSolution";
        case errc::unsupported_affine_map: return "UnsupportedAffineMap";
        case errc::dimension_bound_violated: return "DimensionBoundViolated";
        case errc::subspace_too_large_to_enumerate: return "SubspaceTooLargeToEnumerate";
        case errc::non_default_instantiation: return "NonDefaultInstantiation";
        case errc::inexact_division: return "InexactDivision";
        case errc::multiplicity_exceeds_characteristic: return "MultiplicityExceedsCharacteristic";
        case errc::too_many_errors: return "TooManyErrors";
        case errc::infeasible_rate: return "InfeasibleRate";
        case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> prime_factors(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// Polynomial helpers over GF(p) used only during context construction
// (irreducibility of the modulus). Little-endian uint coefficient vectors.
using pf = std::vector<elt>;

void pf_trim(pf& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

pf pf_mod(pf a, const pf& f, std::uint32_t p) {
    // f monic
    pf_trim(a);
    while (a.size() >= f.size()) {
        elt c = a.back();
        std::size_t shift = a.size() - f.size();
        if (c != 0)
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::uint64_t sub = (std::uint64_t(c) * f[i]) % p;
                elt& dst = a[shift + i];
                dst = elt((dst + p - sub) % p);
            }
        a.pop_back();
        pf_trim(a);
    }
    return a;
}

pf pf_mulmod(const pf& a, const pf& b, const pf& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    pf c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = elt((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return pf_mod(std::move(c), f, p);
}

pf pf_powmod(pf base, std::uint64_t e, const pf& f, std::uint32_t p) {
    pf acc{1};
    base = pf_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) acc = pf_mulmod(acc, base, f, p);
        base = pf_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

pf pf_gcd(pf a, pf b, std::uint32_t p) {
    pf_trim(a);
    pf_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        elt lead = b.back();
        if (lead != 1) {
            // lead^-1 via Fermat
            elt li = 1, base = lead;
            std::uint32_t e = p - 2;
            while (e) {
                if (e & 1) li = elt((std::uint64_t(li) * base) % p);
                base = elt((std::uint64_t(base) * base) % p);
                e >>= 1;
            }
            for (auto& c : b) c = elt((std::uint64_t(c) * li) % p);
        }
        a = pf_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test: f (monic, degree r) is irreducible over GF(p) iff
// x^(p^r) == x mod f and gcd(x^(p^(r/d)) - x, f) = 1 for every prime d | r.
bool pf_irreducible(const pf& f, std::uint32_t p) {
    std::size_t r = f.size() - 1;
    if (r == 0) return false;
    if (r == 1) return true;
    auto frob_power = [&](std::uint32_t k) {
        pf t{0, 1};  // x
        for (std::uint32_t j = 0; j < k; ++j) t = pf_powmod(std::move(t), p, f, p);
        return t;
    };
    if (frob_power(std::uint32_t(r)) != pf{0, 1}) return false;
    for (auto [d, e] : prime_factors(r)) {
        (void)e;
        pf t = frob_power(std::uint32_t(r / d));
        // t - x
        if (t.size() < 2) t.resize(2, 0);
        t[1] = elt((t[1] + p - 1) % p);
        pf_trim(t);
        pf g = pf_gcd(t, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace

elt FieldCtx::add_generic(elt a, elt b) const {
    elt out = 0, pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        elt s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * pw;
        pw *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

elt FieldCtx::neg_generic(elt a) const {
    elt out = 0, pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        elt d = a % p_;
        out += (d ? p_ - d : 0) * pw;
        pw *= p_;
        a /= p_;
    }
    return out;
}

elt FieldCtx::mul_generic(elt a, elt b) const {
    // schoolbook product of coordinate vectors, reduced by the modulus
    std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
    std::vector<elt> da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    }
    for (std::size_t k = prod.size(); k-- > r_;) {
        std::uint64_t c = prod[k] % p_;
        if (c == 0) continue;
        // x^k = x^(k-r) * (x^r mod modulus)
        for (std::uint32_t i = 0; i < r_; ++i)
            prod[k - r_ + i] += c * ((p_ - modulus_[i]) % p_);
    }
    elt out = 0, pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += elt(prod[i] % p_) * pw;
        pw *= p_;
    }
    return out;
}

void FieldCtx::build_tables() {
    if (q_ <= log_table_max_q && q_ > 2) {
        log_.assign(q_, 0);
        exp_.assign(std::size_t(2) * (q_ - 1), 0);
        elt x = 1;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            exp_[k] = x;
            exp_[k + q_ - 1] = x;
            log_[x] = k;
            x = mul_generic(x, primitive_);
        }
    }
    if (r_ > 1 && q_ <= full_table_max_q) {
        add_.assign(std::size_t(q_) * q_, 0);
        mul_.assign(std::size_t(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (elt a = 0; a < q_; ++a) {
            neg_[a] = neg_generic(a);
            for (elt b = 0; b < q_; ++b) {
                add_[std::size_t(a) * q_ + b] = add_generic(a, b);
                mul_[std::size_t(a) * q_ + b] = mul_generic(a, b);
            }
        }
        for (elt a = 1; a < q_; ++a) {
            elt acc = 1, base = a;
            std::uint32_t e = q_ - 2;
            while (e) {
                if (e & 1) acc = mul_generic(acc, base);
                base = mul_generic(base, base);
                e >>= 1;
            }
            inv_[a] = acc;
        }
    }
}

Field field_create(std::uint32_t p, std::uint32_t r, const std::vector<elt>* modulus) {
    require(is_prime_u64(p), errc::not_prime, std::to_string(p) + " is not prime");
    require(r >= 1, errc::bad_input, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        require(q <= (1u << 30), errc::bad_input, "field too large (q > 2^30)");
    }

    auto F = std::shared_ptr<FieldCtx>(new FieldCtx());
    F->p_ = p;
    F->r_ = r;
    F->q_ = std::uint32_t(q);
    if (r == 1 && p <= 251) F->barrett_ = 65536 / p;

    if (r > 1) {
        if (modulus) {
            require(modulus->size() == r + 1 && modulus->back() == 1, errc::bad_input,
                    "modulus must be monic of degree r");
            for (elt c : *modulus)
                require(c < p, errc::bad_input, "modulus coefficient out of range");
            require(pf_irreducible(*modulus, p), errc::reducible_modulus,
                    "modulus is reducible over GF(p)");
            F->modulus_ = *modulus;
        } else {
            // first irreducible in lexicographic coefficient order:
            // x^r + c_{r-1} x^{r-1} + ... + c_0 with (c_0,...,c_{r-1}) the
            // base-p digits of k = 0, 1, 2, ...
            bool found = false;
            for (std::uint64_t k = 0; k < q && !found; ++k) {
                pf f(r + 1, 0);
                std::uint64_t kk = k;
                for (std::uint32_t i = 0; i < r; ++i) {
                    f[i] = elt(kk % p);
                    kk /= p;
                }
                f[r] = 1;
                if (pf_irreducible(f, p)) {
                    F->modulus_ = std::move(f);
                    found = true;
                }
            }
            require(found, errc::no_modulus_found, "no irreducible modulus found");
        }
    } else if (modulus) {
        require(modulus->size() == 2 && modulus->back() == 1, errc::bad_input,
                "modulus for r = 1 must be monic linear");
    }

    // least primitive element
    if (F->q_ == 2) {
        F->primitive_ = 1;
    } else {
        auto fac = prime_factors(F->q_ - 1);
        elt prim = 0;
        for (elt v = 2; v < F->q_; ++v) {
            bool ok = true;
            for (auto [d, e] : fac) {
                (void)e;
                elt acc = 1, base = v;
                std::uint64_t exp = (F->q_ - 1) / d;
                while (exp) {
                    if (exp & 1) acc = F->mul_generic(acc, base);
                    base = F->mul_generic(base, base);
                    exp >>= 1;
                }
                if (acc == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                prim = v;
                break;
            }
        }
        require(prim != 0, errc::no_modulus_found, "no primitive element (arithmetic bug)");
        F->primitive_ = prim;
    }

    F->build_tables();
    return F;
}

std::uint64_t element_order(const FieldCtx& F, elt a) {
    require(a != 0, errc::zero_element, "order of zero");
    std::uint64_t o = F.q() - 1;
    for (auto [d, e] : prime_factors(F.q() - 1)) {
        for (int i = 0; i < e; ++i) {
            if (o % d == 0 && F.pow(a, o / d) == 1)
                o /= d;
            else
                break;
        }
    }
    return o;
}

}  // namespace ppc
