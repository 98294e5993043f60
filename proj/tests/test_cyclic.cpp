#include <doctest.h>

#include <algorithm>

#include "ppc/cyclic.hpp"
#include "test_util.hpp"

using namespace ppc;
using namespace ppc::testutil;

namespace {

UniPoly x_pow_minus_1(const FieldCtx& F, std::size_t n) {
    UniPoly p = UniPoly::monomial(n);
    p.c[0] = F.neg(1);
    return p;
}

}  // namespace

TEST_SUITE("cyclic") {
    TEST_CASE("unfold") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 2, 2);
        SUBCASE("all ones") {
            UnfoldedWord u = unfold(encode(C, BiPoly::constant(1)));
            CHECK(std::all_of(u.coeffs.begin(), u.coeffs.end(),
                              [](elt v) { return v == 1; }));
        }
        SUBCASE("f = x gives v mod 5") {
            UnfoldedWord u = unfold(encode(C, BiPoly::monomial(1, 0)));
            for (std::size_t v = 0; v < C.N(); ++v) CHECK(u.coeffs[v] == elt(v % 5));
        }
        SUBCASE("f = y gives 2^v") {
            UnfoldedWord u = unfold(encode(C, BiPoly::monomial(0, 1)));
            for (std::size_t v = 0; v < C.N(); ++v) CHECK(u.coeffs[v] == F->pow(2, v));
        }
    }

    TEST_CASE("shift polynomial") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 2, 2);
        CHECK(bi_equal(shift_polynomial(C, BiPoly::constant(1)), BiPoly::constant(1)));
        // l2 = 2x: y -> 2y
        BiPoly sy = shift_polynomial(C, BiPoly::monomial(0, 1));
        CHECK(sy.at(0, 1) == 2);
        CHECK(sy.deg_x() == 0);
        // l1 = x+1: x -> x+1
        BiPoly sx = shift_polynomial(C, BiPoly::monomial(1, 0));
        CHECK(sx.at(1, 0) == 1);
        CHECK(sx.at(0, 0) == 1);
    }

    TEST_CASE("generator polynomial of the GF(3) repetition-like code") {
        Field F = field_create(3, 1);
        PpcCode C = ppc_default(F, 1, 1);
        UniPoly g = generator_poly(C);
        CHECK(g.deg() == 5);  // N - st = 6 - 1
        // (x^6 - 1)/(x - 1) = 1 + x + ... + x^5
        UniPoly expect(std::vector<elt>(6, 1));
        CHECK(g == uni_divmod(*F, x_pow_minus_1(*F, 6),
                              UniPoly(std::vector<elt>{2, 1}))
                       .quot);
        CHECK(g == expect);
    }

    TEST_CASE("generator polynomial over GF(9)") {
        Field F = field_create(3, 2);
        PpcCode C = ppc_default(F, 2, 3);
        UniPoly g = generator_poly(C);
        CHECK(g.deg() == 18);  // 24 - 6
        CHECK(uni_divmod(*F, x_pow_minus_1(*F, 24), g).rem.is_zero());
        CHECK(uni_mul(*F, g, check_polynomial(C)) == x_pow_minus_1(*F, 24));
    }

    TEST_CASE("generator requires the default instantiation") {
        Field F = field_create(11, 1);
        PpcCode other(F, AffineMap(F, 2, 0), AffineMap(F, 1, 1), 1, 0, 2, 3);
        CHECK(throws_with(errc::non_default_instantiation, [&] { generator_poly(other); }));
    }

    TEST_CASE("x^N - 1 = (x^(q-1) - 1)^p in characteristic p") {
        for (auto F : {field_create(3, 1), field_create(5, 1), field_create(3, 2)}) {
            UniPoly base = x_pow_minus_1(*F, F->q() - 1);
            CHECK(uni_pow(*F, base, F->p()) == x_pow_minus_1(*F, F->p() * (F->q() - 1)));
        }
    }

    TEST_CASE("Hasse parity matrix worked examples") {
        Field F = field_create(5, 1);
        SUBCASE("(x-1)^2 has 1 as a double root") {
            std::vector<elt> c{1, 3, 1};  // x^2 - 2x + 1
            Matrix H = hasse_parity_matrix(*F, 1, 2, 3);
            // row 0: 1+3+1 = 0; row 1: 0*1 + 1*3 + 2*1 = 0
            auto hc = mat_vec(*F, H, c);
            CHECK(hc == std::vector<elt>{0, 0});
        }
        SUBCASE("x - beta has multiplicity exactly 1") {
            elt beta = 3;
            std::vector<elt> c{F->neg(beta), 1, 0};
            Matrix H = hasse_parity_matrix(*F, beta, 2, 3);
            auto hc = mat_vec(*F, H, c);
            CHECK(hc[0] == 0);
            CHECK(hc[1] != 0);
        }
        SUBCASE("zero vector satisfies every parity") {
            Matrix H = hasse_parity_matrix(*F, 2, 3, 6);
            CHECK(mat_vec(*F, H, std::vector<elt>(6, 0)) == std::vector<elt>(3, 0));
        }
        SUBCASE("multiplicity above p is rejected") {
            CHECK(throws_with(errc::multiplicity_exceeds_characteristic,
                              [&] { hasse_parity_matrix(*F, 1, 6, 4); }));
        }
    }

    TEST_CASE("Hasse matrix iff division oracle, 500 instances per field") {
        for (auto F : {field_create(5, 1), field_create(3, 2)}) {
            SplitMix64 g(99);
            const std::size_t N = 14;
            for (int k = 0; k < 500; ++k) {
                elt beta = rand_nonzero(g, *F);
                std::size_t r = 1 + g.below(F->p());
                // half the instances get a planted (x-beta)^j factor
                UniPoly c = rand_unipoly(g, *F, 8);
                if (g.below(2)) {
                    UniPoly lin(std::vector<elt>{F->neg(beta), 1});
                    for (std::uint64_t j = g.below(r + 1); j-- > 0;)
                        c = uni_mul(*F, c, lin);
                }
                if (c.deg() >= int(N)) continue;
                std::vector<elt> vec(N, 0);
                std::copy(c.c.begin(), c.c.end(), vec.begin());
                Matrix H = hasse_parity_matrix(*F, beta, r, N);
                auto hc = mat_vec(*F, H, vec);
                bool parity_zero =
                    std::all_of(hc.begin(), hc.end(), [](elt v) { return v == 0; });
                bool divisible = c.is_zero() || root_multiplicity(*F, c, beta) >= r;
                CHECK(parity_zero == divisible);
            }
        }
    }

    TEST_CASE("cyclic structure audit passes") {
        SUBCASE("GF(3), s = t = 1") {
            PpcCode C = ppc_default(field_create(3, 1), 1, 1);
            CyclicReport rep = verify_cyclic_structure(C, 20, 5);
            for (const auto& cl : rep.clauses) {
                INFO(cl.name, " ", cl.detail);
                CHECK(cl.pass);
            }
        }
        SUBCASE("GF(9), s = 2, t = 3, 100 trials") {
            PpcCode C = ppc_default(field_create(3, 2), 2, 3);
            CyclicReport rep = verify_cyclic_structure(C, 100, 6);
            for (const auto& cl : rep.clauses) {
                INFO(cl.name, " ", cl.detail);
                CHECK(cl.pass);
            }
        }
    }

    TEST_CASE("a corrupted generator is caught by the divisibility clause") {
        Field F = field_create(3, 2);
        PpcCode C = ppc_default(F, 2, 3);
        UniPoly g = generator_poly(C);
        // adding one more root factor shrinks the code: random codewords
        // are no longer divisible
        elt gamma = C.l2().a();
        UniPoly bad = uni_mul(*F, g, UniPoly(std::vector<elt>{F->neg(F->pow(gamma, 2)), 1}));
        SplitMix64 rng(7);
        bool some_failure = false;
        for (int k = 0; k < 50; ++k) {
            BiPoly f = rand_bipoly(rng, *F, C.s(), C.t());
            UniPoly c(unfold(encode(C, f)).coeffs);
            if (!uni_divmod(*F, c, bad).rem.is_zero()) some_failure = true;
        }
        CHECK(some_failure);
    }

    TEST_CASE("cyclic shifts of g span exactly the unfolded code") {
        SUBCASE("GF(3), s = t = 1: all 3 codewords") {
            Field F = field_create(3, 1);
            PpcCode C = ppc_default(F, 1, 1);
            UniPoly g = generator_poly(C);
            Matrix G(1, C.N());
            std::copy(g.c.begin(), g.c.end(), G.row(0));
            CHECK(matrix_rank(*F, G) == 1);
            for (elt v = 0; v < 3; ++v) {
                UnfoldedWord u = unfold(encode(C, BiPoly::constant(v)));
                Matrix M(2, C.N());
                std::copy(g.c.begin(), g.c.end(), M.row(0));
                std::copy(u.coeffs.begin(), u.coeffs.end(), M.row(1));
                CHECK(matrix_rank(*F, M) == 1);
            }
        }
        SUBCASE("GF(9), s = 2, t = 3: rank s*t and full membership") {
            Field F = field_create(3, 2);
            PpcCode C = ppc_default(F, 2, 3);
            UniPoly g = generator_poly(C);
            const std::size_t st = 6, N = C.N();
            Matrix G(st, N);
            for (std::size_t k = 0; k < st; ++k)
                for (std::size_t i = 0; i < g.c.size(); ++i) G.ref(k, k + i) = g.c[i];
            Matrix R = G;
            Echelon e = row_echelon(*F, R, false);
            REQUIRE(e.rank == st);
            // reduce every unfolded codeword against the echelon rows
            std::uint64_t total = message_count(*F, 2, 3);
            std::vector<elt> vec(N);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                BiPoly f = message_from_index(*F, 2, 3, idx);
                UnfoldedWord u = unfold(encode(C, f));
                std::copy(u.coeffs.begin(), u.coeffs.end(), vec.begin());
                for (std::size_t k = 0; k < st; ++k) {
                    elt v = vec[e.pivot_cols[k]];
                    if (v) row_submul(*F, vec.data(), R.row(k), v, 0, N);
                }
                bool zero = std::all_of(vec.begin(), vec.end(),
                                        [](elt x) { return x == 0; });
                CHECK(zero);
                if (!zero) break;
            }
        }
    }
}
