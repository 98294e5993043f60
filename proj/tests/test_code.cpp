#include <doctest.h>

#include <set>

#include "ppc/code.hpp"
#include "test_util.hpp"

using namespace ppc;
using namespace ppc::testutil;

TEST_SUITE("code") {
    TEST_CASE("default instantiation parameters") {
        Field F5 = field_create(5, 1);
        PpcCode C = ppc_default(F5, 2, 2);
        CHECK(C.m() == 5);
        CHECK(C.n() == 4);
        CHECK(C.N() == 20);
        CHECK(C.rate() == doctest::Approx(0.2));
        CHECK(C.m_inverse() == 1);  // 5 = 1 mod 4
        CHECK(C.is_default_instantiation());

        Field F9 = field_create(3, 2, std::vector<elt>{1, 0, 1});
        PpcCode C9 = ppc_default(F9, 2, 3);
        CHECK(C9.m() == 3);
        CHECK(C9.n() == 8);
        CHECK(C9.N() == 24);
        CHECK(C9.m_inverse() == 3);  // 3*3 = 9 = 1 mod 8

        CHECK(throws_with(errc::degrees_out_of_range, [&] { ppc_default(F5, 6, 2); }));
        CHECK(throws_with(errc::degrees_out_of_range, [&] { ppc_default(F5, 2, 5); }));
        CHECK(throws_with(errc::degrees_out_of_range, [&] { ppc_default(F5, 0, 2); }));
    }

    TEST_CASE("custom constructor validates the proposition-level invariants") {
        Field F7 = field_create(7, 1);
        // ord(3) = ord(5) = 6 over GF(7): not coprime
        CHECK(throws_with(errc::non_coprime_orders, [&] {
            PpcCode(F7, AffineMap(F7, 3, 0), AffineMap(F7, 5, 0), 1, 1, 2, 2);
        }));
        Field F5 = field_create(5, 1);
        // alpha = 0 is fixed by 2x
        CHECK(throws_with(errc::fixed_point_base, [&] {
            PpcCode(F5, AffineMap(F5, 2, 0), AffineMap(F5, 1, 1), 0, 1, 2, 2);
        }));
    }

    TEST_CASE("encode worked examples over GF(5)") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 2, 2);
        SUBCASE("constant message") {
            CodeMatrix cw = encode(C, BiPoly::constant(1));
            for (elt v : cw.e) CHECK(v == 1);
        }
        SUBCASE("f = x: column (0,1,2,3,4)") {
            CodeMatrix cw = encode(C, BiPoly::monomial(1, 0));
            for (std::size_t j = 0; j < C.n(); ++j)
                for (std::size_t i = 0; i < C.m(); ++i) CHECK(cw.at(i, j) == elt(i));
        }
        SUBCASE("f = y: entry (i,j) = 2^(i+j)") {
            CodeMatrix cw = encode(C, BiPoly::monomial(0, 1));
            for (std::size_t j = 0; j < C.n(); ++j)
                for (std::size_t i = 0; i < C.m(); ++i)
                    CHECK(cw.at(i, j) == F->pow(2, i + j));
            CHECK(cw.at(0, 0) == 1);
            CHECK(cw.at(1, 0) == 2);
            CHECK(cw.at(2, 0) == 4);
            CHECK(cw.at(3, 0) == 3);
            CHECK(cw.at(4, 0) == 1);
        }
        SUBCASE("degree too large") {
            CHECK(throws_with(errc::degree_too_large,
                              [&] { encode(C, BiPoly::monomial(2, 0)); }));
        }
    }

    TEST_CASE("tensor route equals direct encoding") {
        SUBCASE("hand-checked GF(5) cases") {
            Field F = field_create(5, 1);
            PpcCode C = ppc_default(F, 2, 2);
            BiPoly y = BiPoly::monomial(0, 1);
            CHECK(encode_via_tensor(C, y) == encode(C, y));
            BiPoly one = BiPoly::constant(1);
            CHECK(encode_via_tensor(C, one) == encode(C, one));
        }
        SUBCASE("random messages over GF(5), GF(9), GF(11), GF(8)") {
            struct Inst {
                Field F;
                std::size_t s, t;
            };
            std::vector<Inst> insts{{field_create(5, 1), 2, 2},
                                    {field_create(3, 2), 2, 3},
                                    {field_create(11, 1), 2, 3},
                                    {field_create(2, 3), 2, 4}};
            for (const auto& inst : insts) {
                PpcCode C = ppc_default(inst.F, inst.s, inst.t);
                SplitMix64 g(17);
                for (int k = 0; k < 50; ++k) {
                    BiPoly f = rand_bipoly(g, *inst.F, inst.s, inst.t);
                    CHECK(encode_via_tensor(C, f) == encode(C, f));
                }
            }
        }
    }

    TEST_CASE("encoding is linear") {
        Field F = field_create(3, 2);
        PpcCode C = ppc_default(F, 2, 3);
        SplitMix64 g(5);
        for (int k = 0; k < 30; ++k) {
            BiPoly f = rand_bipoly(g, *F, 2, 3), h = rand_bipoly(g, *F, 2, 3);
            elt c = rand_elt(g, *F);
            CodeMatrix ef = encode(C, f), eh = encode(C, h);
            CodeMatrix sum = encode(C, bi_add(*F, f, h));
            CodeMatrix scl = encode(C, bi_scale(*F, f, c));
            for (std::size_t z = 0; z < sum.e.size(); ++z) {
                CHECK(sum.e[z] == F->add(ef.e[z], eh.e[z]));
                CHECK(scl.e[z] == F->mul(c, ef.e[z]));
            }
        }
    }

    TEST_CASE("eval table covers A x B exactly once") {
        for (auto F : {field_create(5, 1), field_create(3, 2), field_create(11, 1),
                       field_create(2, 3)}) {
            PpcCode C = ppc_default(F, 2, 2);
            std::set<std::pair<elt, elt>> seen;
            for (std::size_t v = 0; v < C.N(); ++v)
                seen.insert({C.eval_x(v), C.eval_y(v)});
            CHECK(seen.size() == C.N());
            std::set<std::pair<elt, elt>> grid;
            for (elt a : C.A())
                for (elt b : C.B()) grid.insert({a, b});
            CHECK(seen == grid);
        }
    }

    TEST_CASE("rows live in the cyclic RS row code") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 2, 2);
        SUBCASE("constant row") {
            CHECK(row_in_rs(C, std::vector<elt>(C.n(), 1)));
        }
        SUBCASE("rows of random codewords, and a perturbed row fails") {
            SplitMix64 g(29);
            for (int k = 0; k < 50; ++k) {
                BiPoly f = rand_bipoly(g, *F, 2, 2);
                CodeMatrix cw = encode(C, f);
                for (std::size_t i = 0; i < C.m(); ++i) {
                    std::vector<elt> row(C.n());
                    for (std::size_t j = 0; j < C.n(); ++j) row[j] = cw.at(i, j);
                    CHECK(row_in_rs(C, row));
                    // weight-1 perturbation cannot stay within distance n-t+1
                    std::vector<elt> bad = row;
                    std::size_t pos = g.below(C.n());
                    bad[pos] = F->add(bad[pos], 1 + elt(g.below(F->q() - 1)));
                    CHECK(!row_in_rs(C, bad));
                }
            }
        }
    }

    TEST_CASE("column agreement") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 2, 2);
        BiPoly f = BiPoly::monomial(0, 1);
        CodeMatrix a = encode(C, f);
        CHECK(column_agreement(a, a) == C.n());
        CodeMatrix b = a;
        for (std::size_t i = 0; i < C.m(); ++i) b.ref(i, 1) = F->add(b.at(i, 1), 1);
        CHECK(column_agreement(a, b) == C.n() - 1);
        // distinct constants never agree on a column
        CodeMatrix c1 = encode(C, BiPoly::constant(1)), c2 = encode(C, BiPoly::constant(2));
        CHECK(column_agreement(c1, c2) == 0);
        CHECK(throws_with(errc::shape_mismatch,
                          [&] { (void)column_agreement(a, CodeMatrix(2, 2)); }));
    }

    TEST_CASE("exhaustive minimum distances match the product formulas") {
        SUBCASE("GF(5), s=2, t=2") {
            PpcCode C = ppc_default(field_create(5, 1), 2, 2);
            DistanceResult d = min_distance_exhaustive(C);
            CHECK(d.unfolded_distance == 12);  // (m-s+1)(n-t+1) = 4*3
            CHECK(d.column_distance >= 3);     // n-t+1
        }
        SUBCASE("GF(9), s=2, t=3") {
            PpcCode C = ppc_default(field_create(3, 2), 2, 3);
            DistanceResult d = min_distance_exhaustive(C);
            CHECK(d.unfolded_distance == 12);  // 2*6
            CHECK(d.column_distance >= 6);
        }
        SUBCASE("cap enforced") {
            PpcCode C = ppc_default(field_create(11, 1), 2, 3);
            CHECK(throws_with(errc::too_large_to_enumerate,
                              [&] { min_distance_exhaustive(C, 1000000); }));
        }
    }

    TEST_CASE("message index order matches serialization order") {
        Field F = field_create(5, 1);
        BiPoly prev = message_from_index(*F, 2, 2, 0);
        for (std::uint64_t idx = 1; idx < 625; ++idx) {
            BiPoly cur = message_from_index(*F, 2, 2, idx);
            CHECK(bi_serial_key(prev, 2, 2) < bi_serial_key(cur, 2, 2));
            prev = cur;
        }
    }
}
