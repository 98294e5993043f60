#include <doctest.h>

#include "ppc/code.hpp"
#include "ppc/harness.hpp"
#include "ppc/linalg.hpp"
#include "test_util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ppc;
using namespace ppc::testutil;

TEST_SUITE("parallel") {
    TEST_CASE("row_submul fast paths match element-wise field ops") {
        for (auto F : {field_create(5, 1), field_create(71, 1), field_create(257, 1),
                       field_create(3, 2)}) {
            SplitMix64 g(1);
            for (int k = 0; k < 50; ++k) {
                std::size_t len = 1 + g.below(200);
                std::vector<elt> dst(len), src(len);
                for (auto& v : dst) v = rand_elt(g, *F);
                for (auto& v : src) v = rand_elt(g, *F);
                elt f = rand_nonzero(g, *F);
                std::vector<elt> expect = dst;
                for (std::size_t j = 0; j < len; ++j)
                    expect[j] = F->sub(expect[j], F->mul(f, src[j]));
                row_submul(*F, dst.data(), src.data(), f, 0, len);
                CHECK(dst == expect);
            }
        }
    }

    TEST_CASE("parallel nullspace is bit-identical to the serial reference") {
        for (auto F : {field_create(5, 1), field_create(3, 2), field_create(71, 1)}) {
            SplitMix64 g(2);
            for (int k = 0; k < 20; ++k) {
                std::size_t rows = 1 + g.below(60), cols = 1 + g.below(60);
                Matrix M = rand_matrix(g, *F, rows, cols);
                // plant extra rank deficiency: duplicate some rows scaled
                for (std::size_t i = 1; i < rows; i += 3)
                    for (std::size_t j = 0; j < cols; ++j)
                        M.ref(i, j) = F->mul(2 % F->q(), M.at(i - 1, j));
                CHECK(nullspace(*F, M) == nullspace_serial(*F, M));
            }
        }
    }

    TEST_CASE("nullspace is invariant under the thread count") {
#ifdef _OPENMP
        Field F = field_create(71, 1);
        SplitMix64 g(3);
        Matrix M = rand_matrix(g, *F, 120, 150);
        omp_set_num_threads(1);
        auto one = nullspace(*F, M);
        omp_set_num_threads(2);
        auto two = nullspace(*F, M);
        omp_set_num_threads(omp_get_num_procs());
        CHECK(one == two);
#endif
    }

    TEST_CASE("exhaustive distance scan: OpenMP equals serial") {
        PpcCode C5 = ppc_default(field_create(5, 1), 2, 2);
        DistanceResult a = min_distance_exhaustive(C5);
        DistanceResult b = min_distance_exhaustive_serial(C5);
        CHECK(a.column_distance == b.column_distance);
        CHECK(a.unfolded_distance == b.unfolded_distance);

        PpcCode C9 = ppc_default(field_create(3, 2), 2, 2);
        DistanceResult c = min_distance_exhaustive(C9);
        DistanceResult d = min_distance_exhaustive_serial(C9);
        CHECK(c.column_distance == d.column_distance);
        CHECK(c.unfolded_distance == d.unfolded_distance);
    }

    TEST_CASE("brute-force scan: OpenMP equals serial") {
        PpcCode C = ppc_default(field_create(5, 1), 2, 2);
        const FieldCtx& F = C.ctx();
        SplitMix64 g(4);
        BiPoly f = rand_bipoly(g, F, 2, 2);
        CodeMatrix rcv = corrupt_columns(F, encode(C, f), 1, g);
        for (std::size_t threshold : {std::size_t(0), std::size_t(2), C.n()}) {
            auto par = brute_force_list(C, rcv, threshold);
            auto ser = brute_force_list_serial(C, rcv, threshold);
            REQUIRE(par.size() == ser.size());
            for (std::size_t i = 0; i < par.size(); ++i)
                CHECK(bi_equal(par[i], ser[i]));
        }
    }
}
