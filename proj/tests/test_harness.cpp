#include <doctest.h>

#include <algorithm>
#include <set>

#include "ppc/harness.hpp"
#include "ppc/io.hpp"
#include "test_util.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ppc;
using namespace ppc::testutil;

namespace {

ExperimentConfig gf11_config() {
    ExperimentConfig cfg;
    cfg.p = 11;
    cfg.s = 2;
    cfg.t = 3;
    cfg.w = 4;
    cfg.errors = 2;
    cfg.trials = 20;
    cfg.seed = 20240601;
    return cfg;
}

std::set<std::vector<elt>> key_set(const PpcCode& C, const std::vector<BiPoly>& list) {
    std::set<std::vector<elt>> out;
    for (const auto& f : list) out.insert(bi_serial_key(f, C.s(), C.t()));
    return out;
}

}  // namespace

TEST_SUITE("harness") {
    TEST_CASE("corrupt_columns") {
        Field F = field_create(11, 1);
        PpcCode C = ppc_default(F, 2, 3);
        SplitMix64 g(8);
        BiPoly f = rand_bipoly(g, *F, 2, 3);
        CodeMatrix cw = encode(C, f);
        SUBCASE("no errors: identical") {
            CodeMatrix r = corrupt_columns(*F, cw, 0, g);
            CHECK(r == cw);
        }
        SUBCASE("every column corrupted: agreement zero") {
            CodeMatrix r = corrupt_columns(*F, cw, C.n(), g);
            CHECK(column_agreement(cw, r) == 0);
        }
        SUBCASE("two corrupted columns leave exactly n-2 agreements") {
            for (int k = 0; k < 20; ++k) {
                CodeMatrix r = corrupt_columns(*F, cw, 2, g);
                CHECK(column_agreement(cw, r) == C.n() - 2);
            }
        }
        SUBCASE("too many errors") {
            CHECK(throws_with(errc::too_many_errors,
                              [&] { corrupt_columns(*F, cw, C.n() + 1, g); }));
        }
    }

    TEST_CASE("brute force oracle on tiny instances") {
        Field F = field_create(5, 1);
        PpcCode C = ppc_default(F, 1, 1);
        SplitMix64 g(21);
        BiPoly f = rand_bipoly(g, *F, 1, 1);
        CodeMatrix r = encode(C, f);
        SUBCASE("threshold n: exact match only") {
            auto list = brute_force_list(C, r, C.n());
            REQUIRE(list.size() == 1);
            CHECK(list[0].c == bi_serial_key(f, 1, 1));
        }
        SUBCASE("threshold 0: the whole message space, in order") {
            auto list = brute_force_list(C, r, 0);
            REQUIRE(list.size() == 5);
            for (elt v = 0; v < 5; ++v) CHECK(list[v].at(0, 0) == v);
        }
        SUBCASE("GF(3) instance") {
            PpcCode C3 = ppc_default(field_create(3, 1), 1, 1);
            CHECK(brute_force_list(C3, CodeMatrix(C3.m(), C3.n()), 0).size() == 3);
        }
        SUBCASE("cap enforced") {
            PpcCode C11 = ppc_default(field_create(11, 1), 2, 3);
            CHECK(throws_with(errc::too_large_to_enumerate, [&] {
                brute_force_list(C11, CodeMatrix(C11.m(), C11.n()), 0, 1000000);
            }));
        }
    }

    TEST_CASE("parameter schedule") {
        SUBCASE("epsilon = 1/2") {
            SuggestedParams sp = suggest_params({1, 2}, {1, 5});
            CHECK(sp.p == 11);  // smallest prime >= 8
            CHECK(sp.w == 2);
            CHECK(sp.s == 7);  // 11 - 4
            CHECK(sp.n == 10);
        }
        SUBCASE("epsilon = 1/4, rate = 1/4") {
            SuggestedParams sp = suggest_params({1, 4}, {1, 4});
            CHECK(sp.p == 67);
            CHECK(sp.w == 8);
            CHECK(sp.s == 51);
            CHECK(sp.t == 22);  // round(0.25*67*66/51)
            CHECK(sp.normalized_threshold ==
                  doctest::Approx(67.0 / (8 * (67 - 51 - 8 + 1)) + 22.0 / 66));
            CHECK(sp.radius == doctest::Approx(1.0 - sp.normalized_threshold));
        }
        SUBCASE("epsilon beyond 1/2 is rejected") {
            CHECK(throws_with(errc::bad_input, [] { suggest_params({3, 5}, {1, 4}); }));
        }
        SUBCASE("infeasible rate") {
            CHECK(throws_with(errc::infeasible_rate,
                              [] { suggest_params({1, 2}, {1, 1000}); }));
        }
    }

    TEST_CASE("run_experiment finds every planted message at the threshold") {
        ExperimentConfig cfg = gf11_config();
        auto records = run_experiment(cfg);
        REQUIRE(records.size() == cfg.trials);
        for (const auto& rec : records) {
            CHECK(rec.err.empty());
            CHECK(rec.agreement == 8);
            CHECK(rec.threshold == 8);
            CHECK(rec.asserted);
            CHECK(rec.planted_found);
            CHECK(rec.dimension <= 3);
            CHECK(rec.stats.interpolation_verified);
            CHECK(rec.stats.coprime_after_reduction);
        }
        CHECK(all_invariants_held(records));
    }

    TEST_CASE("run_experiment edge cases") {
        ExperimentConfig cfg = gf11_config();
        SUBCASE("zero trials") {
            cfg.trials = 0;
            CHECK(run_experiment(cfg).empty());
        }
        SUBCASE("agreement below threshold: one-sided guarantee") {
            cfg.errors = 5;  // agreement 5 < 8
            cfg.trials = 5;
            auto records = run_experiment(cfg);
            for (const auto& rec : records) {
                CHECK(!rec.asserted);
                CHECK(rec.dimension <= 3);  // bound still holds
            }
            CHECK(all_invariants_held(records));
        }
        SUBCASE("stage errors are recorded per trial, not thrown") {
            cfg.w = 20;  // no valid window: every trial fails in the decoder
            cfg.trials = 3;
            auto records = run_experiment(cfg);
            REQUIRE(records.size() == 3);
            for (const auto& rec : records)
                CHECK(rec.err.find("WindowOutOfRange") != std::string::npos);
            CHECK(!all_invariants_held(records));
        }
    }

    TEST_CASE("byte-identical reruns, independent of thread count") {
        ExperimentConfig cfg = gf11_config();
        cfg.trials = 6;
        auto dump = [&](const std::vector<TrialRecord>& recs) {
            std::string out;
            for (const auto& r : recs) out += trial_to_json(r, false).dump() + "\n";
            out += summary_to_json(recs).dump();
            return out;
        };
#ifdef _OPENMP
        omp_set_num_threads(1);
        std::string one = dump(run_experiment(cfg));
        omp_set_num_threads(2);
        std::string two = dump(run_experiment(cfg));
        omp_set_num_threads(omp_get_num_procs());
        CHECK(one == two);
#endif
        CHECK(dump(run_experiment(cfg)) == dump(run_experiment(cfg)));
    }

    TEST_CASE("decoder list and oracle agree on the same received word") {
        ExperimentConfig cfg = gf11_config();
        Field F = make_field(cfg);
        PpcCode C = make_code(cfg, F);
        SplitMix64 g(606);
        for (int trial = 0; trial < 3; ++trial) {
            BiPoly f = rand_bipoly(g, *F, 2, 3);
            CodeMatrix rcv = corrupt_columns(*F, encode(C, f), 2, g);
            DecodeOutput out = list_decode(C, rcv, 4, std::nullopt, 2000000);
            auto oracle = brute_force_list(C, rcv, out.threshold, 2000000);
            CHECK(key_set(C, out.list) == key_set(C, oracle));
        }
    }

    TEST_CASE("message digest is stable") {
        Field F = field_create(5, 1);
        BiPoly f = message_from_index(*F, 2, 2, 27);
        CHECK(message_digest(f, 2, 2) == message_digest(f, 2, 2));
        BiPoly h = message_from_index(*F, 2, 2, 28);
        CHECK(message_digest(f, 2, 2) != message_digest(h, 2, 2));
    }

    TEST_CASE("CSV file formats round trip") {
        Field F = field_create(11, 1);
        PpcCode C = ppc_default(F, 2, 3);
        SplitMix64 g(63);
        BiPoly f = rand_bipoly(g, *F, 2, 3);
        CHECK(bi_equal(bipoly_from_csv(*F, bipoly_to_csv(f, 2, 3)), f));
        CodeMatrix cw = encode(C, f);
        CHECK(matrix_from_csv(*F, matrix_to_csv(cw)) == cw);
        CHECK(throws_with(errc::bad_input, [&] { matrix_from_csv(*F, "1,2\n3\n"); }));
        CHECK(throws_with(errc::bad_input, [&] { matrix_from_csv(*F, "1,11\n"); }));
        CHECK(throws_with(errc::bad_input, [&] { matrix_from_csv(*F, "1,x\n"); }));
    }

    TEST_CASE("config JSON round trip") {
        ExperimentConfig cfg = gf11_config();
        cfg.threshold_override = 9;
        cfg.modulus = std::vector<elt>{1, 0, 1};
        cfg.r = 2;
        cfg.p = 3;
        ExperimentConfig back = config_from_json(config_to_json(cfg));
        CHECK(config_to_json(back) == config_to_json(cfg));
    }

    TEST_CASE("custom instantiation from config text") {
        ExperimentConfig cfg;
        cfg.p = 11;
        cfg.s = 2;
        cfg.t = 3;
        cfg.l1_text = "1*x+1";
        cfg.l2_text = "2*x+0";
        cfg.alpha = 0;
        cfg.beta = 1;
        Field F = make_field(cfg);
        PpcCode C = make_code(cfg, F);
        CHECK(C.m() == 11);
        CHECK(C.n() == 10);
        CHECK(C.is_default_instantiation());
    }
}
