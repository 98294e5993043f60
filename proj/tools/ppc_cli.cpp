// ppc: encoder, list decoder, brute-force oracles and structural audits for
// permuted product codes. Subcommands: params, encode, corrupt, decode,
// oracle, simulate, verify. Exit code 0 iff all asserted invariants held.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <set>

#include "ppc/cyclic.hpp"
#include "ppc/io.hpp"

using namespace ppc;

namespace {

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            std::int64_t den = 1;
            for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
            return {std::stoll(digits), den};
        }
        return {std::stoll(text), 1};
    } catch (const std::logic_error&) {
        fail(errc::bad_input, "not a rational: \"" + text + "\"");
    }
}

ExperimentConfig load_config(const std::string& path) {
    return config_from_json(json::parse(read_file(path)));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_file(out_path, text);
}

int cmd_params(const std::string& eps, const std::string& rate,
               const std::string& out_path) {
    SuggestedParams sp = suggest_params(parse_rational(eps), parse_rational(rate));
    json j;
    j["p"] = sp.p;
    j["m"] = sp.m;
    j["n"] = sp.n;
    j["s"] = sp.s;
    j["t"] = sp.t;
    j["w"] = sp.w;
    j["threshold_num"] = sp.threshold_num;
    j["threshold_den"] = sp.threshold_den;
    j["normalized_threshold"] = sp.normalized_threshold;
    j["radius"] = sp.radius;
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_encode(const ExperimentConfig& cfg, const std::string& in_path,
               const std::string& out_path) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    BiPoly f = bipoly_from_csv(*F, read_file(in_path));
    require(f.nx == cfg.s && f.ny == cfg.t, errc::bad_input,
            "message grid must be s-by-t = " + std::to_string(cfg.s) + "x" +
                std::to_string(cfg.t));
    emit(out_path, matrix_to_csv(encode(C, f)));
    return 0;
}

int cmd_corrupt(const ExperimentConfig& cfg, const std::string& in_path,
                const std::string& out_path) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    CodeMatrix cw = matrix_from_csv(*F, read_file(in_path));
    require(cw.m == C.m() && cw.n == C.n(), errc::shape_mismatch,
            "codeword must be m-by-n");
    SplitMix64 rng(cfg.seed);
    emit(out_path, matrix_to_csv(corrupt_columns(*F, cw, cfg.errors, rng)));
    return 0;
}

int cmd_decode(const ExperimentConfig& cfg, const std::string& in_path,
               const std::string& out_path, bool timings) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    CodeMatrix rcv = matrix_from_csv(*F, read_file(in_path));
    DecodeOutput out =
        list_decode(C, rcv, cfg.w, cfg.threshold_override, cfg.enumeration_cap);
    emit(out_path, decode_to_json(C, out, timings).dump(2) + "\n");
    bool ok = out.stats.interpolation_verified && out.stats.coprime_after_reduction &&
              out.basis.size() <= cfg.w - 1;
    return ok ? 0 : 1;
}

int cmd_oracle(const ExperimentConfig& cfg, const std::string& in_path,
               const std::string& out_path) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    CodeMatrix rcv = matrix_from_csv(*F, read_file(in_path));
    std::size_t threshold = cfg.threshold_override ? *cfg.threshold_override
                                                   : agreement_threshold(C, cfg.w).value;
    auto list = brute_force_list(C, rcv, threshold, cfg.enumeration_cap);
    json j;
    j["threshold"] = threshold;
    json arr = json::array();
    for (const auto& f : list) arr.push_back(bipoly_to_json(f, C.s(), C.t()));
    j["list"] = std::move(arr);
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_simulate(const ExperimentConfig& cfg, const std::string& out_path, bool timings) {
    auto records = run_experiment(cfg);
    std::string text;
    for (const auto& rec : records) text += trial_to_json(rec, timings).dump() + "\n";
    text += summary_to_json(records).dump() + "\n";
    emit(out_path, text);
    return all_invariants_held(records) ? 0 : 1;
}

int cmd_verify(const ExperimentConfig& cfg, std::size_t trials) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    std::vector<AuditClause> clauses;

    {  // field axioms on random triples
        SplitMix64 g(cfg.seed ^ 0xF1E1D);
        bool ok = true;
        for (std::size_t k = 0; k < 500 && ok; ++k) {
            elt a = elt(g.below(F->q())), b = elt(g.below(F->q())),
                c = elt(g.below(F->q()));
            ok = F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)) &&
                 F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c) &&
                 (a == 0 || F->mul(a, F->inv(a)) == 1);
        }
        clauses.push_back({"field_axioms", ok, ""});
    }
    {  // factor degrees of x^q - l(x) are 1 or ord(l), linear roots = fixed points
        bool ok = true;
        SplitMix64 g(cfg.seed ^ 0x5A11);
        auto check = [&](const AffineMap& l) {
            auto prof = splitting_degree_profile(l);
            std::uint64_t ord = affine_order(l);
            int linear = 0, total = 0;
            for (auto [d, cnt] : prof) {
                if (d != 1 && d != int(ord)) return false;
                total += d * cnt;
                if (d == 1) linear += cnt;
            }
            return total == int(F->q()) && linear == int(fixed_points(l).size());
        };
        if (F->q() <= 81) {
            for (elt a = 1; a < F->q() && ok; ++a)
                for (elt b = 0; b < F->q() && ok; ++b) ok = check(AffineMap(F, a, b));
        } else {
            for (std::size_t k = 0; k < 100 && ok; ++k)
                ok = check(
                    AffineMap(F, 1 + elt(g.below(F->q() - 1)), elt(g.below(F->q()))));
        }
        clauses.push_back({"splitting_degree_profile", ok, ""});
    }
    {  // eval table covers A x B exactly once
        std::set<std::pair<elt, elt>> seen, grid;
        for (std::size_t v = 0; v < C.N(); ++v) seen.insert({C.eval_x(v), C.eval_y(v)});
        for (elt a : C.A())
            for (elt b : C.B()) grid.insert({a, b});
        clauses.push_back(
            {"eval_table_bijection", seen.size() == C.N() && seen == grid, ""});
    }
    {  // tensor equivalence and RS-row membership on random messages
        SplitMix64 g(cfg.seed ^ 0x7E4503);
        bool tensor_ok = true, rows_ok = true;
        for (std::size_t k = 0; k < trials && tensor_ok && rows_ok; ++k) {
            BiPoly f(C.s(), C.t());
            for (auto& cf : f.c) cf = elt(g.below(F->q()));
            CodeMatrix cw = encode(C, f);
            tensor_ok = cw == encode_via_tensor(C, f);
            for (std::size_t i = 0; i < C.m() && rows_ok; ++i) {
                std::vector<elt> row(C.n());
                for (std::size_t j = 0; j < C.n(); ++j) row[j] = cw.at(i, j);
                rows_ok = row_in_rs(C, row);
            }
        }
        clauses.push_back({"tensor_equivalence", tensor_ok, ""});
        clauses.push_back({"rows_in_rs", rows_ok, ""});
    }
    {  // Hasse multiplicity matrix against the division oracle
        SplitMix64 g(cfg.seed ^ 0x4A55E);
        bool ok = true;
        for (std::size_t k = 0; k < 200 && ok; ++k) {
            elt beta = 1 + elt(g.below(F->q() - 1));
            std::size_t r = 1 + g.below(F->p());
            std::vector<elt> cc(1 + g.below(10));
            for (auto& v : cc) v = elt(g.below(F->q()));
            UniPoly c(std::move(cc));
            UniPoly lin(std::vector<elt>{F->neg(beta), 1});
            if (g.below(2))
                for (std::uint64_t j = g.below(r + 1); j-- > 0;) c = uni_mul(*F, c, lin);
            std::size_t N = std::size_t(std::max(c.deg() + 1, 12));
            std::vector<elt> vec(N, 0);
            std::copy(c.c.begin(), c.c.end(), vec.begin());
            auto hc = mat_vec(*F, hasse_parity_matrix(*F, beta, r, N), vec);
            bool parity_zero =
                std::all_of(hc.begin(), hc.end(), [](elt v) { return v == 0; });
            UniPoly rem = c;
            std::size_t mult = 0;
            while (!rem.is_zero()) {
                UniDivmod qr = uni_divmod(*F, rem, lin);
                if (!qr.rem.is_zero()) break;
                rem = qr.quot;
                ++mult;
            }
            ok = parity_zero == (c.is_zero() || mult >= r);
        }
        clauses.push_back({"hasse_multiplicity", ok, ""});
    }
    if (C.is_default_instantiation()) {
        CyclicReport rep = verify_cyclic_structure(C, trials, cfg.seed ^ 0xC1C11C);
        for (auto& cl : rep.clauses) clauses.push_back(cl);
    }
    if (message_count(*F, C.s(), C.t()) <= cfg.enumeration_cap) {
        DistanceResult d = min_distance_exhaustive(C, cfg.enumeration_cap);
        bool ok = d.unfolded_distance == (C.m() - C.s() + 1) * (C.n() - C.t() + 1) &&
                  d.column_distance >= C.n() - C.t() + 1;
        clauses.push_back(
            {"distance_formulas", ok, "unfolded=" + std::to_string(d.unfolded_distance)});
    }

    bool all = true;
    for (const auto& cl : clauses) {
        std::printf("%-28s %s%s%s\n", cl.name.c_str(), cl.pass ? "pass" : "FAIL",
                    cl.detail.empty() ? "" : "  ", cl.detail.c_str());
        all = all && cl.pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permuted product codes: encoder, list decoder, oracle, audits"};
    app.require_subcommand(1);

    std::string config_path, in_path, out_path, eps_text, rate_text;
    std::uint64_t seed = 0;
    bool seed_set = false, timings = false;
    std::size_t verify_trials = 100;

    auto add_common = [&](CLI::App* sub, bool with_in) {
        sub->add_option("--config", config_path, "experiment config JSON")->required();
        if (with_in) sub->add_option("--in", in_path, "input file (CSV)")->required();
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--seed", seed, "override the config seed")
            ->each([&](const std::string&) { seed_set = true; });
    };

    CLI::App* params = app.add_subcommand("params", "capacity-schedule parameters");
    params->add_option("--epsilon", eps_text, "gap to capacity, e.g. 1/4")->required();
    params->add_option("--rate", rate_text, "target rate, e.g. 1/4")->required();
    params->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* enc = app.add_subcommand("encode", "encode a message grid");
    add_common(enc, true);
    CLI::App* cor = app.add_subcommand("corrupt", "corrupt codeword columns");
    add_common(cor, true);
    CLI::App* dec = app.add_subcommand("decode", "list-decode a received word");
    add_common(dec, true);
    dec->add_flag("--timings", timings, "include stage timings in the output");
    CLI::App* ora = app.add_subcommand("oracle", "brute-force agreement list");
    add_common(ora, true);
    CLI::App* sim = app.add_subcommand("simulate", "run seeded decoding trials");
    add_common(sim, false);
    sim->add_flag("--timings", timings, "include stage timings in the output");
    CLI::App* ver = app.add_subcommand("verify", "structural audits (gf/code/cyclic)");
    add_common(ver, false);
    ver->add_option("--trials", verify_trials, "random messages per audit clause");

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed()) return cmd_params(eps_text, rate_text, out_path);
        ExperimentConfig cfg = load_config(config_path);
        if (seed_set) cfg.seed = seed;
        if (enc->parsed()) return cmd_encode(cfg, in_path, out_path);
        if (cor->parsed()) return cmd_corrupt(cfg, in_path, out_path);
        if (dec->parsed()) return cmd_decode(cfg, in_path, out_path, timings);
        if (ora->parsed()) return cmd_oracle(cfg, in_path, out_path);
        if (sim->parsed()) return cmd_simulate(cfg, out_path, timings);
        if (ver->parsed()) return cmd_verify(cfg, verify_trials);
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: bad JSON: %s\n", e.what());
        return 1;
    }
    return 0;
}
