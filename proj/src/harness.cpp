#include "ppc/harness.hpp"

#include <algorithm>
#include <numeric>

#include "ppc/affine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ppc {

Field make_field(const ExperimentConfig& cfg) {
    return cfg.modulus ? field_create(cfg.p, cfg.r, &*cfg.modulus)
                       : field_create(cfg.p, cfg.r);
}

PpcCode make_code(const ExperimentConfig& cfg, const Field& F) {
    if (!cfg.l1_text && !cfg.l2_text && !cfg.alpha && !cfg.beta)
        return ppc_default(F, cfg.s, cfg.t);
    AffineMap l1 = cfg.l1_text ? affine_parse(F, *cfg.l1_text) : AffineMap(F, 1, 1);
    AffineMap l2 = cfg.l2_text ? affine_parse(F, *cfg.l2_text)
                               : AffineMap(F, F->primitive(), 0);
    elt alpha = cfg.alpha.value_or(0);
    elt beta = cfg.beta.value_or(1);
    return PpcCode(F, l1, l2, alpha, beta, cfg.s, cfg.t);
}

CodeMatrix corrupt_columns(const FieldCtx& F, const CodeMatrix& c, std::size_t e,
                           SplitMix64& rng) {
    require(e <= c.n, errc::too_many_errors,
            "cannot corrupt " + std::to_string(e) + " of " + std::to_string(c.n) +
                " columns");
    // partial Fisher-Yates for the column set, then replacements in
    // ascending column order
    std::vector<std::size_t> idx(c.n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t k = 0; k < e; ++k)
        std::swap(idx[k], idx[k + rng.below(c.n - k)]);
    std::sort(idx.begin(), idx.begin() + std::ptrdiff_t(e));

    CodeMatrix out = c;
    std::vector<elt> col(c.m);
    for (std::size_t k = 0; k < e; ++k) {
        std::size_t j = idx[k];
        bool differs = false;
        do {
            differs = false;
            for (std::size_t i = 0; i < c.m; ++i) {
                col[i] = elt(rng.below(F.q()));
                differs = differs || col[i] != c.at(i, j);
            }
        } while (!differs);
        for (std::size_t i = 0; i < c.m; ++i) out.ref(i, j) = col[i];
    }
    return out;
}

namespace {

// agreement of message `idx` with r, using the monomial table; exits early
// once the threshold is out of reach
std::size_t scan_agreement(const FieldCtx& F, const PpcCode& C, const Matrix& T,
                           const CodeMatrix& r, std::uint64_t idx, std::size_t threshold,
                           std::vector<elt>& coeffs) {
    const std::size_t st = C.s() * C.t();
    for (std::size_t k = st; k-- > 0;) {
        coeffs[k] = elt(idx % F.q());
        idx /= F.q();
    }
    std::size_t agree = 0;
    for (std::size_t j = 0; j < C.n(); ++j) {
        if (agree + (C.n() - j) < threshold) break;
        bool same = true;
        for (std::size_t i = 0; i < C.m() && same; ++i) {
            const elt* row = T.row(j * C.m() + i);
            elt sum = 0;
            for (std::size_t k = 0; k < st; ++k) sum = F.add(sum, F.mul(row[k], coeffs[k]));
            same = sum == r.at(i, j);
        }
        agree += same;
    }
    return agree;
}

std::vector<BiPoly> materialize(const FieldCtx& F, const PpcCode& C,
                                std::vector<std::uint64_t>& hit_indices) {
    std::sort(hit_indices.begin(), hit_indices.end());
    std::vector<BiPoly> out;
    out.reserve(hit_indices.size());
    for (std::uint64_t idx : hit_indices)
        out.push_back(message_from_index(F, C.s(), C.t(), idx));
    return out;
}

}  // namespace

std::vector<BiPoly> brute_force_list(const PpcCode& C, const CodeMatrix& r,
                                     std::size_t threshold, std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    std::uint64_t total = message_count(F, C.s(), C.t());
    require(total <= cap, errc::too_large_to_enumerate,
            "q^(s*t) exceeds the enumeration cap");
    Matrix T = monomial_table(C);
    std::vector<std::uint64_t> hits;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        std::vector<elt> coeffs(C.s() * C.t());
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < std::int64_t(total); ++idx) {
            if (scan_agreement(F, C, T, r, std::uint64_t(idx), threshold, coeffs) >=
                threshold)
                local.push_back(std::uint64_t(idx));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    return materialize(F, C, hits);
}

std::vector<BiPoly> brute_force_list_serial(const PpcCode& C, const CodeMatrix& r,
                                            std::size_t threshold, std::uint64_t cap) {
    const FieldCtx& F = C.ctx();
    std::uint64_t total = message_count(F, C.s(), C.t());
    require(total <= cap, errc::too_large_to_enumerate,
            "q^(s*t) exceeds the enumeration cap");
    Matrix T = monomial_table(C);
    std::vector<std::uint64_t> hits;
    std::vector<elt> coeffs(C.s() * C.t());
    for (std::uint64_t idx = 0; idx < total; ++idx)
        if (scan_agreement(F, C, T, r, idx, threshold, coeffs) >= threshold)
            hits.push_back(idx);
    return materialize(F, C, hits);
}

namespace {

using i128 = __int128;

std::int64_t ceil_div_i128(i128 a, i128 b) {  // b > 0
    return std::int64_t((a + b - 1) / b);
}

}  // namespace

SuggestedParams suggest_params(Rational epsilon, Rational rate) {
    require(epsilon.num > 0 && epsilon.den > 0 && rate.num > 0 && rate.den > 0,
            errc::bad_input, "epsilon and rate must be positive rationals");
    require(2 * epsilon.num <= epsilon.den, errc::bad_input, "epsilon must be <= 1/2");
    require(rate.num < rate.den, errc::bad_input, "rate must be < 1");

    i128 en = epsilon.num, ed = epsilon.den;
    std::int64_t inv_eps3 = ceil_div_i128(ed * ed * ed, en * en * en);
    std::int64_t inv_eps2 = ceil_div_i128(ed * ed, en * en);
    std::int64_t half_inv_eps2 = ceil_div_i128(ed * ed, 2 * en * en);

    std::uint64_t p = std::uint64_t(inv_eps3);
    while (!is_prime_u64(p)) ++p;
    require(p <= (1u << 30), errc::bad_input, "epsilon too small: p exceeds 2^30");

    SuggestedParams sp;
    sp.p = std::uint32_t(p);
    sp.m = std::size_t(p);
    sp.n = std::size_t(p - 1);
    sp.w = std::size_t(half_inv_eps2);
    require(std::int64_t(sp.m) > inv_eps2, errc::bad_input,
            "schedule degenerate: m - ceil(1/eps^2) < 1");
    sp.s = sp.m - std::size_t(inv_eps2);

    // t = round(rate * m * n / s), half up, exact arithmetic
    i128 tn = i128(rate.num) * i128(sp.m) * i128(sp.n);
    i128 td = i128(rate.den) * i128(sp.s);
    std::int64_t t = std::int64_t((2 * tn + td) / (2 * td));
    require(t >= 1 && t <= std::int64_t(sp.n), errc::infeasible_rate,
            "implied t = " + std::to_string(t) + " outside [1, n]");
    sp.t = std::size_t(t);

    std::uint64_t den = std::uint64_t(sp.w) * (sp.m - sp.s - sp.w + 1) * sp.n;
    std::uint64_t num = std::uint64_t(sp.m) * sp.n + sp.t * std::uint64_t(sp.w) *
                                                         (sp.m - sp.s - sp.w + 1);
    std::uint64_t g = std::gcd(num, den);
    sp.threshold_num = num / g;
    sp.threshold_den = den / g;
    sp.normalized_threshold = double(sp.threshold_num) / double(sp.threshold_den);
    sp.radius = 1.0 - sp.normalized_threshold;
    return sp;
}

std::uint64_t message_digest(const BiPoly& f, std::size_t s, std::size_t t) {
    std::string text;
    auto key = bi_serial_key(f, s, t);
    for (std::size_t k = 0; k < key.size(); ++k) {
        if (k) text.push_back(',');
        text += std::to_string(key[k]);
    }
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool all_invariants_held(const std::vector<TrialRecord>& records) {
    for (const auto& rec : records) {
        if (!rec.err.empty()) return false;
        if (!rec.stats.interpolation_verified || !rec.stats.coprime_after_reduction)
            return false;
        if (rec.asserted && !rec.planted_found) return false;
    }
    return true;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
    Field F = make_field(cfg);
    PpcCode C = make_code(cfg, F);
    std::vector<TrialRecord> records;
    records.reserve(cfg.trials);

    for (std::size_t k = 0; k < cfg.trials; ++k) {
        TrialRecord rec;
        rec.trial = k;
        SplitMix64 rng(SplitMix64::substream(cfg.seed, k));
        try {
            BiPoly f(cfg.s, cfg.t);
            for (auto& cf : f.c) cf = elt(rng.below(F->q()));
            rec.digest = message_digest(f, cfg.s, cfg.t);

            CodeMatrix cw = encode(C, f);
            CodeMatrix rcv = corrupt_columns(*F, cw, cfg.errors, rng);
            rec.agreement = column_agreement(cw, rcv);

            DecodeOutput out =
                list_decode(C, rcv, cfg.w, cfg.threshold_override, cfg.enumeration_cap);
            rec.threshold = out.threshold;
            rec.dimension = out.basis.size();
            rec.enumerated = out.stats.enumerated;
            rec.list_size = out.stats.enumerated ? std::int64_t(out.list.size()) : -1;
            rec.stats = out.stats;
            rec.in_subspace = in_span(C, out.basis, f);
            if (out.stats.enumerated) {
                auto key = bi_serial_key(f, cfg.s, cfg.t);
                rec.in_list = std::any_of(out.list.begin(), out.list.end(),
                                          [&](const BiPoly& g) { return g.c == key; });
            }
            rec.planted_found = out.stats.enumerated ? rec.in_list : rec.in_subspace;
            rec.asserted = rec.agreement >= rec.threshold;
        } catch (const error& e) {
            rec.err = e.what();
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace ppc
