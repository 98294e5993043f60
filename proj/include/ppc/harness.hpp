#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppc/code.hpp"
#include "ppc/decode.hpp"
#include "ppc/rng.hpp"

namespace ppc {

/// One experiment description; `seed` fully determines all randomness.
struct ExperimentConfig {
    std::uint32_t p = 0;
    std::uint32_t r = 1;
    std::optional<std::vector<elt>> modulus;  // over GF(p), little-endian, monic
    std::size_t s = 1, t = 1, w = 1;
    std::size_t errors = 0;  // corrupted columns per trial
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> threshold_override;
    std::uint64_t enumeration_cap = 1000000;
    // optional custom instantiation ("a*x+b" maps); default when absent
    std::optional<std::string> l1_text, l2_text;
    std::optional<elt> alpha, beta;
};

Field make_field(const ExperimentConfig& cfg);
PpcCode make_code(const ExperimentConfig& cfg, const Field& F);

/// Replaces e distinct uniformly chosen columns by uniformly random columns
/// different from the originals; exactly n-e agreement columns remain.
CodeMatrix corrupt_columns(const FieldCtx& F, const CodeMatrix& c, std::size_t e,
                           SplitMix64& rng);

/// Every f with deg_x < s, deg_y < t whose encoding agrees with r on at
/// least `threshold` columns, in serialization order. The independent oracle
/// for the decoder's completeness guarantee.
std::vector<BiPoly> brute_force_list(const PpcCode& C, const CodeMatrix& r,
                                     std::size_t threshold, std::uint64_t cap = 1000000);

/// Single-loop reference for the OpenMP scan above.
std::vector<BiPoly> brute_force_list_serial(const PpcCode& C, const CodeMatrix& r,
                                            std::size_t threshold,
                                            std::uint64_t cap = 1000000);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Capacity-schedule parameters for a target epsilon and rate:
/// p the smallest prime >= ceil(1/eps^3), w = ceil(1/(2 eps^2)),
/// s = m - ceil(1/eps^2), t = round(rate*m*n/s), over the prime field q = p.
struct SuggestedParams {
    std::uint32_t p = 0;
    std::size_t m = 0, n = 0, s = 0, t = 0, w = 0;
    std::uint64_t threshold_num = 0, threshold_den = 0;  // normalized agreement bound
    double normalized_threshold = 0;                     // m/(w(m-s-w+1)) + t/n
    double radius = 0;                                   // 1 - normalized_threshold
};

/// Requires 0 < epsilon <= 1/2 and 0 < rate < 1. Throws InfeasibleRate when
/// the implied t falls outside [1, n].
SuggestedParams suggest_params(Rational epsilon, Rational rate);

/// FNV-1a over the comma-separated decimal serialization of f's s-by-t grid.
std::uint64_t message_digest(const BiPoly& f, std::size_t s, std::size_t t);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t digest = 0;  // planted-message digest
    std::size_t agreement = 0;
    std::size_t threshold = 0;
    std::size_t dimension = 0;
    bool enumerated = false;
    std::int64_t list_size = -1;  // -1 when the span was not enumerated
    bool in_subspace = false;
    bool in_list = false;
    bool planted_found = false;  // in_list when enumerated, else in_subspace
    bool asserted = false;       // agreement >= threshold: planted_found must hold
    DecodeStats stats;
    std::string err;  // propagated stage error, empty on success
};

/// True when every asserted trial found its planted message, every dimension
/// respected the w-1 bound, and every interpolation check passed.
bool all_invariants_held(const std::vector<TrialRecord>& records);

/// Per trial: sample a uniform message, encode, corrupt `errors` columns,
/// decode, record. Deterministic given the config (per-trial substreams).
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

}  // namespace ppc
