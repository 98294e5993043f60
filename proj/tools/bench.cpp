// Benchmark of the OpenMP kernels against their serial references:
// nullspace elimination, the exhaustive distance scan, and the brute-force
// agreement scan. Results are checked for equality while timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ppc/code.hpp"
#include "ppc/harness.hpp"
#include "ppc/linalg.hpp"
#include "ppc/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ppc;

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-36s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n",
                name.c_str(), serial, parallel, serial / parallel,
                equal ? "results identical" : "RESULTS DIFFER");
}

void bench_nullspace(const Field& F, std::size_t rows, std::size_t cols,
                     std::uint64_t seed) {
    SplitMix64 g(seed);
    Matrix M(rows, cols);
    for (auto& v : M.a) v = elt(g.below(F->q()));
    std::vector<std::vector<elt>> a, b;
    double ts = time_once([&] { a = nullspace_serial(*F, M); });
    double tp = time_once([&] { b = nullspace(*F, M); });
    report("nullspace GF(" + std::to_string(F->q()) + ") " + std::to_string(rows) + "x" +
               std::to_string(cols),
           ts, tp, a == b);
}

void bench_distance(const Field& F, std::size_t s, std::size_t t) {
    PpcCode C = ppc_default(F, s, t);
    DistanceResult a, b;
    double ts = time_once([&] { a = min_distance_exhaustive_serial(C); });
    double tp = time_once([&] { b = min_distance_exhaustive(C); });
    report("distance scan GF(" + std::to_string(F->q()) + ") s=" + std::to_string(s) +
               " t=" + std::to_string(t),
           ts, tp,
           a.column_distance == b.column_distance &&
               a.unfolded_distance == b.unfolded_distance);
}

void bench_oracle(const Field& F, std::size_t s, std::size_t t, std::size_t errors,
                  std::uint64_t cap) {
    PpcCode C = ppc_default(F, s, t);
    SplitMix64 g(99);
    BiPoly f(s, t);
    for (auto& c : f.c) c = elt(g.below(F->q()));
    CodeMatrix rcv = corrupt_columns(*F, encode(C, f), errors, g);
    std::size_t threshold = C.n() - errors;
    std::vector<BiPoly> a, b;
    double ts = time_once([&] { a = brute_force_list_serial(C, rcv, threshold, cap); });
    double tp = time_once([&] { b = brute_force_list(C, rcv, threshold, cap); });
    bool equal = a.size() == b.size();
    for (std::size_t i = 0; equal && i < a.size(); ++i) equal = bi_equal(a[i], b[i]);
    report("oracle scan GF(" + std::to_string(F->q()) + ") q^" + std::to_string(s * t) +
               " messages",
           ts, tp, equal);
}

}  // namespace

int main(int argc, char** argv) {
    bool big = argc > 1 && std::string(argv[1]) == "--big";
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP: both columns run serially\n");
#endif
    bench_nullspace(field_create(71, 1), 600, 700, 1);
    bench_nullspace(field_create(3, 2), 300, 350, 2);
    bench_distance(field_create(3, 2), 2, 3);
    bench_oracle(field_create(11, 1), 2, 3, 2, 2000000);
    if (big) {
        bench_nullspace(field_create(71, 1), 2000, 2400, 3);
        bench_distance(field_create(5, 1), 3, 3);
    }
    return 0;
}
