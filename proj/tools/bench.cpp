// Benchmark of the positivity-falsification kernel: OpenMP-parallel trials
// against the serial reference, on a synthesized map. Also times one suite
// at 1 thread vs all threads. Results must match bit for bit.

#include <cstdint>
#include <cstdio>
#include <string>

#include "posmap/harness.hpp"
#include "posmap/superop.hpp"
#include "posmap/synthesis.hpp"

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

using namespace posmap;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int trials = 50000;
    std::uint64_t seed = 0;
    if (argc > 1) trials = std::stoi(argv[1]);
    if (argc > 2) seed = std::stoull(argv[2]);

    InstanceSpec spec;
    spec.dim_min = spec.dim_max = 6;
    spec.target = RelationTarget::satisfy_ptp;
    spec.seed = seed;
    const auto [a, b] = generate_pair(spec);
    const SynthResult r = synth_ptp(a, b);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("map H_%d -> H_%d, %d falsification trials, %d threads\n", r.op.src_dim,
                r.op.dst_dim, trials, threads);

    double t0 = now_seconds();
    const VerificationReport serial = positivity_falsification_serial(r.op, trials, seed, 1e-8);
    double t1 = now_seconds();
    const VerificationReport parallel = positivity_falsification(r.op, trials, seed, 1e-8);
    double t2 = now_seconds();

    const double ts = t1 - t0;
    const double tp = t2 - t1;
    std::printf("serial   : %8.3f s  (%.2f us/trial)\n", ts, 1e6 * ts / trials);
    std::printf("parallel : %8.3f s  (%.2f us/trial)\n", tp, 1e6 * tp / trials);
    std::printf("speedup  : %8.2fx\n", ts / tp);

    const bool same = serial.positivity_min == parallel.positivity_min &&
                      serial.counterexample_trial == parallel.counterexample_trial;
    std::printf("results identical: %s (positivity_min = %.3e)\n", same ? "yes" : "NO",
                parallel.positivity_min);

    const int suite_trials = 100;
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    t0 = now_seconds();
    const SuiteReport s1 = run_suite("measures-closed-form", suite_trials, seed, 1e-8);
    t1 = now_seconds();
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    const SuiteReport s2 = run_suite("measures-closed-form", suite_trials, seed, 1e-8);
    t2 = now_seconds();
    std::printf("suite measures-closed-form (%d trials): 1 thread %.3f s, %d threads %.3f s\n",
                suite_trials, t1 - t0, threads, t2 - t1);
    bool suite_same = s1.passed() == s2.passed();
    for (std::size_t i = 0; i < s1.properties.size() && suite_same; ++i)
        suite_same = s1.properties[i].checks == s2.properties[i].checks &&
                     s1.properties[i].failures == s2.properties[i].failures &&
                     s1.properties[i].worst == s2.properties[i].worst;
    std::printf("suite reports identical: %s\n", suite_same ? "yes" : "NO");

    return (same && suite_same) ? 0 : 1;
}
