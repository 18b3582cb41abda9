#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posmap/hermitian.hpp"

namespace posmap {

enum class SpectrumLaw { uniform, prescribed, forced_indefinite };

enum class RelationTarget {
    satisfy_pu,
    violate_pu,
    satisfy_ptp,
    violate_ptp,
    equal_inf_norms,
    equal_one_norms,
};

// Pair-generation request. Pairs meet the relation target by construction
// with margins (or violations) of at least 1e-6; the pair targets need
// indefinite matrices, so they require dim_min >= 2 and the
// forced_indefinite law.
struct InstanceSpec {
    int dim_min = 2;
    int dim_max = 6;
    SpectrumLaw law = SpectrumLaw::forced_indefinite;
    std::vector<double> prescribed;  // eigenvalues, for SpectrumLaw::prescribed
    RelationTarget target = RelationTarget::satisfy_pu;
    std::uint64_t seed = 0;
};

// Haar-random eigenvectors (QR of a complex Gaussian with positive-diagonal
// R) with eigenvalues drawn per the law; deterministic per seed.
HermitianMatrix random_hermitian(int n, SpectrumLaw law, std::uint64_t seed,
                                 std::span<const double> prescribed = {});

std::pair<HermitianMatrix, HermitianMatrix> generate_pair(const InstanceSpec& spec);

struct PropertyResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    double worst = 0.0;  // largest violation magnitude observed
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<PropertyResult> properties;
    // One preformatted block per failing property (lowest failing trial):
    // matrices printed as standalone JSON documents re-loadable by the CLI.
    std::vector<std::string> counterexamples;
    bool passed() const;
};

// Named property suites covering the library's guarantees end to end.
// Trials are independent with derived per-trial streams and may run
// concurrently; reports are aggregation-order independent. Throws
// std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed, double tol);

std::vector<std::string> suite_names();

}  // namespace posmap
