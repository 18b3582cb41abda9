#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "posmap/basis.hpp"
#include "posmap/hermitian.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

// Linear map H_n -> H_k as a real k^2 x n^2 matrix over the canonical
// Hermitian bases. Real entries over Hermitian bases make hermiticity
// preservation structural.
struct SuperOperator {
    int src_dim = 0;
    int dst_dim = 0;
    RMatrix matrix;
};

// Column a = coordinates of action(basis_n[a]) in basis_k. The action must be
// linear (caller's contract); outputs are checked for dimension, and a
// non-Hermitian action output surfaces as the HermitianMatrix validation
// error it raises.
SuperOperator superop_from_action(
    int n, int k, const std::function<HermitianMatrix(const HermitianMatrix&)>& action);

SuperOperator identity_superop(int n);

HermitianMatrix apply(const SuperOperator& s, const HermitianMatrix& a);

// compose(s2, s1) acts as s2 after s1.
SuperOperator compose(const SuperOperator& s2, const SuperOperator& s1);

// ||S(I_n) - I_k||_inf; unital iff <= caller's tolerance.
double check_unital(const SuperOperator& s);

// max over canonical basis elements E of |tr S(E) - tr E|; bounds the trace
// defect on all of H_n by linearity.
double check_trace_preserving(const SuperOperator& s);

struct VerificationReport {
    double residual_unital = 0.0;
    double residual_trace = 0.0;
    double positivity_min = 0.0;
    int trials = 0;
    double tol = 0.0;
    std::int64_t counterexample_trial = -1;  // -1 when none found
    std::optional<std::vector<cplx>> counterexample;  // unit vector x with lambda_min(S(xx*)) < -tol
};

// Samples `trials` Haar unit vectors x (one derived RNG stream per trial
// index, so the result is independent of execution order) and scans
// lambda_min(S(xx*)). Rank-one projectors suffice: they are the extreme rays
// of the PSD cone. Reports the minimum and the lowest-index counterexample
// below -tol. Parallelized across trials.
VerificationReport positivity_falsification(const SuperOperator& s, int trials,
                                            std::uint64_t seed, double tol);

// Serial reference with identical output, kept for testing and benchmarking.
VerificationReport positivity_falsification_serial(const SuperOperator& s, int trials,
                                                   std::uint64_t seed, double tol);

}  // namespace posmap
