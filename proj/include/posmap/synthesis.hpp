#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posmap/hermitian.hpp"
#include "posmap/matrix.hpp"
#include "posmap/superop.hpp"

namespace posmap {

// Raised when a requested transformation cannot exist for the given pair.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FeasibilityVerdict {
    bool feasible = false;
    std::vector<std::pair<std::string, double>> margins;
    std::optional<std::string> failing_condition;
};

enum class ConstructionKind {
    pu_convex_hull,
    pu_equal_norms,
    pu_2x2_shrink,
    ptp_composed_equal_norms,
    ptp_shrink_step,
    scaling_ray,
};

const char* to_string(ConstructionKind k);

// Ranks (1-based within the positive/negative eigenvalue groups) driving the
// equal-infinity-norm unital construction.
struct IndexSets {
    std::vector<int> i1_plus, i1_minus;
    std::vector<int> i2_plus, i2_minus;
    std::vector<int> i3_plus, i3_minus;
    std::vector<int> i4_plus, i4_minus;
};

// For pu_2x2_shrink: the target top eigenvalue p, the derived mixing weight
// q, and the fixed bottom magnitude x. For ptp_shrink_step: the step fraction
// p, the achieved reduction q, and the top eigenvalue x it acted on.
struct ShrinkParams {
    double p = 0.0;
    double q = 0.0;
    double x = 0.0;
};

// Provenance of a synthesized map: which construction produced it and with
// which weights / index sets / shrink parameters.
struct ConstructionCert {
    ConstructionKind kind = ConstructionKind::pu_convex_hull;
    std::optional<RMatrix> weights;  // rows: source spectral ranks, cols: target ranks
    std::optional<IndexSets> index_sets;
    std::optional<ShrinkParams> shrink_params;
    std::vector<ConstructionCert> steps;
};

struct SynthResult {
    SuperOperator op;
    ConstructionCert cert;
};

// PU existence: lambda_max(A) >= lambda_max(B) and lambda_min(A) <=
// lambda_min(B), margin tolerance 1e-9.
FeasibilityVerdict feasible_pu(const HermitianMatrix& a, const HermitianMatrix& b);

// PTP existence: tr A = tr B (within 1e-9) and ||A_+||_1 >= ||B_+||_1
// (margin tolerance 1e-9); the negative-part margin is implied and reported.
FeasibilityVerdict feasible_ptp(const HermitianMatrix& a, const HermitianMatrix& b);

// PU map with S(A)=B from convex-hull weights: each eigenvalue of B written
// as a two-point convex combination of lambda_max(A) and lambda_min(A).
// Throws infeasible_error when feasible_pu rejects the pair.
SynthResult synth_pu(const HermitianMatrix& a, const HermitianMatrix& b);

// Unital map between indefinite matrices with equal ||.||_inf norms of both
// parts, built from the four-way index-set case analysis on rank-paired
// spectra. Unitality is checked as a hard postcondition.
SynthResult synth_pu_equal_norms(const HermitianMatrix& a, const HermitianMatrix& b);

// PU map on H_2 sending diag(1,-x) to diag(p,-x), mixing weight
// q = (p+x)/(1+x). Requires 0 < p < 1 and x > 0.
SuperOperator synth_pu_shrink_2x2(double p, double x);

// PTP map on H_2 acting as (a,b) -> (p a, b + (1-p) a) on the diagonal and
// discarding the off-diagonal part. Requires 0 <= p <= 1.
SuperOperator synth_ptp_shrink_2x2(double p);

// PTP map with S(A)=B for equal trace-norm parts, composed as (rotate into
// A's eigenbasis) then (block pinch + trace redistribution onto B's diagonal
// blocks) then (rotate out of B's eigenbasis).
SynthResult synth_ptp_equal_norms(const HermitianMatrix& a, const HermitianMatrix& b);

// General PTP synthesis: delegates to synth_ptp_equal_norms when the part
// norms already match, otherwise bridges A to an intermediate with matching
// norms by iterated pinch-and-shrink steps (each individually PTP), then
// composes. Throws infeasible_error when feasible_ptp rejects the pair.
SynthResult synth_ptp(const HermitianMatrix& a, const HermitianMatrix& b);

// Phi(X) = (x* X x / x* A x) B. Linear with Phi(A)=B exactly; positive
// whenever B is PSD, which is how it shows every PSD matrix sits below any
// non-definite one. Requires x* A x > 1e-10.
SuperOperator scaling_ray_map(const HermitianMatrix& a, const HermitianMatrix& b,
                              std::span<const cplx> x);

// Same with x defaulted to a top eigenvector of A.
SuperOperator scaling_ray_map(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace posmap
