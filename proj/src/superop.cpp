#include "posmap/superop.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "posmap/rng.hpp"

namespace posmap {

SuperOperator superop_from_action(
    int n, int k, const std::function<HermitianMatrix(const HermitianMatrix&)>& action) {
    if (n < 1 || k < 1) throw std::invalid_argument("superop_from_action: dims must be >= 1");
    const HermitianBasis bn = hermitian_basis(n);
    SuperOperator s;
    s.src_dim = n;
    s.dst_dim = k;
    s.matrix = RMatrix(k * k, n * n);
    for (int a = 0; a < n * n; ++a) {
        const HermitianMatrix img = action(bn.elements[static_cast<std::size_t>(a)]);
        if (img.dim() != k)
            throw std::invalid_argument("superop_from_action: action output has wrong dimension");
        const std::vector<double> col = basis_coords(img);
        for (int r = 0; r < k * k; ++r) s.matrix(r, a) = col[static_cast<std::size_t>(r)];
    }
    return s;
}

SuperOperator identity_superop(int n) {
    if (n < 1) throw std::invalid_argument("identity_superop: n must be >= 1");
    SuperOperator s;
    s.src_dim = n;
    s.dst_dim = n;
    s.matrix = RMatrix::identity(n * n);
    return s;
}

HermitianMatrix apply(const SuperOperator& s, const HermitianMatrix& a) {
    if (a.dim() != s.src_dim)
        throw std::invalid_argument("apply: matrix dimension does not match src_dim");
    const std::vector<double> x = basis_coords(a);
    const std::vector<double> y = matvec(s.matrix, x);
    return matrix_from_coords(s.dst_dim, y);
}

SuperOperator compose(const SuperOperator& s2, const SuperOperator& s1) {
    if (s1.dst_dim != s2.src_dim)
        throw std::invalid_argument("compose: inner dimensions do not match");
    SuperOperator r;
    r.src_dim = s1.src_dim;
    r.dst_dim = s2.dst_dim;
    r.matrix = matmul(s2.matrix, s1.matrix);
    return r;
}

double check_unital(const SuperOperator& s) {
    const HermitianMatrix img = apply(s, HermitianMatrix::identity(s.src_dim));
    return schatten_norm(img - HermitianMatrix::identity(s.dst_dim), PNorm::inf);
}

double check_trace_preserving(const SuperOperator& s) {
    // tr of a coordinate vector is the sum of its diagonal-unit entries; the
    // off-diagonal basis elements are traceless.
    const int n = s.src_dim;
    const int k = s.dst_dim;
    double worst = 0.0;
    for (int a = 0; a < n * n; ++a) {
        double out_trace = 0.0;
        for (int d = 0; d < k; ++d) out_trace += s.matrix(d, a);
        const double in_trace = (a < n) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(out_trace - in_trace));
    }
    return worst;
}

namespace {

struct TrialOutcome {
    double lambda_min;
    std::vector<cplx> vec;
};

TrialOutcome run_trial(const SuperOperator& s, std::uint64_t seed, std::int64_t trial) {
    SplitMix64 rng = derive_stream(seed, static_cast<std::uint64_t>(trial));
    std::vector<cplx> x = haar_unit_vector(s.src_dim, rng);
    CMatrix proj(s.src_dim, s.src_dim);
    for (int i = 0; i < s.src_dim; ++i)
        for (int j = 0; j < s.src_dim; ++j)
            proj(i, j) = x[static_cast<std::size_t>(i)] * std::conj(x[static_cast<std::size_t>(j)]);
    const HermitianMatrix img = apply(s, HermitianMatrix::symmetrized(proj));
    const std::vector<double> eigs = hermitian_eigenvalues(img);
    return TrialOutcome{eigs.back(), std::move(x)};
}

VerificationReport falsify(const SuperOperator& s, int trials, std::uint64_t seed, double tol,
                           bool parallel) {
    if (trials < 1) throw std::invalid_argument("positivity_falsification: trials must be >= 1");
    VerificationReport rep;
    rep.residual_unital = check_unital(s);
    rep.residual_trace = check_trace_preserving(s);
    rep.trials = trials;
    rep.tol = tol;

    double global_min = std::numeric_limits<double>::infinity();
    std::int64_t first_bad = -1;
    std::vector<cplx> first_bad_vec;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
    {
        double local_min = std::numeric_limits<double>::infinity();
        std::int64_t local_bad = -1;
        std::vector<cplx> local_bad_vec;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (int t = 0; t < trials; ++t) {
            TrialOutcome out = run_trial(s, seed, t);
            local_min = std::min(local_min, out.lambda_min);
            if (out.lambda_min < -tol && (local_bad < 0 || t < local_bad)) {
                local_bad = t;
                local_bad_vec = std::move(out.vec);
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            global_min = std::min(global_min, local_min);
            if (local_bad >= 0 && (first_bad < 0 || local_bad < first_bad)) {
                first_bad = local_bad;
                first_bad_vec = std::move(local_bad_vec);
            }
        }
    }

    rep.positivity_min = global_min;
    rep.counterexample_trial = first_bad;
    if (first_bad >= 0) rep.counterexample = std::move(first_bad_vec);
    return rep;
}

}  // namespace

VerificationReport positivity_falsification(const SuperOperator& s, int trials,
                                            std::uint64_t seed, double tol) {
    return falsify(s, trials, seed, tol, true);
}

VerificationReport positivity_falsification_serial(const SuperOperator& s, int trials,
                                                   std::uint64_t seed, double tol) {
    return falsify(s, trials, seed, tol, false);
}

}  // namespace posmap
