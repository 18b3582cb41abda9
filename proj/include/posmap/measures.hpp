#pragma once

#include "posmap/hermitian.hpp"

namespace posmap {

// Measures of the lack of positive/negative semidefiniteness. Closed forms:
// mu_inf_minus(A) = ||A_-||_inf, mu_1_minus(A) = ||A_-||_1, and the plus
// variants are the same functionals of -A. Each is monotone under every PU
// (inf) or PTP (1) map and vanishes on the respective definite cone.
double mu_inf_minus(const HermitianMatrix& a);
double mu_1_minus(const HermitianMatrix& a);
double mu_inf_plus(const HermitianMatrix& a);
double mu_1_plus(const HermitianMatrix& a);

// inf_{X>=0} ||A - X||_p, attained in closed form (p=1 at X = A_+, p=inf at
// X = (A + ||A_-||_inf I)_+); equal to mu_p_minus(A).
double distance_to_psd_cone(const HermitianMatrix& a, PNorm p);

// The minimizer realizing distance_to_psd_cone.
HermitianMatrix psd_cone_projection(const HermitianMatrix& a, PNorm p);

// True iff A + qX >= -1e-10. Requires ||X||_p <= 1 + 1e-12 and q >= 0; any
// claimed robustness q below mu_p_minus(A) fails this for every admissible X.
bool robustness_lower_bound_certificate(const HermitianMatrix& a, PNorm p,
                                        const HermitianMatrix& x, double q);

}  // namespace posmap
