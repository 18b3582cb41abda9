#include "posmap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace posmap {

double mu_inf_minus(const HermitianMatrix& a) {
    const std::vector<double> eigs = hermitian_eigenvalues(a);
    return std::max(0.0, -eigs.back());
}

double mu_1_minus(const HermitianMatrix& a) {
    const std::vector<double> eigs = hermitian_eigenvalues(a);
    double s = 0.0;
    for (double l : eigs) s += std::max(0.0, -l);
    return s;
}

double mu_inf_plus(const HermitianMatrix& a) { return mu_inf_minus(-a); }

double mu_1_plus(const HermitianMatrix& a) { return mu_1_minus(-a); }

double distance_to_psd_cone(const HermitianMatrix& a, PNorm p) {
    return p == PNorm::one ? mu_1_minus(a) : mu_inf_minus(a);
}

HermitianMatrix psd_cone_projection(const HermitianMatrix& a, PNorm p) {
    if (p == PNorm::one) return jordan_decompose(a).plus;
    const double m = mu_inf_minus(a);
    const HermitianMatrix shifted = a + m * HermitianMatrix::identity(a.dim());
    return jordan_decompose(shifted).plus;
}

bool robustness_lower_bound_certificate(const HermitianMatrix& a, PNorm p,
                                        const HermitianMatrix& x, double q) {
    if (a.dim() != x.dim())
        throw std::invalid_argument("robustness_lower_bound_certificate: dimension mismatch");
    if (schatten_norm(x, p) > 1.0 + 1e-12)
        throw std::invalid_argument("robustness_lower_bound_certificate: ||X||_p exceeds 1");
    if (q < 0.0)
        throw std::invalid_argument("robustness_lower_bound_certificate: q must be >= 0");
    const HermitianMatrix sum = a + q * x;
    const std::vector<double> eigs = hermitian_eigenvalues(sum);
    return eigs.back() >= -1e-10;
}

}  // namespace posmap
