#include "posmap/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace posmap {

namespace {

void require_square(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument(std::string(who) + ": matrix must be square with dim >= 1");
}

double asymmetry(const CMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

CMatrix half_sum_with_adjoint(const CMatrix& m) {
    CMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        r(i, i) = cplx(m(i, i).real(), 0.0);
        for (int j = i + 1; j < m.cols(); ++j) {
            cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return r;
}

}  // namespace

HermitianMatrix::HermitianMatrix(const CMatrix& m) : m_() {
    require_square(m, "HermitianMatrix");
    if (asymmetry(m) > kHermiticityTol)
        throw std::invalid_argument("HermitianMatrix: input is not Hermitian within 1e-12");
    m_ = half_sum_with_adjoint(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const CMatrix& m) {
    require_square(m, "HermitianMatrix::symmetrized");
    return HermitianMatrix(half_sum_with_adjoint(m), trusted_tag{});
}

HermitianMatrix HermitianMatrix::zero(int n) {
    if (n < 1) throw std::invalid_argument("HermitianMatrix::zero: dim must be >= 1");
    return HermitianMatrix(CMatrix(n, n), trusted_tag{});
}

HermitianMatrix HermitianMatrix::identity(int n) {
    if (n < 1) throw std::invalid_argument("HermitianMatrix::identity: dim must be >= 1");
    return HermitianMatrix(CMatrix::identity(n), trusted_tag{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
    if (d.empty()) throw std::invalid_argument("HermitianMatrix::diagonal: dim must be >= 1");
    CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return HermitianMatrix(std::move(m), trusted_tag{});
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix::symmetrized(a.mat() + b.mat());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix::symmetrized(a.mat() - b.mat());
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix::symmetrized(s * a.mat());
}

double trace(const HermitianMatrix& a) {
    double t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += a(i, i).real();
    return t;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-12;

double offdiag_frobenius(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) s += 2.0 * std::norm(m(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q): phase the (p,q) plane so the
// pivot becomes real, then apply the classical symmetric rotation. Updates
// a in place; accumulates the unitary into v when v is non-null.
void rotate(CMatrix& a, CMatrix* v, int p, int q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r < 1e-300) {
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        return;
    }
    const cplx w = apq / r;  // unit phase, pivot*conj(w) is real

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (std::abs(tau) > 1e150) {
        t = 1.0 / (2.0 * tau);
    } else {
        const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
        t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // rotated basis columns: g_p = c e_p - s conj(w) e_q, g_q = s e_p + c conj(w) e_q
    const cplx swc = s * std::conj(w);
    const cplx cwc = c * std::conj(w);

    const int n = a.rows();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        const cplx np = c * akp - swc * akq;
        const cplx nq = s * akp + cwc * akq;
        a(k, p) = np;
        a(p, k) = std::conj(np);
        a(k, q) = nq;
        a(q, k) = std::conj(nq);
    }
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    if (v) {
        for (int k = 0; k < n; ++k) {
            const cplx vkp = (*v)(k, p);
            const cplx vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - swc * vkq;
            (*v)(k, q) = s * vkp + cwc * vkq;
        }
    }
}

// Returns unsorted diagonal + optional eigenvector accumulation.
void jacobi(CMatrix a, std::vector<double>& eigs, CMatrix* vectors) {
    const int n = a.rows();
    CMatrix v;
    if (vectors) v = CMatrix::identity(n);

    const double scale = frobenius(a);
    const double stop = kOffDiagTol * scale;
    bool converged = (offdiag_frobenius(a) <= stop);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, vectors ? &v : nullptr, p, q);
        converged = (offdiag_frobenius(a) <= stop);
    }
    if (!converged)
        throw std::runtime_error("eig_hermitian: Jacobi did not converge within 100 sweeps");

    eigs.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a(i, i).real();
    if (vectors) *vectors = std::move(v);
}

std::vector<int> descending_order(const std::vector<double>& eigs) {
    std::vector<int> idx(eigs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return eigs[static_cast<std::size_t>(i)] > eigs[static_cast<std::size_t>(j)];
    });
    return idx;
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& a) {
    std::vector<double> eigs;
    CMatrix v;
    jacobi(a.mat(), eigs, &v);

    const std::vector<int> order = descending_order(eigs);
    Spectrum sp;
    sp.eigenvalues.resize(eigs.size());
    sp.eigenvectors = CMatrix(a.dim(), a.dim());
    for (int col = 0; col < a.dim(); ++col) {
        const int src = order[static_cast<std::size_t>(col)];
        sp.eigenvalues[static_cast<std::size_t>(col)] = eigs[static_cast<std::size_t>(src)];
        for (int row = 0; row < a.dim(); ++row) sp.eigenvectors(row, col) = v(row, src);
    }
    return sp;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a) {
    std::vector<double> eigs;
    jacobi(a.mat(), eigs, nullptr);
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

double jordan_zero_tolerance(std::span<const double> eigenvalues) {
    double norm_inf = 0.0;
    for (double l : eigenvalues) norm_inf = std::max(norm_inf, std::abs(l));
    return 1e-10 * std::max(1.0, norm_inf);
}

double jordan_zero_tolerance(const HermitianMatrix& a) {
    return jordan_zero_tolerance(hermitian_eigenvalues(a));
}

JordanDecomposition jordan_decompose(const HermitianMatrix& a) {
    const Spectrum sp = eig_hermitian(a);
    const int n = a.dim();
    const double ztol = jordan_zero_tolerance(sp.eigenvalues);

    CMatrix plus(n, n);
    CMatrix minus(n, n);
    for (int l = 0; l < n; ++l) {
        const double lam = sp.eigenvalues[static_cast<std::size_t>(l)];
        const bool positive_side = (lam >= -ztol);
        const double weight = positive_side ? std::max(lam, 0.0) : -lam;
        if (weight == 0.0) continue;
        CMatrix& target = positive_side ? plus : minus;
        for (int i = 0; i < n; ++i) {
            const cplx vi = sp.eigenvectors(i, l);
            for (int j = 0; j < n; ++j)
                target(i, j) += weight * vi * std::conj(sp.eigenvectors(j, l));
        }
    }
    return JordanDecomposition{HermitianMatrix::symmetrized(plus),
                               HermitianMatrix::symmetrized(minus)};
}

double schatten_norm(const HermitianMatrix& a, PNorm p) {
    const std::vector<double> eigs = hermitian_eigenvalues(a);
    if (p == PNorm::one) {
        double s = 0.0;
        for (double l : eigs) s += std::abs(l);
        return s;
    }
    double m = 0.0;
    for (double l : eigs) m = std::max(m, std::abs(l));
    return m;
}

bool majorizes(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("majorizes: sequences must have equal length");
    constexpr double tol = 1e-10;

    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());

    double px = 0.0;
    double py = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        px += xs[i];
        py += ys[i];
        if (px < py - tol) return false;
    }
    px += xs.empty() ? 0.0 : xs.back();
    py += ys.empty() ? 0.0 : ys.back();
    return std::abs(px - py) <= tol;
}

DefinitenessClass definiteness_class(const HermitianMatrix& a, double tol) {
    if (tol < 0.0) throw std::invalid_argument("definiteness_class: tol must be >= 0");
    const std::vector<double> eigs = hermitian_eigenvalues(a);
    const double lmax = eigs.front();
    const double lmin = eigs.back();
    if (std::abs(lmax) <= tol && std::abs(lmin) <= tol) return DefinitenessClass::ZERO;
    if (lmin >= -tol) return DefinitenessClass::PSD;
    if (lmax <= tol) return DefinitenessClass::NSD;
    return DefinitenessClass::INDEFINITE;
}

const char* to_string(DefinitenessClass c) {
    switch (c) {
        case DefinitenessClass::PSD: return "PSD";
        case DefinitenessClass::NSD: return "NSD";
        case DefinitenessClass::INDEFINITE: return "INDEFINITE";
        case DefinitenessClass::ZERO: return "ZERO";
    }
    return "?";
}

}  // namespace posmap
