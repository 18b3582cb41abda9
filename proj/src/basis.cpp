#include "posmap/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace posmap {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

HermitianBasis hermitian_basis(int n) {
    if (n < 1) throw std::invalid_argument("hermitian_basis: n must be >= 1");
    HermitianBasis b;
    b.dim = n;
    b.elements.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        CMatrix e(n, n);
        e(i, i) = 1.0;
        b.elements.push_back(HermitianMatrix::symmetrized(e));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            CMatrix sym(n, n);
            sym(i, j) = kInvSqrt2;
            sym(j, i) = kInvSqrt2;
            b.elements.push_back(HermitianMatrix::symmetrized(sym));
            CMatrix asym(n, n);
            asym(i, j) = cplx(0.0, -kInvSqrt2);
            asym(j, i) = cplx(0.0, kInvSqrt2);
            b.elements.push_back(HermitianMatrix::symmetrized(asym));
        }
    }
    return b;
}

std::vector<double> basis_coords(const HermitianMatrix& a) {
    const int n = a.dim();
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) c.push_back(a(i, i).real());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            c.push_back(kSqrt2 * a(i, j).real());
            c.push_back(-kSqrt2 * a(i, j).imag());
        }
    }
    return c;
}

HermitianMatrix matrix_from_coords(int n, std::span<const double> coords) {
    if (n < 1) throw std::invalid_argument("matrix_from_coords: n must be >= 1");
    if (coords.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("matrix_from_coords: expected n^2 coordinates");
    CMatrix m(n, n);
    std::size_t at = 0;
    for (int i = 0; i < n; ++i) m(i, i) = coords[at++];
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double cs = coords[at++];
            const double ck = coords[at++];
            const cplx v(kInvSqrt2 * cs, -kInvSqrt2 * ck);
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix::symmetrized(m);
}

}  // namespace posmap
