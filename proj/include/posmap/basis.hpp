#pragma once

#include <span>
#include <vector>

#include "posmap/hermitian.hpp"

namespace posmap {

// Orthonormal basis of H_n under <X,Y> = tr(XY), in the frozen canonical
// order: the n diagonal units E_ii (i ascending), then for each pair i<j in
// lexicographic order the symmetric element (E_ij+E_ji)/sqrt2 followed by the
// antisymmetric element u*(E_ji-E_ij)/sqrt2. Superoperator files depend on
// this order being bit-stable.
struct HermitianBasis {
    int dim = 0;
    std::vector<HermitianMatrix> elements;
};

HermitianBasis hermitian_basis(int n);

// Coordinates of A in the canonical basis of H_{A.dim()}, length n^2.
std::vector<double> basis_coords(const HermitianMatrix& a);

// Inverse of basis_coords.
HermitianMatrix matrix_from_coords(int n, std::span<const double> coords);

}  // namespace posmap
