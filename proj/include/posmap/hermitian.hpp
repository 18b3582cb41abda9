#pragma once

#include <span>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

inline constexpr double kHermiticityTol = 1e-12;

enum class DefinitenessClass { PSD, NSD, INDEFINITE, ZERO };

enum class PNorm { one, inf };

// Validated n x n complex Hermitian matrix. The checked constructor
// symmetrizes inputs whose asymmetry is within kHermiticityTol and rejects
// anything worse; symmetrized() is the unchecked path for matrices that are
// Hermitian up to roundoff by construction (products, reconstructions).
class HermitianMatrix {
public:
    explicit HermitianMatrix(const CMatrix& m);

    static HermitianMatrix symmetrized(const CMatrix& m);
    static HermitianMatrix zero(int n);
    static HermitianMatrix identity(int n);
    static HermitianMatrix diagonal(std::span<const double> d);
    static HermitianMatrix diagonal(std::initializer_list<double> d) {
        return diagonal(std::span<const double>(d.begin(), d.size()));
    }

    int dim() const { return m_.rows(); }
    const CMatrix& mat() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

private:
    struct trusted_tag {};
    HermitianMatrix(CMatrix m, trusted_tag) : m_(std::move(m)) {}

    CMatrix m_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);
inline HermitianMatrix operator-(const HermitianMatrix& a) { return -1.0 * a; }

double trace(const HermitianMatrix& a);

// Eigensystem with eigenvalues sorted non-increasing; eigenvector column i
// pairs with eigenvalue i.
struct Spectrum {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;
};

// A = plus - minus with both parts PSD on orthogonal supports.
struct JordanDecomposition {
    HermitianMatrix plus;
    HermitianMatrix minus;
};

// Cyclic Jacobi with complex rotations. Deterministic pivot order; throws
// std::runtime_error if the off-diagonal mass has not dropped below
// 1e-12*||A||_F after 100 sweeps.
Spectrum eig_hermitian(const HermitianMatrix& a);

// Eigenvalues only (no accumulation of the eigenvector matrix), sorted
// non-increasing. Same rotation sequence as eig_hermitian.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

// Eigenvalues with |lambda| below this go to the plus part of the Jordan
// split (zeros belong with the positive group).
double jordan_zero_tolerance(const HermitianMatrix& a);
double jordan_zero_tolerance(std::span<const double> eigenvalues);

JordanDecomposition jordan_decompose(const HermitianMatrix& a);

double schatten_norm(const HermitianMatrix& a, PNorm p);

// Partial-sum dominance of sorted-descending x over y with equal totals
// (tolerance 1e-10 on every comparison). Throws on length mismatch.
bool majorizes(std::span<const double> x, std::span<const double> y);

DefinitenessClass definiteness_class(const HermitianMatrix& a, double tol);

const char* to_string(DefinitenessClass c);

}  // namespace posmap
