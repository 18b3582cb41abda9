#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace posmap {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Dimensions stay small (a few hundred at
// most), so there is no blocking or aliasing cleverness anywhere.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(check_size(rows, cols)) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

private:
    static std::size_t check_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("CMatrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix operator+(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("CMatrix: shape mismatch in +");
    CMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = x.data()[i] + y.data()[i];
    return r;
}

inline CMatrix operator-(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("CMatrix: shape mismatch in -");
    CMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = x.data()[i] - y.data()[i];
    return r;
}

inline CMatrix operator*(double s, const CMatrix& x) {
    CMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] = s * x.data()[i];
    return r;
}

inline CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("CMatrix: shape mismatch in *");
    CMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int l = 0; l < x.cols(); ++l) {
            const cplx xv = x(i, l);
            if (xv == 0.0) continue;
            for (int j = 0; j < y.cols(); ++j) r(i, j) += xv * y(l, j);
        }
    return r;
}

inline CMatrix adjoint(const CMatrix& x) {
    CMatrix r(x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(j, i) = std::conj(x(i, j));
    return r;
}

inline double max_abs(const CMatrix& x) {
    double m = 0.0;
    for (const cplx& v : x.data()) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("CMatrix: shape mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < x.data().size(); ++i)
        m = std::max(m, std::abs(x.data()[i] - y.data()[i]));
    return m;
}

inline double frobenius(const CMatrix& x) {
    double s = 0.0;
    for (const cplx& v : x.data()) s += std::norm(v);
    return std::sqrt(s);
}

// Dense row-major real matrix (superoperator coordinates).
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RMatrix: negative dimension");
    }

    static RMatrix identity(int n) {
        RMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

inline RMatrix matmul(const RMatrix& x, const RMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("RMatrix: shape mismatch in matmul");
    RMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int l = 0; l < x.cols(); ++l) {
            const double xv = x(i, l);
            if (xv == 0.0) continue;
            for (int j = 0; j < y.cols(); ++j) r(i, j) += xv * y(l, j);
        }
    return r;
}

inline std::vector<double> matvec(const RMatrix& m, std::span<const double> v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("RMatrix: shape mismatch in matvec");
    std::vector<double> r(static_cast<std::size_t>(m.rows()), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

}  // namespace posmap
