#pragma once

#include "qmeas/kernels.hpp"

#include <complex>
#include <initializer_list>
#include <vector>

namespace qmeas {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

/// Dense complex matrix, row-major. The arithmetic-heavy paths (multiply,
/// rank-1 updates, inner products) go through the runtime-dispatched
/// kernel layer.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    // Square matrix from nested initializer list (rows of entries).
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix diag(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cplx s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, double s) { return a *= cplx(s, 0.0); }
    friend Matrix operator*(double s, Matrix a) { return a *= cplx(s, 0.0); }

    Matrix operator*(const Matrix& o) const; // kernel cgemm

    // this += alpha * o (kernel caxpy over the flat storage)
    void add_scaled(cplx alpha, const Matrix& o);

    // this += alpha * x * y^dagger (kernel cger)
    void add_outer(cplx alpha, const Vec& x, const Vec& y);

    Matrix dagger() const;
    cplx trace() const;
    double max_abs() const;            // max entrywise magnitude
    double hermiticity_deviation() const; // max |A - A^dagger| entry
    void hermitize();                  // A <- (A + A^dagger)/2

    Vec apply(const Vec& x) const;     // matrix * vector

    friend Matrix kron(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

// f += scale * (I_{dim_left} (x) p (x) I_{dim_right}); touches only the
// structurally nonzero entries, so embedding small operators into large
// tensor-product spaces stays cheap.
void add_kron3(Matrix& f, std::size_t dim_left, const Matrix& p,
               std::size_t dim_right, cplx scale);

// sum_i conj(x_i) y_i via the kernel layer
cplx dot(const Vec& x, const Vec& y);
double norm2(const Vec& x);  // squared Euclidean norm
double norm(const Vec& x);
void normalize(Vec& x);
Matrix outer(const Vec& x, const Vec& y); // x * y^dagger
Vec kron(const Vec& a, const Vec& b);

// trace(a*b) assuming b is Hermitian: reduces to a flat cdotc
cplx trace_product_hermitian(const Matrix& a, const Matrix& b);

} // namespace qmeas
