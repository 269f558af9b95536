#include "qmeas/matrix.hpp"

#include "qmeas/errors.hpp"

#include <cmath>

namespace qmeas {

Matrix::Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("ragged initializer for Matrix");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

namespace {
void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix shape mismatch");
}
} // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same_shape(*this, o);
    kern::active().caxpy(data_.data(), cplx(1.0, 0.0), o.data(),
                         data_.size());
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same_shape(*this, o);
    kern::active().caxpy(data_.data(), cplx(-1.0, 0.0), o.data(),
                         data_.size());
    return *this;
}

Matrix& Matrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    Matrix c(rows_, o.cols_);
    kern::active().cgemm(c.data(), data(), o.data(), rows_, cols_, o.cols_);
    return c;
}

void Matrix::add_scaled(cplx alpha, const Matrix& o) {
    check_same_shape(*this, o);
    kern::active().caxpy(data_.data(), alpha, o.data(), data_.size());
}

void Matrix::add_outer(cplx alpha, const Vec& x, const Vec& y) {
    if (x.size() != rows_ || y.size() != cols_)
        throw ValidationError("outer-product shape mismatch");
    kern::active().cger(data_.data(), alpha, x.data(), y.data(), rows_, cols_);
}

Matrix Matrix::dagger() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx Matrix::trace() const {
    if (!square()) throw ValidationError("trace of non-square matrix");
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::hermiticity_deviation() const {
    if (!square()) throw ValidationError("hermiticity check on non-square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) -
                                     std::conj((*this)(j, i))));
    return m;
}

void Matrix::hermitize() {
    if (!square()) throw ValidationError("hermitize on non-square matrix");
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, i) = cplx((*this)(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < cols_; ++j) {
            const cplx avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
            (*this)(i, j) = avg;
            (*this)(j, i) = std::conj(avg);
        }
    }
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw ValidationError("matvec shape mismatch");
    Vec y(rows_);
    kern::active().cgemm(y.data(), data(), x.data(), rows_, cols_, 1);
    return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

void add_kron3(Matrix& f, std::size_t dim_left, const Matrix& p,
               std::size_t dim_right, cplx scale) {
    const std::size_t dp = p.rows();
    const std::size_t dim = dim_left * dp * dim_right;
    if (f.rows() != dim || f.cols() != dim)
        throw ValidationError("add_kron3 shape mismatch");
    for (std::size_t l = 0; l < dim_left; ++l)
        for (std::size_t i = 0; i < dp; ++i)
            for (std::size_t j = 0; j < dp; ++j) {
                const cplx pij = p(i, j);
                if (pij == cplx(0.0, 0.0)) continue;
                const std::size_t row0 = (l * dp + i) * dim_right;
                const std::size_t col0 = (l * dp + j) * dim_right;
                for (std::size_t r = 0; r < dim_right; ++r)
                    f(row0 + r, col0 + r) += scale * pij;
            }
}

cplx dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw ValidationError("dot length mismatch");
    return kern::active().cdotc(x.data(), y.data(), x.size());
}

double norm2(const Vec& x) {
    return kern::active().cdotc(x.data(), x.data(), x.size()).real();
}

double norm(const Vec& x) { return std::sqrt(norm2(x)); }

void normalize(Vec& x) {
    const double n = norm(x);
    if (n <= 0.0) throw NumericalError("cannot normalize zero vector");
    for (auto& v : x) v /= n;
}

Matrix outer(const Vec& x, const Vec& y) {
    Matrix m(x.size(), y.size());
    m.add_outer(cplx(1.0, 0.0), x, y);
    return m;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i * b.size() + j] = a[i] * b[j];
    return r;
}

cplx trace_product_hermitian(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.square())
        throw ValidationError("trace_product shape mismatch");
    // tr[A B] = sum_ik A_ik B_ki = sum_ik A_ik conj(B_ik) for Hermitian B
    return kern::active().cdotc(b.data(), a.data(),
                                a.rows() * a.cols());
}

} // namespace qmeas
