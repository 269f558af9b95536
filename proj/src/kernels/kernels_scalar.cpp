#include "qmeas/kernels.hpp"

// Reference kernels. Plain loops, no intrinsics; the SIMD variants must
// reproduce these within rounding.

namespace qmeas::kern {

namespace {

void cgemm_scalar(cplx* c, const cplx* a, const cplx* b,
                  std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx ail = a[i * k + l];
            if (ail == cplx(0.0, 0.0)) continue;
            const cplx* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
        }
    }
}

cplx cdotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void caxpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void cger_scalar(cplx* a, cplx alpha, const cplx* x, const cplx* y,
                 std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx ax = alpha * x[i];
        cplx* arow = a + i * n;
        for (std::size_t j = 0; j < n; ++j) arow[j] += ax * std::conj(y[j]);
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", cgemm_scalar, cdotc_scalar, caxpy_scalar,
                         cger_scalar};
    return ops;
}

} // namespace qmeas::kern
