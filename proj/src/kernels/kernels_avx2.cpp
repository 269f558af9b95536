// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must check cpu_supports_avx2() before dispatching
// here. Complex numbers are processed two per 256-bit register in
// interleaved (re, im) layout.

#if defined(__x86_64__) || defined(_M_X64)

#include "qmeas/kernels.hpp"

#include <immintrin.h>

namespace qmeas::kern {

namespace {

inline const double* dp(const cplx* p) {
    return reinterpret_cast<const double*>(p);
}
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

// y[0..n) += alpha * x[0..n)
inline void axpy_body(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        const __m256d t = _mm256_mul_pd(_mm256_permute_pd(xv, 0x5), ai);
        // even lanes: xr*ar - xi*ai, odd lanes: xi*ar + xr*ai
        const __m256d prod = _mm256_fmaddsub_pd(xv, ar, t);
        const __m256d yv = _mm256_add_pd(_mm256_loadu_pd(dp(y + i)), prod);
        _mm256_storeu_pd(dp(y + i), yv);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void cgemm_avx2(cplx* c, const cplx* a, const cplx* b,
                std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t l = 0; l < k; ++l) {
            const cplx ail = a[i * k + l];
            if (ail == cplx(0.0, 0.0)) continue;
            axpy_body(crow, ail, b + l * n, n);
        }
    }
}

cplx cdotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        const __m256d yv = _mm256_loadu_pd(dp(y + i));
        // lanes: (xr*yr, xi*yi, ...) -> all add into the real part
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        // lanes: (xi*yr, xr*yi, ...) -> imag = odd lanes - even lanes
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, acc_im);
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    double im = (im4[1] + im4[3]) - (im4[0] + im4[2]);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void caxpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
    axpy_body(y, alpha, x, n);
}

void cger_avx2(cplx* a, cplx alpha, const cplx* x, const cplx* y,
               std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx ax = alpha * x[i];
        const __m256d ar = _mm256_set1_pd(ax.real());
        const __m256d ai = _mm256_set1_pd(ax.imag());
        cplx* arow = a + i * n;
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            const __m256d yv = _mm256_loadu_pd(dp(y + j));
            const __m256d t1 = _mm256_mul_pd(yv, ar);
            // arow += ax * conj(y): even lanes ar*yr + ai*yi,
            // odd lanes ai*yr - ar*yi
            const __m256d prod =
                _mm256_fmsubadd_pd(_mm256_permute_pd(yv, 0x5), ai, t1);
            const __m256d av =
                _mm256_add_pd(_mm256_loadu_pd(dp(arow + j)), prod);
            _mm256_storeu_pd(dp(arow + j), av);
        }
        for (; j < n; ++j) arow[j] += ax * std::conj(y[j]);
    }
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{"avx2", cgemm_avx2, cdotc_avx2, caxpy_avx2,
                         cger_avx2};
    return ops;
}

} // namespace qmeas::kern

#endif // x86_64
