#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Low-level dense complex kernels. Everything above this layer (matrices,
// eigensolvers, channels, experiments) funnels its arithmetic through these
// four primitives, so a scalar reference implementation and a SIMD variant
// can be swapped at runtime and equivalence-tested against each other.
//
// Layout convention: matrices are row-major, contiguous std::complex<double>.

namespace qmeas::kern {

using cplx = std::complex<double>;

struct Ops {
    const char* name;

    // c (m x n) = a (m x k) * b (k x n); c must not alias a or b.
    void (*cgemm)(cplx* c, const cplx* a, const cplx* b,
                  std::size_t m, std::size_t k, std::size_t n);

    // sum_i conj(x[i]) * y[i]
    cplx (*cdotc)(const cplx* x, const cplx* y, std::size_t n);

    // y[i] += alpha * x[i]
    void (*caxpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);

    // a (m x n) += alpha * x * y^dagger, i.e. a[i][j] += alpha*x[i]*conj(y[j])
    void (*cger)(cplx* a, cplx alpha, const cplx* x, const cplx* y,
                 std::size_t m, std::size_t n);
};

// Always available; used as the ground truth in equivalence tests.
const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
// Compiled with AVX2+FMA codegen; only dispatched to when the CPU reports
// support at runtime.
const Ops& avx2_ops();
bool cpu_supports_avx2();
#endif

// The runtime-selected implementation. Picks the widest supported lane
// unless overridden by the QMEAS_KERNELS environment variable
// ("scalar" or "avx2") or by force_impl().
const Ops& active();

// Test hook: force a named implementation ("scalar", "avx2") or reset to
// automatic selection with nullptr. Throws ValidationError for unknown or
// unsupported names.
void force_impl(const char* name);

} // namespace qmeas::kern
