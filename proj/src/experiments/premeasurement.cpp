#include "qmeas/experiments/premeasurement.hpp"

#include "qmeas/eig.hpp"
#include "qmeas/errors.hpp"

#include <cmath>

namespace qmeas {

namespace {

// partial trace over subsystem 1 (pointer) of a 4x4 operator
Matrix trace_out_pointer(const Matrix& m) {
    Matrix r(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return r;
}

Matrix trace_out_object(const Matrix& m) {
    Matrix r(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = m(i, j) + m(2 + i, 2 + j);
    return r;
}

} // namespace

PremeasurementResult premeasurement_demo(const State& object_state,
                                         const Matrix& basis) {
    if (object_state.dim() != 2)
        throw ValidationError("premeasurement_demo: object must be a qubit");
    if (basis.rows() != 2 || basis.cols() != 2)
        throw ValidationError("premeasurement_demo: basis must be 2x2");
    Matrix gram = basis.dagger() * basis;
    gram -= Matrix::identity(2);
    if (gram.max_abs() > 1e-9)
        throw ValidationError("premeasurement_demo: basis not orthonormal");
    if (object_state.purity_deficit() > 1e-9)
        throw ValidationError("premeasurement_demo: object state must be pure");

    // coupling U = sum_i (phi_i phi_i^dag) (x) U_i with U_0 = I, U_1 = X
    Vec phi0(2), phi1(2);
    for (std::size_t i = 0; i < 2; ++i) {
        phi0[i] = basis(i, 0);
        phi1[i] = basis(i, 1);
    }
    const Matrix flip{{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}};
    Matrix u = kron(outer(phi0, phi0), Matrix::identity(2));
    u += kron(outer(phi1, phi1), flip);

    Vec ptr0(2, cplx(0.0, 0.0));
    ptr0[0] = 1.0;
    const Matrix initial = kron(object_state.op(), outer(ptr0, ptr0));
    Matrix post_m = u * initial * u.dagger();
    post_m.hermitize();
    State post(std::move(post_m));

    const Matrix rho_ptr = trace_out_object(post.op());
    PremeasurementResult res{post, {0.0, 0.0}, {}, 0};
    for (std::size_t i = 0; i < 2; ++i)
        res.pointer_probs[i] =
            std::min(1.0, std::max(0.0, rho_ptr(i, i).real()));

    Matrix rho_obj = trace_out_pointer(post.op());
    rho_obj.hermitize();
    for (double lam : hermitian_eigenvalues(rho_obj)) {
        const double c = std::sqrt(std::max(lam, 0.0));
        res.schmidt_coefficients.push_back(c);
        if (c > 1e-9) ++res.schmidt_rank;
    }
    return res;
}

PremeasurementResult premeasurement_demo(const State& object_state) {
    return premeasurement_demo(object_state, Matrix::identity(2));
}

} // namespace qmeas
