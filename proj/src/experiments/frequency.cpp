#include "qmeas/experiments/frequency.hpp"

#include "qmeas/errors.hpp"
#include "qmeas/matrix.hpp"

#include <cmath>

namespace qmeas {

FreqStats frequency_operator_stats(double p_plus, int n, FreqMode mode) {
    if (p_plus < 0.0 || p_plus > 1.0)
        throw ValidationError("frequency_operator_stats: p outside [0,1]");
    if (n < 1)
        throw ValidationError("frequency_operator_stats: n must be >= 1");
    if (mode == FreqMode::ClosedForm)
        return {p_plus, p_plus * (1.0 - p_plus) / static_cast<double>(n)};

    if (n > 12)
        throw ValidationError(
            "frequency_operator_stats: tensor mode limited to n <= 12");

    const std::size_t dim = std::size_t{1} << n;
    Matrix p_single(2, 2);
    p_single(0, 0) = 1.0; // P_+ = |+><+| in its own eigenbasis

    Matrix f(dim, dim);
    const cplx w(1.0 / static_cast<double>(n), 0.0);
    for (int k = 0; k < n; ++k)
        add_kron3(f, std::size_t{1} << k, p_single,
                  std::size_t{1} << (n - 1 - k), w);

    Vec psi1{cplx(std::sqrt(p_plus), 0.0), cplx(std::sqrt(1.0 - p_plus), 0.0)};
    Vec psi = psi1;
    for (int k = 1; k < n; ++k) psi = kron(psi, psi1);

    const Vec fpsi = f.apply(psi);
    const double mean = dot(psi, fpsi).real();
    const double second = dot(fpsi, fpsi).real(); // <F psi|F psi> = <F^2>
    return {mean, second - mean * mean};
}

} // namespace qmeas
