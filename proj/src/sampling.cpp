#include "qmeas/sampling.hpp"

#include <cmath>

namespace qmeas {

double Rng::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on explicit uniforms; u1 in (0, 1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

Vec haar_vector(std::size_t dim, Rng& rng) {
    Vec v(dim);
    for (auto& c : v) c = rng.complex_gauss();
    normalize(v);
    return v;
}

Matrix random_unitary(std::size_t dim, Rng& rng) {
    // Gram-Schmidt on Ginibre columns; re-orthogonalized once for stability
    Matrix u(dim, dim);
    std::vector<Vec> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec c(dim);
        for (auto& z : c) z = rng.complex_gauss();
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const cplx ov = dot(cols[k], c);
                for (std::size_t i = 0; i < dim; ++i) c[i] -= ov * cols[k][i];
            }
        normalize(c);
        cols[j] = std::move(c);
    }
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
    return u;
}

Matrix random_hermitian(std::size_t dim, Rng& rng) {
    Matrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a(i, i) = rng.gauss();
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx z = rng.complex_gauss();
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

namespace {
Matrix with_spectrum(const Matrix& u, const std::vector<double>& lam) {
    const std::size_t n = lam.size();
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = u(i, k);
        m.add_outer(cplx(lam[k], 0.0), col, col);
    }
    m.hermitize();
    return m;
}
} // namespace

Effect random_effect(std::size_t dim, Rng& rng) {
    const Matrix u = random_unitary(dim, rng);
    std::vector<double> lam(dim);
    for (auto& l : lam) l = rng.uniform();
    return Effect(with_spectrum(u, lam));
}

State random_state(std::size_t dim, Rng& rng) {
    const Matrix u = random_unitary(dim, rng);
    std::vector<double> w(dim);
    double sum = 0.0;
    for (auto& x : w) {
        x = -std::log(1.0 - rng.uniform()); // exponential -> flat simplex
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return State(with_spectrum(u, w));
}

State random_pure_state(std::size_t dim, Rng& rng) {
    return State::pure(haar_vector(dim, rng));
}

} // namespace qmeas
