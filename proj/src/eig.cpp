#include "qmeas/eig.hpp"

#include "qmeas/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qmeas {

Vec EigenSystem::eigenvector(std::size_t k) const {
    Vec v(vectors.rows());
    for (std::size_t i = 0; i < vectors.rows(); ++i) v[i] = vectors(i, k);
    return v;
}

Matrix EigenSystem::assemble(const std::vector<double>& mapped) const {
    const std::size_t n = vectors.rows();
    if (mapped.size() != n)
        throw ValidationError("assemble: eigenvalue count mismatch");
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (mapped[k] == 0.0) continue;
        r.add_outer(cplx(mapped[k], 0.0), eigenvector(k), eigenvector(k));
    }
    r.hermitize();
    return r;
}

namespace {

// Closed-form 2x2 Hermitian eigensystem. Also serves as the oracle for the
// iterative path in tests.
EigenSystem eig2(const Matrix& a) {
    const double p = a(0, 0).real();
    const double q = a(1, 1).real();
    const cplx b = a(0, 1);
    const double babs = std::abs(b);
    const double mean = 0.5 * (p + q);
    const double disc = std::hypot(0.5 * (p - q), babs);
    const double l1 = mean + disc, l2 = mean - disc;

    EigenSystem es;
    es.eigenvalues = {l1, l2};
    es.vectors = Matrix(2, 2);
    if (babs == 0.0) {
        if (p >= q) {
            es.vectors(0, 0) = 1.0;
            es.vectors(1, 1) = 1.0;
        } else {
            es.vectors(1, 0) = 1.0;
            es.vectors(0, 1) = 1.0;
        }
        return es;
    }
    // eigenvector for l1 from whichever formula is better conditioned;
    // the second column is the exact orthogonal complement
    cplx v0, v1;
    if (std::abs(l1 - p) >= std::abs(l1 - q)) {
        v0 = b;
        v1 = cplx(l1 - p, 0.0);
    } else {
        v0 = cplx(l1 - q, 0.0);
        v1 = std::conj(b);
    }
    const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nrm;
    v1 /= nrm;
    es.vectors(0, 0) = v0;
    es.vectors(1, 0) = v1;
    es.vectors(0, 1) = -std::conj(v1);
    es.vectors(1, 1) = std::conj(v0);
    return es;
}

// Householder reduction of Hermitian h (modified in place) to tridiagonal
// form; accumulates the unitary into z. Plain loops: dims here are small
// and the hot kernels live elsewhere.
void tridiagonalize(Matrix& h, Matrix& z) {
    const std::size_t n = h.rows();
    std::vector<cplx> v, p, w, t;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1; // trailing block size
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm < 1e-300) {
            for (std::size_t i = k + 1; i < n; ++i) {
                h(i, k) = 0.0;
                h(k, i) = 0.0;
            }
            continue;
        }
        const cplx x0 = h(k + 1, k);
        const double x0abs = std::abs(x0);
        const cplx alpha =
            (x0abs > 0.0) ? cplx(-xnorm, 0.0) * (x0 / x0abs) : cplx(-xnorm, 0.0);

        v.assign(m, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) v[i] = h(k + 1 + i, k);
        v[0] -= alpha;
        double vnorm = 0.0;
        for (const auto& c : v) vnorm += std::norm(c);
        vnorm = std::sqrt(vnorm);
        for (auto& c : v) c /= vnorm;

        // p = B v over the trailing block B = h[k+1: , k+1:]
        p.assign(m, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < m; ++j)
                acc += h(k + 1 + i, k + 1 + j) * v[j];
            p[i] = acc;
        }
        double kappa = 0.0; // v^dag p is real for Hermitian B
        for (std::size_t i = 0; i < m; ++i)
            kappa += (std::conj(v[i]) * p[i]).real();
        w.assign(m, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < m; ++i) w[i] = 2.0 * (p[i] - kappa * v[i]);

        // B <- B - v w^dag - w v^dag
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                h(k + 1 + i, k + 1 + j) -=
                    v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);

        h(k + 1, k) = alpha;
        h(k, k + 1) = std::conj(alpha);
        for (std::size_t i = k + 2; i < n; ++i) {
            h(i, k) = 0.0;
            h(k, i) = 0.0;
        }

        // z[:, k+1:] -= 2 (z[:, k+1:] v) v^dag
        t.assign(n, cplx(0.0, 0.0));
        for (std::size_t r = 0; r < n; ++r) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < m; ++j) acc += z(r, k + 1 + j) * v[j];
            t[r] = acc;
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < m; ++j)
                z(r, k + 1 + j) -= 2.0 * t[r] * std::conj(v[j]);
    }
}

// Implicit-shift QL on a real symmetric tridiagonal (d, e), rotations
// accumulated into the complex columns of z.
void tql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e.resize(n, 0.0); // sentinel slot e[n-1]

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= DBL_EPSILON * dd + 1e-300) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 60)
                throw NumericalError("hermitian_eig: QL iteration failed to converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                const std::size_t i = ii;
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx fz = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * fz;
                    z(k, i) = c * z(k, i) - s * fz;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

EigenSystem eig_general(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix h = a;
    h.hermitize();
    Matrix z = Matrix::identity(n);
    tridiagonalize(h, z);

    // phase-rotate columns so the tridiagonal becomes real symmetric
    std::vector<double> d(n), er(n > 0 ? n - 1 : 0);
    std::vector<cplx> u(n, cplx(1.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = h(i, i).real();
        if (i + 1 < n) {
            const cplx ei = h(i, i + 1);
            const double eabs = std::abs(ei);
            er[i] = eabs;
            u[i + 1] = (eabs > 0.0) ? u[i] * (std::conj(ei) / eabs) : u[i];
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (u[j] == cplx(1.0, 0.0)) continue;
        for (std::size_t r = 0; r < n; ++r) z(r, j) *= u[j];
    }

    tql_implicit(d, er, z);

    EigenSystem es;
    es.eigenvalues = std::move(d);
    es.vectors = std::move(z);
    return es;
}

void sort_descending(EigenSystem& es) {
    const std::size_t n = es.eigenvalues.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return es.eigenvalues[i] > es.eigenvalues[j];
    });
    std::vector<double> dv(n);
    Matrix vs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dv[k] = es.eigenvalues[idx[k]];
        for (std::size_t r = 0; r < n; ++r) vs(r, k) = es.vectors(r, idx[k]);
    }
    es.eigenvalues = std::move(dv);
    es.vectors = std::move(vs);
}

} // namespace

EigenSystem hermitian_eig(const Matrix& a, double herm_tol) {
    if (!a.square() || a.rows() == 0)
        throw ValidationError("hermitian_eig: matrix must be square, dim >= 1");
    const double dev = a.hermiticity_deviation();
    if (dev > herm_tol) {
        std::ostringstream os;
        os << "hermitian_eig: input not Hermitian, max deviation " << dev
           << " exceeds tolerance " << herm_tol;
        throw NumericalError(os.str());
    }

    EigenSystem es;
    const std::size_t n = a.rows();
    if (n == 1) {
        es.eigenvalues = {a(0, 0).real()};
        es.vectors = Matrix::identity(1);
        return es;
    }
    Matrix h = a;
    h.hermitize();
    es = (n == 2) ? eig2(h) : eig_general(h);
    sort_descending(es);
    return es;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a, double herm_tol) {
    return hermitian_eig(a, herm_tol).eigenvalues;
}

Matrix operator_sqrt(const Matrix& a, double psd_tol) {
    EigenSystem es = hermitian_eig(a);
    std::vector<double> roots(es.eigenvalues.size());
    for (std::size_t k = 0; k < es.eigenvalues.size(); ++k) {
        double lam = es.eigenvalues[k];
        if (lam < -psd_tol) {
            std::ostringstream os;
            os << "operator_sqrt: eigenvalue " << lam
               << " below PSD tolerance -" << psd_tol;
            throw NumericalError(os.str());
        }
        // symmetric dead zone: the root map amplifies eigenvalue noise as
        // sqrt(|noise|), so anything within the PSD tolerance of 0 is
        // treated as an exact zero (contributes < psd_tol to root^2 = a)
        roots[k] = (lam > psd_tol) ? std::sqrt(lam) : 0.0;
    }
    return es.assemble(roots);
}

double operator_norm(const Matrix& a) {
    if (!a.square())
        throw ValidationError("operator_norm: matrix must be square");
    Matrix g = a.dagger() * a;
    g.hermitize();
    const double lmax = hermitian_eig(g).eigenvalues.front();
    return std::sqrt(std::max(lmax, 0.0));
}

double trace_norm_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.square())
        throw ValidationError("trace_norm_distance: dimension mismatch");
    Matrix d = a;
    d -= b;
    if (d.hermiticity_deviation() <= 1e-12) {
        // Hermitian difference: singular values are |eigenvalues|
        d.hermitize();
        double sum = 0.0;
        for (double lam : hermitian_eig(d).eigenvalues) sum += std::abs(lam);
        return sum;
    }
    Matrix g = d.dagger() * d;
    g.hermitize();
    double sum = 0.0;
    for (double lam : hermitian_eig(g).eigenvalues)
        sum += std::sqrt(std::max(lam, 0.0));
    return sum;
}

} // namespace qmeas
