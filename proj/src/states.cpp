#include "qmeas/states.hpp"

#include "qmeas/errors.hpp"

#include <cmath>
#include <sstream>

namespace qmeas {

namespace {

void check_dims(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw ValidationError(os.str());
    }
}

double clamp01(double x, double slack = 1e-12) {
    if (x < -slack || x > 1.0 + slack) {
        std::ostringstream os;
        os << "value " << x << " outside [0,1] beyond tolerance";
        throw NumericalError(os.str());
    }
    return std::min(1.0, std::max(0.0, x));
}

} // namespace

State::State(Matrix rho) : op_(std::move(rho)) {
    if (!op_.square() || op_.rows() == 0)
        throw ValidationError("State: matrix must be square, dim >= 1");
    const double tr = op_.trace().real();
    if (std::abs(tr - 1.0) > 1e-10 || std::abs(op_.trace().imag()) > 1e-10) {
        std::ostringstream os;
        os << "State: trace " << op_.trace() << " differs from 1";
        throw ValidationError(os.str());
    }
    const auto evs = hermitian_eigenvalues(op_); // rejects non-Hermitian
    if (evs.back() < -kPsdTol) {
        std::ostringstream os;
        os << "State: negative eigenvalue " << evs.back();
        throw ValidationError(os.str());
    }
}

State State::pure(const Vec& psi) {
    Vec v = psi;
    normalize(v);
    return State(outer(v, v));
}

double State::purity_deficit() const {
    return 1.0 - hermitian_eigenvalues(op_).front();
}

Effect::Effect(Matrix e) : op_(std::move(e)) {
    if (!op_.square() || op_.rows() == 0)
        throw ValidationError("Effect: matrix must be square, dim >= 1");
    EigenSystem es = hermitian_eig(op_);
    bool needs_clamp = false;
    for (double lam : es.eigenvalues) {
        if (lam < -kPsdTol || lam > 1.0 + kPsdTol) {
            std::ostringstream os;
            os << "Effect: eigenvalue " << lam << " outside [0,1] beyond "
               << kPsdTol;
            throw ValidationError(os.str());
        }
        if (lam < 0.0 || lam > 1.0) needs_clamp = true;
    }
    if (needs_clamp) {
        std::vector<double> clamped = es.eigenvalues;
        for (double& lam : clamped) lam = std::min(1.0, std::max(0.0, lam));
        op_ = es.assemble(clamped);
    }
}

Effect Effect::identity(std::size_t dim) { return Effect(Matrix::identity(dim)); }
Effect Effect::zero(std::size_t dim) { return Effect(Matrix::zero(dim)); }

Projection::Projection(Effect e) : effect_(std::move(e)) {
    const Matrix& m = effect_.op();
    Matrix sq = m * m;
    sq -= m;
    if (sq.max_abs() > 1e-9) {
        std::ostringstream os;
        os << "Projection: ||E^2 - E||_max = " << sq.max_abs()
           << " exceeds 1e-9";
        throw ValidationError(os.str());
    }
}

Projection Projection::rank1(const Vec& v) {
    Vec u = v;
    normalize(u);
    return Projection(Effect(outer(u, u)));
}

const char* to_string(PropertyVerdict v) {
    switch (v) {
    case PropertyVerdict::Actual: return "actual";
    case PropertyVerdict::Absent: return "absent";
    default: return "indeterminate";
    }
}

double degree_of_reality(const State& s, const Effect& e) {
    check_dims(s.dim(), e.dim(), "degree_of_reality");
    return clamp01(trace_product_hermitian(s.op(), e.op()).real());
}

bool is_eigenstate(const State& s, const Projection& p) {
    check_dims(s.dim(), p.dim(), "is_eigenstate");
    Matrix d = p.op() * s.op();
    d -= s.op();
    return d.max_abs() <= 1e-9;
}

PropertyStatus classify_property(const State& s, const Effect& e, double eps) {
    if (!(eps >= 0.0 && eps < 0.5))
        throw ValidationError("classify_property: eps must lie in [0, 1/2)");
    const double d = degree_of_reality(s, e);
    constexpr double guard = 1e-12;
    PropertyStatus st;
    st.degree = d;
    if (d >= 1.0 - eps - guard)
        st.verdict = PropertyVerdict::Actual;
    else if (d <= eps + guard)
        st.verdict = PropertyVerdict::Absent;
    else
        st.verdict = PropertyVerdict::Indeterminate;
    st.approximately_real = d > 0.5 + guard;
    st.approximately_absent = d < 0.5 - guard;
    return st;
}

bool is_regular(const Effect& e) {
    const auto evs = hermitian_eigenvalues(e.op());
    return evs.front() > 0.5 + 1e-12 && evs.back() < 0.5 - 1e-12;
}

Effect complement(const Effect& e) {
    Matrix c = Matrix::identity(e.dim());
    c -= e.op();
    return Effect(std::move(c));
}

SharpnessReport sharpness_report(const Effect& e) {
    Matrix d = e.op() * e.op();
    d *= cplx(-1.0, 0.0);
    d += e.op();
    const double overlap = operator_norm(d);
    return {overlap <= 1e-9, overlap};
}

std::vector<std::pair<double, Projection>>
spectral_decompose_effect(const Effect& e) {
    EigenSystem es = hermitian_eig(e.op());
    const std::size_t n = es.eigenvalues.size();
    std::vector<std::pair<double, Projection>> out;
    std::size_t k = 0;
    while (k < n) {
        std::size_t j = k;
        double wsum = 0.0;
        while (j < n && es.eigenvalues[k] - es.eigenvalues[j] <= 1e-9) {
            wsum += es.eigenvalues[j];
            ++j;
        }
        const double w = wsum / static_cast<double>(j - k);
        if (w > 1e-12) { // zero-weight blocks carry no part of the effect
            Matrix q(n, n);
            for (std::size_t i = k; i < j; ++i)
                q.add_outer(cplx(1.0, 0.0), es.eigenvector(i),
                            es.eigenvector(i));
            q.hermitize();
            out.emplace_back(w, Projection(std::move(q)));
        }
        k = j;
    }
    return out;
}

QubitDecomposition qubit_nonorthogonal_decomposition(const Effect& e,
                                                     const Projection& r) {
    if (e.dim() != 2 || r.dim() != 2)
        throw ValidationError("qubit decomposition: operators must be dim 2");
    const double tr = e.op().trace().real();
    if (std::abs(tr - 1.0) > 1e-10)
        throw ValidationError("qubit decomposition: effect must have trace 1");
    const auto evs = hermitian_eigenvalues(e.op());
    if (evs.front() >= 1.0 - 1e-12 || evs.back() <= 1e-12)
        throw ValidationError(
            "qubit decomposition: spectrum must lie strictly inside (0, 1)");
    // rank-1 check of r is enforced by its Projection invariant plus trace
    if (std::abs(r.op().trace().real() - 1.0) > 1e-9)
        throw ValidationError("qubit decomposition: R must be rank 1");

    // det(E - beta R) is linear in beta since det R = 0:
    //   det(E) - beta (tr E * tr R - tr[E R]) = det(E) - beta (1 - tr[E R])
    const Matrix& em = e.op();
    const double det_e =
        (em(0, 0) * em(1, 1) - em(0, 1) * em(1, 0)).real();
    const double tr_er = trace_product_hermitian(em, r.op()).real();
    const double denom = 1.0 - tr_er;
    if (denom <= 1e-12)
        throw NumericalError("qubit decomposition: tr[E R] too close to 1");
    const double beta = det_e / denom;
    Matrix rem = em;
    rem.add_scaled(cplx(-beta, 0.0), r.op());
    rem *= cplx(1.0 / (1.0 - beta), 0.0);
    rem.hermitize();
    return {beta, Projection(std::move(rem))};
}

} // namespace qmeas
