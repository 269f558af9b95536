#include "qmeas/observables.hpp"

#include "qmeas/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace qmeas {

DiscretePOM::DiscretePOM(std::vector<std::string> outcomes,
                         std::vector<Effect> effects)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
    if (effects_.empty() || outcomes_.size() != effects_.size())
        throw ValidationError("DiscretePOM: outcome/effect count mismatch");
    const std::size_t d = effects_.front().dim();
    Matrix sum(d, d);
    for (const auto& e : effects_) {
        if (e.dim() != d)
            throw ValidationError("DiscretePOM: mixed effect dimensions");
        sum += e.op();
    }
    sum -= Matrix::identity(d);
    if (sum.max_abs() > 1e-9) {
        std::ostringstream os;
        os << "DiscretePOM: effects sum to I + " << sum.max_abs();
        throw ValidationError(os.str());
    }
    std::map<std::string, int> seen;
    for (const auto& o : outcomes_)
        if (++seen[o] > 1)
            throw ValidationError("DiscretePOM: duplicate outcome label '" + o +
                                  "'");
}

std::size_t DiscretePOM::index_of(const std::string& outcome) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
        if (outcomes_[i] == outcome) return i;
    throw ValidationError("DiscretePOM: unknown outcome '" + outcome + "'");
}

DiscretePOM DiscretePOM::sharp_from_basis(const Matrix& u,
                                          std::vector<std::string> outcomes) {
    const std::size_t n = u.rows();
    if (outcomes.size() != n)
        throw ValidationError("sharp_from_basis: need one outcome per column");
    std::vector<Effect> effs;
    effs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = u(i, k);
        effs.emplace_back(outer(col, col));
    }
    return DiscretePOM(std::move(outcomes), std::move(effs));
}

bool DiscretePOM::is_sharp(double tol) const {
    for (const auto& e : effects_) {
        Matrix d = e.op() * e.op();
        d -= e.op();
        if (d.max_abs() > tol) return false;
    }
    return true;
}

SmearingMatrix::SmearingMatrix(std::size_t n_out, std::size_t n_in,
                               std::vector<double> entries)
    : n_out_(n_out), n_in_(n_in), entries_(std::move(entries)) {
    if (entries_.size() != n_out_ * n_in_ || n_out_ == 0 || n_in_ == 0)
        throw ValidationError("SmearingMatrix: entry count mismatch");
    for (double v : entries_)
        if (v < 0.0)
            throw ValidationError("SmearingMatrix: negative entry");
    for (std::size_t j = 0; j < n_in_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n_out_; ++i) col += (*this)(i, j);
        if (std::abs(col - 1.0) > 1e-12) {
            std::ostringstream os;
            os << "SmearingMatrix: column " << j << " sums to " << col;
            throw ValidationError(os.str());
        }
    }
}

SmearingMatrix SmearingMatrix::identity(std::size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
    return SmearingMatrix(n, n, std::move(e));
}

DiscretePOM smear_discrete(const DiscretePOM& sharp, const SmearingMatrix& m) {
    if (m.n_in() != sharp.size())
        throw ValidationError("smear_discrete: smearing column count must "
                              "match outcome count");
    if (!sharp.is_sharp())
        throw ValidationError("smear_discrete: input POM must be projection "
                              "valued");
    const std::size_t d = sharp.dim();
    std::vector<Effect> out;
    std::vector<std::string> labels;
    out.reserve(m.n_out());
    for (std::size_t i = 0; i < m.n_out(); ++i) {
        Matrix acc(d, d);
        for (std::size_t j = 0; j < sharp.size(); ++j)
            acc.add_scaled(cplx(m(i, j), 0.0), sharp.effect(j).op());
        out.emplace_back(std::move(acc));
        labels.push_back("s" + std::to_string(i));
    }
    return DiscretePOM(std::move(labels), std::move(out));
}

GridPositionMeasure::GridPositionMeasure(double x0, double dx, std::size_t n)
    : x0_(x0), dx_(dx), n_(n) {
    if (n_ == 0) throw ValidationError("GridPositionMeasure: empty grid");
    if (!(dx_ > 0.0))
        throw ValidationError("GridPositionMeasure: spacing must be positive");
}

Projection GridPositionMeasure::projection(std::size_t k) const {
    if (k >= n_) throw ValidationError("GridPositionMeasure: index out of range");
    Vec v(n_, cplx(0.0, 0.0));
    v[k] = 1.0;
    return Projection::rank1(v);
}

Effect smear_position(const GridPositionMeasure& qm, const SmearingKernel& e,
                      const GridBin& bin) {
    if (bin.hi < bin.lo) throw ValidationError("smear_position: empty bin");
    double total = 0.0;
    for (double w : e.weights) {
        if (w < 0.0)
            throw ValidationError("smear_position: kernel weight negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError("smear_position: kernel must sum to 1");

    const std::size_t n = qm.size();
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double coeff = 0.0;
        for (std::size_t j = 0; j < e.weights.size(); ++j) {
            const int shifted = static_cast<int>(k) -
                                (e.first_offset + static_cast<int>(j));
            if (shifted >= bin.lo && shifted <= bin.hi) coeff += e.weights[j];
        }
        m(k, k) = coeff;
    }
    return Effect(std::move(m));
}

namespace {
std::pair<std::string, std::string> split_pair(const std::string& label) {
    const auto pos = label.find(',');
    if (pos == std::string::npos || label.find(',', pos + 1) != std::string::npos)
        throw ValidationError("marginals: outcome '" + label +
                              "' is not a product label 'a,b'");
    return {label.substr(0, pos), label.substr(pos + 1)};
}
} // namespace

std::pair<DiscretePOM, DiscretePOM> marginals(const DiscretePOM& joint) {
    std::vector<std::string> la, lb;
    std::map<std::pair<std::string, std::string>, std::size_t> cell;
    for (std::size_t i = 0; i < joint.size(); ++i) {
        auto [a, b] = split_pair(joint.outcome(i));
        if (std::find(la.begin(), la.end(), a) == la.end()) la.push_back(a);
        if (std::find(lb.begin(), lb.end(), b) == lb.end()) lb.push_back(b);
        cell[{a, b}] = i;
    }
    if (la.size() * lb.size() != joint.size())
        throw ValidationError("marginals: labels do not form a complete "
                              "product grid");
    const std::size_t d = joint.dim();
    std::vector<Effect> ea, eb;
    for (const auto& a : la) {
        Matrix acc(d, d);
        for (const auto& b : lb) acc += joint.effect(cell.at({a, b})).op();
        ea.emplace_back(std::move(acc));
    }
    for (const auto& b : lb) {
        Matrix acc(d, d);
        for (const auto& a : la) acc += joint.effect(cell.at({a, b})).op();
        eb.emplace_back(std::move(acc));
    }
    return {DiscretePOM(la, std::move(ea)), DiscretePOM(lb, std::move(eb))};
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

const Matrix kPauliX{{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}};
const Matrix kPauliY{{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}};
const Matrix kPauliZ{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}};

Matrix bloch_dot_sigma(const BlochVector& v) {
    Matrix m(2, 2);
    m(0, 0) = v.z;
    m(1, 1) = -v.z;
    m(0, 1) = cplx(v.x, -v.y);
    m(1, 0) = cplx(v.x, v.y);
    return m;
}

namespace {
void check_bloch_norm(const BlochVector& a, const char* what) {
    if (a.norm() > 1.0 + 1e-12) {
        std::ostringstream os;
        os << what << ": Bloch norm " << a.norm() << " exceeds 1";
        throw ValidationError(os.str());
    }
}
} // namespace

Effect unbiased_qubit_effect(const BlochVector& a) {
    check_bloch_norm(a, "unbiased_qubit_effect");
    Matrix m = Matrix::identity(2);
    m += bloch_dot_sigma(a);
    m *= cplx(0.5, 0.0);
    return Effect(std::move(m));
}

DiscretePOM unbiased_qubit_pom(const BlochVector& a) {
    return DiscretePOM({"+", "-"},
                       {unbiased_qubit_effect(a),
                        unbiased_qubit_effect(a.scaled(-1.0))});
}

JointQubitResult construct_joint_qubit(const BlochVector& a,
                                       const BlochVector& b) {
    check_bloch_norm(a, "construct_joint_qubit");
    check_bloch_norm(b, "construct_joint_qubit");
    const double sum = (a + b).norm();
    const double diff = (a - b).norm();
    const double criterion = sum + diff;
    JointQubitResult res;
    res.criterion = criterion;
    res.gamma = 0.5 * (sum - diff);
    if (criterion > 2.0) {
        res.feasible = false;
        return res;
    }
    res.feasible = true;
    std::vector<std::string> labels;
    std::vector<Effect> effs;
    for (int j : {+1, -1})
        for (int k : {+1, -1}) {
            Matrix m = Matrix::identity(2);
            m *= cplx(1.0 + j * k * res.gamma, 0.0);
            m += bloch_dot_sigma(a.scaled(j) + b.scaled(k));
            m *= cplx(0.25, 0.0);
            labels.push_back(std::string(j > 0 ? "+" : "-") + "," +
                             (k > 0 ? "+" : "-"));
            effs.emplace_back(std::move(m));
        }
    res.pom = DiscretePOM(std::move(labels), std::move(effs));
    return res;
}

} // namespace qmeas
