#pragma once

#include "qmeas/observables.hpp"
#include "qmeas/rng.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qmeas {

/// Truncated Fock space with hbar = 1, q = (a + a^dag)/sqrt(2),
/// p = (a - a^dag)/(i sqrt(2)); coherent-state width 1/2 per quadrature.
class FockSpace {
public:
    explicit FockSpace(std::size_t n_levels);

    std::size_t levels() const { return n_; }
    const Matrix& lowering() const { return a_; }
    Matrix raising() const { return a_.dagger(); }
    Matrix position() const;
    Matrix momentum() const;

    /// Coherent amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!) for n < levels;
    /// norm < 1 by the truncation tail.
    Vec coherent_truncated(cplx alpha) const;
    Vec coherent_normalized(cplx alpha) const;
    double truncation_deficit(cplx alpha) const; // 1 - ||truncated||^2

private:
    std::size_t n_;
    Matrix a_;
};

/// Square phase-space grid covering [-extent, extent]^2 with n_side cells
/// per axis.
struct PhaseSpaceGrid {
    double extent;
    std::size_t n_side;

    double cell_width() const {
        return 2.0 * extent / static_cast<double>(n_side);
    }
};

/// Covariant phase-space POM from coherent states: one effect
/// (dq dp / 2 pi) |alpha_c><alpha_c| per cell (alpha_c at the cell center)
/// plus a remainder outcome "overflow" absorbing I - sum so the POM
/// normalizes exactly. Construction fails (NumericalError, with the
/// measured deficit) if the remainder is not PSD.
class HusimiPom {
public:
    HusimiPom(FockSpace fock, PhaseSpaceGrid grid);

    const FockSpace& fock() const { return fock_; }
    const PhaseSpaceGrid& grid() const { return grid_; }
    const DiscretePOM& pom() const { return *pom_; }

    std::size_t n_cells() const { return grid_.n_side * grid_.n_side; }
    std::size_t overflow_index() const { return n_cells(); }
    std::pair<double, double> cell_center(std::size_t cell) const;
    double cell_weight() const; // dq dp / 2 pi
    const Vec& cell_coherent(std::size_t cell) const {
        return coherent_[cell];
    }

    double remainder_norm() const { return remainder_norm_; }

    /// Born probabilities, cells first, overflow last.
    std::vector<double> probabilities(const Vec& psi_normalized) const;
    std::vector<double> probabilities(const State& rho) const;

    /// Position marginal: one effect per q column plus the overflow effect.
    DiscretePOM marginal_q_pom() const;

private:
    FockSpace fock_;
    PhaseSpaceGrid grid_;
    std::vector<Vec> coherent_;
    std::optional<DiscretePOM> pom_;
    double remainder_norm_ = 0.0;
};

enum class TrackDynamics { None, Harmonic };
enum class CollapseRule { CoherentCollapse, Luders };

struct TrackParams {
    cplx alpha0;
    TrackDynamics dynamics = TrackDynamics::None;
    double omega = 1.0;
    double dt = 0.1;
    int n_steps = 50;
    std::uint64_t seed = 0;
    CollapseRule rule = CollapseRule::CoherentCollapse;
};

struct TrackStep {
    int step;
    double t;
    double q;
    double p;
    double norm_deficit; // truncation loss of the collapsed state
};

struct TrackRecord {
    std::vector<TrackStep> steps;
    bool halted_early = false; // an overflow outcome was sampled
};

/// Repeated approximately-repeatable phase-space measurement: each step
/// samples a cell readout from the current state's Husimi probabilities,
/// collapses onto the coherent state at the readout, then evolves. If the
/// overflow outcome is drawn the simulation stops with a partial record.
TrackRecord track_simulate(const HusimiPom& pom, const TrackParams& params);

} // namespace qmeas
