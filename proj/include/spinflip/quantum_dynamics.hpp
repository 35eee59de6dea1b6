#pragma once

#include "spinflip/params.hpp"
#include "spinflip/spin_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinflip {

/// H = Jx(x)I + (k1/2j) Jz^2(x)I + I(x)Jx + (k2/2j) I(x)Jz^2 + (eps/j) Jz(x)Jz
ComplexMatrix build_hamiltonian(const SpinParams& p);

/// Real spectrum (ascending) and orthonormal eigenvectors of a Hermitian
/// matrix. Eigenvector phases are fixed by making the largest-magnitude
/// component real positive.
struct SpectralDecomposition {
    Eigen::VectorXd energies;
    ComplexMatrix vectors;

    Eigen::Index dim() const { return energies.size(); }
};

SpectralDecomposition diagonalize(const ComplexMatrix& hamiltonian);

/// |psi(t)> = V exp(-iEt) V^dag |psi0>
ComplexVector evolve(const SpectralDecomposition& spec, const ComplexVector& psi0, double t);

struct FidelityCurve {
    Eigen::VectorXd times;
    Eigen::VectorXd values;
};

/// F(t) = |<onto| U(t) |from>|^2 on the given time grid.
FidelityCurve fidelity_curve(const SpectralDecomposition& spec, const ComplexVector& from,
                             const ComplexVector& onto, const Eigen::VectorXd& t_grid);

/// Bit-flip fidelity of Eq-type |<1|U(t)|0>|^2 for the coupled-spin system.
FidelityCurve fidelity_curve(const SpinParams& p, const Eigen::VectorXd& t_grid);

/// 2000 points on [0, 3 t_cl] in the complex-unstable regime; a fixed
/// window [0, 100] where no classical transfer time exists.
Eigen::VectorXd default_time_grid(const SpinParams& p, int points = 2000);

struct TransferPeak {
    double time;
    double value;
};

/// First strict local maximum above `threshold`, refined by a quadratic
/// through the three samples around the discrete peak. Empty when the
/// sampled window contains no such maximum.
std::optional<TransferPeak> transfer_time(const FidelityCurve& curve, double threshold = 0.1);

/// transfer_time on the default grid, doubling the window (and the sample
/// count) up to `max_extensions` times if no peak is found.
std::optional<TransferPeak> find_transfer(const SpectralDecomposition& spec,
                                          const ComplexVector& from, const ComplexVector& onto,
                                          const SpinParams& p, double threshold = 0.1,
                                          int points = 2000, int max_extensions = 3);

struct OverlapEntry {
    int index;
    double energy;
    double overlap;
};

/// The `count` eigenpairs with largest |<Psi_n|state>|^2, sorted by overlap
/// descending (ties: lower eigenvalue index first).
std::vector<OverlapEntry> max_overlap_levels(const SpectralDecomposition& spec,
                                             const ComplexVector& state, int count);

/// t_dyn = 2 pi / |E+ - E-| from the eigenstates with maximal overlap with
/// (|0> +- |1>)/sqrt(2). Empty when the pair is numerically degenerate
/// (splitting below 1e-300, "exceeds horizon").
std::optional<double> tunneling_time(const SpectralDecomposition& spec, const ComplexVector& bit0,
                                     const ComplexVector& bit1);
std::optional<double> tunneling_time(const SpinParams& p);

struct LevelSweepRow {
    double epsilon = 0.0;
    Eigen::VectorXd energies;
    OverlapEntry bit0{};
    OverlapEntry bit1{};
    OverlapEntry plus{};
    OverlapEntry minus{};
    double bit0_top2 = 0.0;
    std::optional<double> t_dyn;
    std::optional<TransferPeak> transfer;
    std::string status = "ok";
};

/// Per-epsilon diagnostics over an ascending coupling grid. Failures are
/// reported in the row status, not thrown.
std::vector<LevelSweepRow> level_sweep(const SpinParams& base, const std::vector<double>& eps_grid,
                                       int workers = 1);

} // namespace spinflip
