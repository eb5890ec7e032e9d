#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmm/blocks.hpp"
#include "rmm/params.hpp"

namespace rmm {

enum class GridSpacing { Linear, Log };

struct KGrid {
    double k_min = 0.0;  // [1/m]
    double k_max = 0.0;  // [1/m]
    int count = 0;
    GridSpacing spacing = GridSpacing::Linear;

    /// Sample points, validating k_min >= 0 (> 0 for log), k_max > k_min
    /// and count >= 2.
    std::vector<double> points() const;
};

enum class BranchGroup { Longitudinal, Transverse, Uncoupled };

struct DispersionBranch {
    std::string label;  // LA, TA, LO1, LO2, TO1, TO2, LSO, TCVO, TRO
    BranchGroup group = BranchGroup::Longitudinal;
    int multiplicity = 1;
    std::vector<std::pair<double, double>> samples;  // (k, omega)
    bool bounded = false;

    double k_max() const {
        return samples.empty() ? 0.0 : samples.back().first;
    }
};

struct BranchSet {
    std::vector<double> k;
    std::vector<DispersionBranch> branches;

    int curve_count() const;  // sum of multiplicities
    const DispersionBranch& by_label(const std::string& label) const;
};

/// Samples the 12 dispersion branches of the full model on the grid.
/// Branch identity is the ascending-eigenvalue index within each block
/// group; transverse branches carry multiplicity 2. Boundedness is
/// classified on an internal log-spaced tail resample.
BranchSet compute_branches(const MaterialParams& p, const KGrid& grid);

struct AsymptoteEstimate {
    enum class Kind { Horizontal, Oblique };
    Kind kind = Kind::Oblique;
    double value = 0.0;  // slope [m/s] or level [rad/s]
};

/// Classifies the tail of a sampled branch: horizontal when the last-decade
/// secant slope has collapsed relative to the first decade, oblique
/// otherwise. Requires the branch to be sampled past 50/L_c (skipped when
/// L_c <= 0, where no curvature scale exists); throws InsufficientRange.
AsymptoteEstimate numeric_asymptote(const DispersionBranch& branch,
                                    double L_c);

struct BandGapReport {
    std::vector<std::pair<double, double>> gaps;  // open intervals [rad/s]
    double omega_min = 0.0;
    double omega_max = 0.0;
    int scan_points = 0;
};

/// Frequencies where no block admits a real nonnegative k^2 root cannot
/// propagate; maximal such runs become gap intervals with edges refined by
/// bisection to 1e-4 relative. The scan grid must be ascending with at
/// least 100 points.
BandGapReport detect_band_gaps(const MaterialParams& p,
                               std::span<const double> omega_grid);

/// Linear omega grid from 0 to slightly above the highest cut-off.
std::vector<double> default_omega_grid(const MaterialParams& p,
                                       int count = 1500);

/// Whether any block admits a propagating wavenumber at this frequency.
bool is_propagating(const MaterialParams& p, double omega);

/// Wavenumber by which every branch has settled into its asymptotic
/// regime: past 150/L_c and far past omega_max/c_min, where plateaus are
/// approached only like 1/k.
double asymptote_probe_k(const MaterialParams& p);

}  // namespace rmm
