#pragma once

#include <array>
#include <utility>

#include "rmm/branches.hpp"
#include "rmm/params.hpp"

namespace rmm {

enum class LimitModelTag {
    Cauchy,            // classical linear elasticity with the macro moduli
    Cosserat,          // skew-constrained micro-distortion
    InternalVariable,  // alpha1 = alpha2 = alpha3 = 0
    CoupleStress,      // indeterminate couple stress (displacement only)
};

/// Non-dispersive classical branches at one wavenumber:
/// omega = sqrt((2 mu_macro + lambda_macro)/rho) k (longitudinal) and
/// omega = sqrt(mu_macro/rho) k (transverse).
std::pair<double, double> cauchy_curves(const MacroModuli& m, double rho,
                                        double k);

/// Large-k slopes of the Cosserat dispersion curves:
/// (c1, c2, c3, c4) = (c_m_vd, c_s, lim_{eta1->inf} c_m_dr, c_p).
std::array<double, 4> cosserat_asymptotes(const MaterialParams& p);

/// Plane-wave dispersion of the weighted Cosserat model: a non-dispersive
/// longitudinal line, a 2x2 coupled transverse block (multiplicity 2) and
/// the uncoupled rotational branch. Uses mu_e, lambda_e, mu_c, L_c, rho,
/// eta2 and the alpha weights only.
BranchSet cosserat_branches(const MaterialParams& p, const KGrid& grid);

/// The 2x2 transverse Cosserat block at wavenumber k, ascending
/// eigenfrequencies.
std::pair<double, double> cosserat_transverse_pair(const MaterialParams& p,
                                                   double k);

/// Full model with the curvature energy switched off (alpha == 0 enforced).
BranchSet internal_variable_branches(const MaterialParams& p,
                                     const KGrid& grid);

/// Indeterminate couple stress model: two acoustic branches only. The
/// longitudinal one is exactly omega = c_p k (the curvature energy contains
/// no longitudinal contribution); the transverse one carries the
/// L_c^2-weighted stiffening omega^2 = (mu_e/rho) k^2 (1 + L_c^2 (alpha1 +
/// alpha2) k^2 / 4).
BranchSet couple_stress_branches(const MaterialParams& p, const KGrid& grid);

std::pair<double, double> couple_stress_pair(const MaterialParams& p,
                                             double k);

}  // namespace rmm
