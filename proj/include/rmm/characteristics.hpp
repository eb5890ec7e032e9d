#pragma once

#include <utility>
#include <vector>

#include "rmm/params.hpp"

namespace rmm {

enum class AsymptoteModel {
    Relaxed,           // alpha1, alpha2 > 0: two closed-form plateaus
    InternalVariable,  // alpha1 = alpha2 = alpha3 = 0
};

struct Cutoffs {
    double omega_s = 0.0;  // sqrt(2 (mu_e + mu_micro)/eta1)
    double omega_r = 0.0;  // sqrt(2 mu_c / eta2)
    double omega_p = 0.0;  // sqrt((3 (lambda_e+lambda_micro) + 2 (mu_e+mu_micro))/eta3)
};

struct ObliqueSlopes {
    double c_m_d = 0.0;   // sqrt(alpha1 mu_e L_c^2 / eta1)
    double c_m_vd = 0.0;  // sqrt((alpha1 + 2 alpha3) mu_e L_c^2 / (3 eta2))
    double c_m_dr = 0.0;  // (1/2) sqrt((eta1+eta2)/(eta1 eta2) (alpha1+alpha2) mu_e L_c^2)
    double c_s = 0.0;     // sqrt((mu_e + mu_c)/rho)
    double c_p = 0.0;     // sqrt((2 mu_e + lambda_e)/rho)
    double c_m_r = 0.0;   // sqrt((2 eta1+eta3)/(3 eta1 eta3) alpha2 mu_e L_c^2)

    std::vector<double> as_vector() const {
        return {c_m_d, c_m_vd, c_m_dr, c_s, c_p, c_m_r};
    }
};

struct Characteristics {
    Cutoffs cutoff;
    ObliqueSlopes slopes;
    std::vector<double> horiz;  // ascending, deduplicated [rad/s]
    AsymptoteModel horiz_model = AsymptoteModel::Relaxed;
    double slope_aco_long = 0.0;   // sqrt((2 mu_macro + lambda_macro)/rho)
    double slope_aco_trans = 0.0;  // sqrt(mu_macro / rho)
};

/// Cut-off frequencies of the optic branches (branch values at k = 0).
/// Requires eta_i > 0.
Cutoffs cutoffs(const MaterialParams& p);

/// Large-k slopes of the unbounded dispersion branches.
/// Requires eta_i > 0 and rho > 0.
ObliqueSlopes oblique_slopes(const MaterialParams& p);

/// Closed-form horizontal-asymptote levels for the requested model,
/// nonnegative, ascending, deduplicated at 1e-8 relative. Throws
/// ModelMismatch when the alpha profile contradicts the model. Note the
/// internal-variable forms are reproduced as printed; the leading
/// determinant coefficient (detpoly) is the authoritative cross-check.
std::vector<double> horizontal_asymptotes(const MaterialParams& p,
                                          AsymptoteModel model);

/// Slopes at the origin of the two acoustic branches (longitudinal,
/// transverse). Computed from the macroscopic moduli and checked against
/// the direct determinant-based form to 1e-12 relative.
std::pair<double, double> acoustic_tangents(const MaterialParams& p);

/// The determinant-based form of the acoustic tangents, kept as the second
/// algebraic route for cross-checking.
std::pair<double, double> acoustic_tangents_raw(const MaterialParams& p);

/// Aggregates every characteristic quantity; the horizontal-asymptote
/// model is inferred from the alpha profile (all zero -> internal
/// variable). For mixed profiles outside both closed forms the horiz list
/// is empty and callers fall back to detpoly roots.
Characteristics characteristics(const MaterialParams& p);

}  // namespace rmm
