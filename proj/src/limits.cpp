#include "rmm/limits.hpp"

#include <cmath>

namespace rmm {

std::pair<double, double> cauchy_curves(const MacroModuli& m, double rho,
                                        double k) {
    const double slope_long = std::sqrt((2.0 * m.mu_macro + m.lambda_macro) / rho);
    const double slope_trans = std::sqrt(m.mu_macro / rho);
    return {slope_long * k, slope_trans * k};
}

std::array<double, 4> cosserat_asymptotes(const MaterialParams& p) {
    if (!(p.eta2 > 0.0 && p.rho > 0.0)) {
        throw InvalidParams("cosserat_asymptotes: eta2 and rho must be > 0");
    }
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    return {std::sqrt((p.alpha1 + 2.0 * p.alpha3) * mL2 / (3.0 * p.eta2)),
            std::sqrt((p.mu_c + p.mu_e) / p.rho),
            0.5 * std::sqrt((p.alpha1 + p.alpha2) * mL2 / p.eta2),
            std::sqrt((p.lambda_e + 2.0 * p.mu_e) / p.rho)};
}

std::pair<double, double> cosserat_transverse_pair(const MaterialParams& p,
                                                   double k) {
    // Symmetrized 2x2 block in (u_xi, rotation) coordinates:
    //   [ c_s^2 k^2                  -sqrt(2) mu_c k / sqrt(rho eta2) ]
    //   [ (sym)     (alpha1+alpha2) mu_e L_c^2 k^2 / (4 eta2) + omega_r^2 ]
    const double a = (p.mu_e + p.mu_c) / p.rho * k * k;
    const double d = (p.alpha1 + p.alpha2) * p.mu_e * p.L_c * p.L_c /
                         (4.0 * p.eta2) * k * k +
                     2.0 * p.mu_c / p.eta2;
    const double b = -std::sqrt(2.0) * p.mu_c / std::sqrt(p.rho * p.eta2) * k;
    const double mean = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    const double lo = std::max(mean - rad, 0.0);
    return {std::sqrt(lo), std::sqrt(mean + rad)};
}

BranchSet cosserat_branches(const MaterialParams& p, const KGrid& grid) {
    if (!(p.eta2 > 0.0 && p.rho > 0.0 && p.mu_e > 0.0 && p.mu_c >= 0.0)) {
        throw InvalidParams(
            "cosserat_branches: need eta2, rho, mu_e > 0 and mu_c >= 0");
    }
    const std::vector<double> ks = grid.points();
    const double cp = std::sqrt((p.lambda_e + 2.0 * p.mu_e) / p.rho);
    const double cmvd2 =
        (p.alpha1 + 2.0 * p.alpha3) * p.mu_e * p.L_c * p.L_c / (3.0 * p.eta2);
    const double omega_r2 = 2.0 * p.mu_c / p.eta2;

    BranchSet set;
    set.k = ks;
    set.branches.resize(4);
    set.branches[0] = {"LA", BranchGroup::Longitudinal, 1, {}, false};
    set.branches[1] = {"TA", BranchGroup::Transverse, 2, {}, false};
    set.branches[2] = {"TO1", BranchGroup::Transverse, 2, {}, false};
    set.branches[3] = {"TRO", BranchGroup::Uncoupled, 1, {}, false};
    for (double k : ks) {
        set.branches[0].samples.emplace_back(k, cp * k);
        const auto [lo, hi] = cosserat_transverse_pair(p, k);
        set.branches[1].samples.emplace_back(k, lo);
        set.branches[2].samples.emplace_back(k, hi);
        set.branches[3].samples.emplace_back(
            k, std::sqrt(cmvd2 * k * k + omega_r2));
    }
    return set;
}

BranchSet internal_variable_branches(const MaterialParams& p,
                                     const KGrid& grid) {
    if (!(p.alpha1 == 0.0 && p.alpha2 == 0.0 && p.alpha3 == 0.0)) {
        throw InvalidParams(
            "internal_variable_branches: alpha1 = alpha2 = alpha3 = 0 "
            "required");
    }
    return compute_branches(p, grid);
}

std::pair<double, double> couple_stress_pair(const MaterialParams& p,
                                             double k) {
    const double cp = std::sqrt((p.lambda_e + 2.0 * p.mu_e) / p.rho);
    const double k2 = k * k;
    const double trans2 =
        p.mu_e / p.rho * k2 *
        (1.0 + p.L_c * p.L_c * (p.alpha1 + p.alpha2) * k2 / 4.0);
    return {cp * k, std::sqrt(trans2)};
}

BranchSet couple_stress_branches(const MaterialParams& p, const KGrid& grid) {
    if (!(p.rho > 0.0 && p.mu_e > 0.0)) {
        throw InvalidParams("couple_stress_branches: need rho, mu_e > 0");
    }
    if (!(p.L_c >= 0.0)) {
        throw InvalidParams("couple_stress_branches: L_c must be >= 0");
    }
    const std::vector<double> ks = grid.points();
    BranchSet set;
    set.k = ks;
    set.branches.resize(2);
    set.branches[0] = {"LA", BranchGroup::Longitudinal, 1, {}, false};
    set.branches[1] = {"TA", BranchGroup::Transverse, 2, {}, false};
    for (double k : ks) {
        const auto [wl, wt] = couple_stress_pair(p, k);
        set.branches[0].samples.emplace_back(k, wl);
        set.branches[1].samples.emplace_back(k, wt);
    }
    return set;
}

}  // namespace rmm
