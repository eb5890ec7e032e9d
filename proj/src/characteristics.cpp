#include "rmm/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmm/blocks.hpp"

namespace rmm {

namespace {

void require_inertia(const MaterialParams& p) {
    if (!(p.eta1 > 0.0 && p.eta2 > 0.0 && p.eta3 > 0.0)) {
        throw InvalidParams("micro-inertia weights eta_i must be positive");
    }
}

void push_if_real(std::vector<double>& out, double num, double den) {
    if (den == 0.0) return;
    const double arg = num / den;
    if (arg >= 0.0 && std::isfinite(arg)) out.push_back(std::sqrt(arg));
}

std::vector<double> dedup_ascending(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || x - out.back() > 1e-8 * (1.0 + std::abs(x))) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

Cutoffs cutoffs(const MaterialParams& p) {
    require_inertia(p);
    Cutoffs c;
    c.omega_s = std::sqrt(2.0 * (p.mu_e + p.mu_micro) / p.eta1);
    c.omega_r = std::sqrt(2.0 * p.mu_c / p.eta2);
    c.omega_p = std::sqrt(
        (3.0 * (p.lambda_e + p.lambda_micro) + 2.0 * (p.mu_e + p.mu_micro)) /
        p.eta3);
    return c;
}

ObliqueSlopes oblique_slopes(const MaterialParams& p) {
    require_inertia(p);
    if (!(p.rho > 0.0)) throw InvalidParams("rho must be positive");
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    ObliqueSlopes s;
    s.c_m_d = std::sqrt(p.alpha1 * mL2 / p.eta1);
    s.c_m_vd = std::sqrt((p.alpha1 + 2.0 * p.alpha3) * mL2 / (3.0 * p.eta2));
    s.c_m_dr = 0.5 * std::sqrt((p.eta1 + p.eta2) / (p.eta1 * p.eta2) *
                               (p.alpha1 + p.alpha2) * mL2);
    s.c_s = std::sqrt((p.mu_e + p.mu_c) / p.rho);
    s.c_p = std::sqrt((2.0 * p.mu_e + p.lambda_e) / p.rho);
    s.c_m_r = std::sqrt((2.0 * p.eta1 + p.eta3) / (3.0 * p.eta1 * p.eta3) *
                        p.alpha2 * mL2);
    return s;
}

std::vector<double> horizontal_asymptotes(const MaterialParams& p,
                                          AsymptoteModel model) {
    require_inertia(p);
    std::vector<double> vals;
    if (model == AsymptoteModel::Relaxed) {
        if (!(p.alpha1 > 0.0 && p.alpha2 > 0.0)) {
            throw ModelMismatch(
                "relaxed horizontal asymptotes need alpha1, alpha2 > 0");
        }
        push_if_real(vals, 2.0 * p.mu_micro, p.eta1 + p.eta2);
        push_if_real(vals, 3.0 * (p.lambda_micro + 2.0 * p.mu_micro),
                     2.0 * p.eta1 + p.eta3);
        return dedup_ascending(std::move(vals));
    }

    if (!(p.alpha1 == 0.0 && p.alpha2 == 0.0 && p.alpha3 == 0.0)) {
        throw ModelMismatch(
            "internal-variable horizontal asymptotes need alpha1 = alpha2 = "
            "alpha3 = 0");
    }
    const double mu_sum = p.mu_c + p.mu_e;
    push_if_real(vals, 2.0 * p.mu_c, p.eta2);
    push_if_real(vals, 2.0 * (p.mu_e + p.mu_c), p.eta1);

    const double q1 =
        p.eta1 * p.mu_c * p.mu_e +
        p.eta2 * (p.mu_c * (p.mu_e + p.mu_micro) + p.mu_e * p.mu_micro);
    const double q2_base = (p.eta1 + p.eta2) * p.mu_c * p.mu_e +
                           p.eta2 * p.mu_micro * (p.mu_c + p.mu_e);
    const double q2 = q2_base * q2_base - 4.0 * p.eta1 * p.eta2 * p.mu_c *
                                              p.mu_e * p.mu_micro * mu_sum;
    if (q2 >= 0.0) {
        const double den = p.eta1 * p.eta2 * mu_sum;
        push_if_real(vals, q1 - std::sqrt(q2), den);
        push_if_real(vals, q1 + std::sqrt(q2), den);
    }

    // p1 and p2 are printed identically in the source material; a negative
    // sqrt argument means no real asymptote comes from this pair.
    const double p1 =
        2.0 * p.eta3 * (3.0 * p.lambda_e * (p.mu_e + p.mu_micro) +
                        2.0 * p.mu_e * (p.mu_e + 3.0 * p.mu_micro)) +
        p.eta1 * 3.0 * p.lambda_e *
            (4.0 * p.mu_e + 3.0 * p.lambda_micro + 2.0 * p.mu_micro) +
        4.0 * p.eta3 * p.mu_e *
            (4.0 * p.mu_e + 9.0 * p.lambda_micro + 6.0 * p.mu_micro);
    const double p2 = p1;
    const double p3 =
        72.0 * p.eta1 * p.eta3 * (p.lambda_e + 2.0 * p.mu_e) *
        (p.lambda_e * (3.0 * p.lambda_micro * (p.mu_e + p.mu_micro) +
                       2.0 * p.mu_micro * (3.0 * p.mu_e + p.mu_micro)) +
         2.0 * p.mu_e * (p.lambda_micro * (p.mu_e + 3.0 * p.mu_micro) +
                         2.0 * p.mu_micro * (p.mu_e + p.mu_micro)));
    const double disc = p2 * p2 - p3;
    if (disc >= 0.0) {
        const double den = 6.0 * p.eta1 * p.eta3 * (p.lambda_e + 2.0 * p.mu_e);
        push_if_real(vals, p1 - std::sqrt(disc), den);
        push_if_real(vals, p1 + std::sqrt(disc), den);
    }
    return dedup_ascending(std::move(vals));
}

std::pair<double, double> acoustic_tangents_raw(const MaterialParams& p) {
    if (!(p.rho > 0.0)) throw DegenerateDenominator("rho must be positive");
    const double mu_sum = p.mu_e + p.mu_micro;
    const double den =
        p.rho * mu_sum *
        (2.0 * mu_sum + 3.0 * (p.lambda_e + p.lambda_micro));
    if (den == 0.0) {
        throw DegenerateDenominator("acoustic tangent denominator vanishes");
    }
    const double num_long =
        p.lambda_e * (3.0 * p.lambda_micro * mu_sum +
                      2.0 * p.mu_micro * (3.0 * p.mu_e + p.mu_micro)) +
        2.0 * p.mu_e * (p.lambda_micro * (p.mu_e + 3.0 * p.mu_micro) +
                        2.0 * p.mu_micro * mu_sum);
    const double slope_long = std::sqrt(num_long / den);
    const double slope_trans =
        std::sqrt(p.mu_e * p.mu_micro / (p.rho * mu_sum));
    return {slope_long, slope_trans};
}

std::pair<double, double> acoustic_tangents(const MaterialParams& p) {
    if (!(p.rho > 0.0)) throw DegenerateDenominator("rho must be positive");
    const MacroModuli m = macro_moduli(p);
    const double slope_long =
        std::sqrt((2.0 * m.mu_macro + m.lambda_macro) / p.rho);
    const double slope_trans = std::sqrt(m.mu_macro / p.rho);
    const auto [raw_long, raw_trans] = acoustic_tangents_raw(p);
    if (std::abs(slope_long - raw_long) > 1e-12 * raw_long ||
        std::abs(slope_trans - raw_trans) > 1e-12 * raw_trans) {
        throw std::logic_error(
            "acoustic tangents: macro-moduli and determinant forms disagree");
    }
    return {slope_long, slope_trans};
}

Characteristics characteristics(const MaterialParams& p) {
    Characteristics c;
    c.cutoff = cutoffs(p);
    c.slopes = oblique_slopes(p);
    if (p.alpha1 == 0.0 && p.alpha2 == 0.0 && p.alpha3 == 0.0) {
        c.horiz_model = AsymptoteModel::InternalVariable;
        c.horiz = horizontal_asymptotes(p, c.horiz_model);
    } else if (p.alpha1 > 0.0 && p.alpha2 > 0.0) {
        c.horiz_model = AsymptoteModel::Relaxed;
        c.horiz = horizontal_asymptotes(p, c.horiz_model);
    } else {
        // Mixed zero/nonzero alpha profile: no printed closed form covers
        // it; the detpoly leading row is the only source.
        c.horiz_model = AsymptoteModel::Relaxed;
        c.horiz.clear();
    }
    std::tie(c.slope_aco_long, c.slope_aco_trans) = acoustic_tangents(p);
    return c;
}

}  // namespace rmm
