#include "rmm/params.hpp"

#include <cmath>

namespace rmm {

namespace {

bool finite(double v) { return std::isfinite(v); }

void check(std::vector<Violation>& out, bool ok, const char* field,
           const char* condition, double value) {
    if (!ok) out.push_back({field, condition, value});
}

}  // namespace

MaterialParams reference_params() {
    MaterialParams p;
    p.mu_e = 2.0e8;
    p.lambda_e = 4.0e8;
    p.mu_micro = 1.0e8;
    p.lambda_micro = 1.0e8;
    p.mu_c = 4.4e8;
    p.L_c = 3.0e-3;
    p.rho = 2000.0;
    p.eta1 = p.eta2 = p.eta3 = 1.0e-2;
    p.alpha1 = p.alpha2 = p.alpha3 = 1.0;
    return p;
}

ValidationReport validate(const MaterialParams& p, ValidationMode mode) {
    ValidationReport rep;
    rep.mode = mode;
    auto& v = rep.violations;
    const bool strict = (mode == ValidationMode::Strict);

    // Checks are emitted in canonical field order so reports are
    // deterministic. Exploratory mode constrains the curvature weights to
    // finite values only; the parametric sweeps deliberately leave the
    // well-posedness range.
    check(v, finite(p.alpha1), "alpha1", "alpha1 finite", p.alpha1);
    if (strict) check(v, p.alpha1 > 0.0, "alpha1", "alpha1 > 0", p.alpha1);
    check(v, finite(p.alpha2), "alpha2", "alpha2 finite", p.alpha2);
    if (strict) check(v, p.alpha2 > 0.0, "alpha2", "alpha2 > 0", p.alpha2);
    check(v, finite(p.alpha3), "alpha3", "alpha3 finite", p.alpha3);
    if (strict) check(v, p.alpha3 >= 0.0, "alpha3", "alpha3 >= 0", p.alpha3);

    check(v, finite(p.eta1) && p.eta1 > 0.0, "eta1", "eta1 > 0", p.eta1);
    check(v, finite(p.eta2) && p.eta2 > 0.0, "eta2", "eta2 > 0", p.eta2);
    check(v, finite(p.eta3) && p.eta3 > 0.0, "eta3", "eta3 > 0", p.eta3);

    check(v, finite(p.L_c), "L_c", "L_c finite", p.L_c);
    if (strict) {
        check(v, p.L_c > 0.0, "L_c", "L_c > 0", p.L_c);
    } else {
        check(v, p.L_c >= 0.0, "L_c", "L_c >= 0", p.L_c);
    }

    check(v, finite(p.lambda_e) && 3.0 * p.lambda_e + 2.0 * p.mu_e > 0.0,
          "lambda_e", "3*lambda_e + 2*mu_e > 0", p.lambda_e);
    check(v,
          finite(p.lambda_micro) &&
              3.0 * p.lambda_micro + 2.0 * p.mu_micro > 0.0,
          "lambda_micro", "3*lambda_micro + 2*mu_micro > 0", p.lambda_micro);

    check(v, finite(p.mu_c) && p.mu_c >= 0.0, "mu_c", "mu_c >= 0", p.mu_c);
    check(v, finite(p.mu_e) && p.mu_e > 0.0, "mu_e", "mu_e > 0", p.mu_e);
    check(v, finite(p.mu_micro) && p.mu_micro > 0.0, "mu_micro",
          "mu_micro > 0", p.mu_micro);

    check(v, finite(p.rho) && p.rho > 0.0, "rho", "rho > 0", p.rho);
    return rep;
}

void require_valid(const MaterialParams& p, ValidationMode mode) {
    ValidationReport rep = validate(p, mode);
    if (!rep.ok()) {
        std::string msg = "inadmissible material parameters:";
        for (const auto& viol : rep.violations) {
            msg += " [" + viol.condition + "]";
        }
        throw InvalidParams(msg);
    }
}

MacroModuli macro_moduli(const MaterialParams& p) {
    const double mu_sum = p.mu_e + p.mu_micro;
    if (mu_sum == 0.0) {
        throw DegenerateDenominator("macro_moduli: mu_e + mu_micro vanishes");
    }
    const double bulk_den =
        2.0 * (p.mu_e + p.mu_micro) + 3.0 * (p.lambda_e + p.lambda_micro);
    if (bulk_den == 0.0) {
        throw DegenerateDenominator(
            "macro_moduli: 2*(mu_e+mu_micro) + 3*(lambda_e+lambda_micro) "
            "vanishes");
    }
    MacroModuli m;
    m.mu_macro = p.mu_e * p.mu_micro / mu_sum;
    // Keep the common 1/3 factored out so the subtraction happens between
    // same-scale quantities.
    const double bulk_term = (2.0 * p.mu_e + 3.0 * p.lambda_e) *
                             (2.0 * p.mu_micro + 3.0 * p.lambda_micro) /
                             bulk_den;
    m.lambda_macro = (bulk_term - 2.0 * m.mu_macro) / 3.0;
    m.kappa_macro = (2.0 * m.mu_macro + 3.0 * m.lambda_macro) / 3.0;
    return m;
}

double beta_plus(const MaterialParams& p) {
    const double den = p.mu_e + p.mu_micro;
    if (den == 0.0) {
        throw DegenerateDenominator("beta_plus: mu_e + mu_micro vanishes");
    }
    return p.mu_e / den;
}

}  // namespace rmm
