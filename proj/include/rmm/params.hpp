#pragma once

#include <string>
#include <vector>

#include "rmm/errors.hpp"

namespace rmm {

/// Material parameters of the weighted isotropic relaxed micromorphic
/// continuum, in SI units throughout (Pa, m, kg/m^3, kg/m).
struct MaterialParams {
    double mu_e = 0.0;          // elastic shear-type modulus [Pa]
    double lambda_e = 0.0;      // elastic Lame-type modulus [Pa]
    double mu_micro = 0.0;      // micro shear-type modulus [Pa]
    double lambda_micro = 0.0;  // micro Lame-type modulus [Pa]
    double mu_c = 0.0;          // Cosserat couple modulus [Pa]
    double L_c = 0.0;           // characteristic length [m]
    double rho = 0.0;           // macro mass density [kg/m^3]
    double eta1 = 0.0;          // micro-inertia weight, dev sym part [kg/m]
    double eta2 = 0.0;          // micro-inertia weight, skew part [kg/m]
    double eta3 = 0.0;          // micro-inertia weight, spherical part [kg/m]
    double alpha1 = 0.0;        // curvature weight, dev sym part [-]
    double alpha2 = 0.0;        // curvature weight, skew part [-]
    double alpha3 = 0.0;        // curvature weight, spherical part [-]
};

/// Reference parameter set used across the test and example material
/// (moduli in the hundreds of MPa, millimetric internal length).
MaterialParams reference_params();

/// Effective classical Lame parameters of the macroscopic limit.
struct MacroModuli {
    double mu_macro = 0.0;      // [Pa], harmonic mean of mu_e and mu_micro
    double lambda_macro = 0.0;  // [Pa]
    double kappa_macro = 0.0;   // [Pa], (2 mu + 3 lambda)/3
};

enum class ValidationMode {
    Strict,       // well-posedness inequalities, all strict where required
    Exploratory,  // additionally admits alpha == 0 and mu_c == 0 parameter sets
};

struct Violation {
    std::string field;
    std::string condition;
    double value = 0.0;
};

struct ValidationReport {
    ValidationMode mode = ValidationMode::Strict;
    std::vector<Violation> violations;  // ordered by field name

    bool ok() const { return violations.empty(); }
};

/// Checks the admissibility inequalities of the given mode. Never throws;
/// every violated inequality is reported, ordered by field name.
ValidationReport validate(const MaterialParams& p, ValidationMode mode);

/// Throws InvalidParams when validate(p, mode) reports violations.
void require_valid(const MaterialParams& p, ValidationMode mode);

/// Macroscopic moduli: mu_macro is the harmonic mean of mu_e and mu_micro,
/// lambda_macro follows from the consistency of the bulk moduli. Throws
/// DegenerateDenominator when mu_e + mu_micro or the bulk-sum denominator
/// vanishes.
MacroModuli macro_moduli(const MaterialParams& p);

/// Micro-distortion share of the gradient in the vanishing-inertia limit,
/// mu_e / (mu_e + mu_micro). Lies in (0,1); below 1/2 iff mu_e < mu_micro.
double beta_plus(const MaterialParams& p);

}  // namespace rmm
