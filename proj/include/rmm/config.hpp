#pragma once

#include <string>
#include <vector>

#include "rmm/branches.hpp"
#include "rmm/params.hpp"

namespace rmm {

enum class ModelTag {
    Relaxed,
    InternalVariable,
    Cosserat,
    Cauchy,
    CoupleStress,
};

std::string to_string(ModelTag tag);

/// A parsed run configuration. Material values are kept in the file's
/// units (MPa, mm, kg/m^3, kg/m) so that render/parse round-trips exactly;
/// material() converts to SI.
struct RunConfig {
    double mu_e_mpa = 0.0;
    double lambda_e_mpa = 0.0;
    double mu_micro_mpa = 0.0;
    double lambda_micro_mpa = 0.0;
    double mu_c_mpa = 0.0;
    double L_c_mm = 0.0;
    double rho_kg_m3 = 0.0;
    double eta1_kg_m = 1e-2;
    double eta2_kg_m = 1e-2;
    double eta3_kg_m = 1e-2;
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double alpha3 = 1.0;
    ModelTag model = ModelTag::Relaxed;
    double k_max_inv_m = 0.0;
    int k_count = 400;
    GridSpacing k_spacing = GridSpacing::Linear;
    std::string sweep_param;            // config key name; empty = no sweep
    std::vector<double> sweep_values;   // in the key's config units

    bool operator==(const RunConfig&) const = default;

    MaterialParams material() const;
    KGrid grid() const;
};

/// Parses flat `key = value` text. Blank lines and lines starting with '#'
/// are skipped. The seven material keys (mu_e_mpa, lambda_e_mpa,
/// mu_micro_mpa, lambda_micro_mpa, mu_c_mpa, L_c_mm, rho_kg_m3) are
/// mandatory; missing inertia/curvature weights default to 1e-2 kg/m and 1.
/// Errors: ParseError (with line number), UnknownKey, MissingKey, UnitError
/// (non-finite values).
RunConfig parse_config(const std::string& text);

/// Canonical text form; parse(render(c)) == c for every valid config.
std::string render_config(const RunConfig& c);

/// Applies the named sweep key to a copy of the config.
RunConfig with_sweep_value(const RunConfig& c, const std::string& key,
                           double value);

}  // namespace rmm
