#include "rmm/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace rmm {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, int line) {
    const char* start = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start || *end != '\0') {
        throw ParseError("line " + std::to_string(line) +
                         ": expected a number, got '" + value + "'");
    }
    if (!std::isfinite(v)) {
        throw UnitError("line " + std::to_string(line) +
                        ": non-finite value '" + value + "'");
    }
    return v;
}

const std::set<std::string> kNumericKeys = {
    "mu_e_mpa",  "lambda_e_mpa", "mu_micro_mpa", "lambda_micro_mpa",
    "mu_c_mpa",  "L_c_mm",       "rho_kg_m3",    "eta1_kg_m",
    "eta2_kg_m", "eta3_kg_m",    "alpha1",       "alpha2",
    "alpha3",    "k_max_inv_m",  "k_count"};

const std::set<std::string> kStringKeys = {"model", "k_spacing",
                                           "sweep_param", "sweep_values"};

const char* kRequired[] = {"mu_e_mpa",  "lambda_e_mpa", "mu_micro_mpa",
                           "lambda_micro_mpa", "mu_c_mpa", "L_c_mm",
                           "rho_kg_m3"};

double* numeric_slot(RunConfig& c, const std::string& key) {
    static const std::map<std::string, double RunConfig::*> slots = {
        {"mu_e_mpa", &RunConfig::mu_e_mpa},
        {"lambda_e_mpa", &RunConfig::lambda_e_mpa},
        {"mu_micro_mpa", &RunConfig::mu_micro_mpa},
        {"lambda_micro_mpa", &RunConfig::lambda_micro_mpa},
        {"mu_c_mpa", &RunConfig::mu_c_mpa},
        {"L_c_mm", &RunConfig::L_c_mm},
        {"rho_kg_m3", &RunConfig::rho_kg_m3},
        {"eta1_kg_m", &RunConfig::eta1_kg_m},
        {"eta2_kg_m", &RunConfig::eta2_kg_m},
        {"eta3_kg_m", &RunConfig::eta3_kg_m},
        {"alpha1", &RunConfig::alpha1},
        {"alpha2", &RunConfig::alpha2},
        {"alpha3", &RunConfig::alpha3},
        {"k_max_inv_m", &RunConfig::k_max_inv_m},
    };
    const auto it = slots.find(key);
    return it == slots.end() ? nullptr : &(c.*(it->second));
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(ModelTag tag) {
    switch (tag) {
        case ModelTag::Relaxed: return "relaxed";
        case ModelTag::InternalVariable: return "internal_variable";
        case ModelTag::Cosserat: return "cosserat";
        case ModelTag::Cauchy: return "cauchy";
        case ModelTag::CoupleStress: return "couple_stress";
    }
    return "relaxed";
}

MaterialParams RunConfig::material() const {
    MaterialParams p;
    p.mu_e = mu_e_mpa * 1e6;
    p.lambda_e = lambda_e_mpa * 1e6;
    p.mu_micro = mu_micro_mpa * 1e6;
    p.lambda_micro = lambda_micro_mpa * 1e6;
    p.mu_c = mu_c_mpa * 1e6;
    p.L_c = L_c_mm * 1e-3;
    p.rho = rho_kg_m3;
    p.eta1 = eta1_kg_m;
    p.eta2 = eta2_kg_m;
    p.eta3 = eta3_kg_m;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    p.alpha3 = alpha3;
    return p;
}

KGrid RunConfig::grid() const {
    KGrid g;
    g.k_min = (k_spacing == GridSpacing::Log) ? k_max_inv_m * 1e-4 : 0.0;
    g.k_max = k_max_inv_m;
    g.count = k_count;
    g.spacing = k_spacing;
    return g;
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_k_max = false;

    while (std::getline(in, raw)) {
        ++line;
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(line) +
                             ": expected 'key = value'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line) + ": empty key");
        }
        if (!kNumericKeys.count(key) && !kStringKeys.count(key)) {
            throw UnknownKey("line " + std::to_string(line) +
                             ": unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ParseError("line " + std::to_string(line) +
                             ": duplicate key '" + key + "'");
        }

        if (key == "model") {
            if (value == "relaxed") c.model = ModelTag::Relaxed;
            else if (value == "internal_variable")
                c.model = ModelTag::InternalVariable;
            else if (value == "cosserat") c.model = ModelTag::Cosserat;
            else if (value == "cauchy") c.model = ModelTag::Cauchy;
            else if (value == "couple_stress")
                c.model = ModelTag::CoupleStress;
            else
                throw ParseError("line " + std::to_string(line) +
                                 ": unknown model '" + value + "'");
        } else if (key == "k_spacing") {
            if (value == "linear") c.k_spacing = GridSpacing::Linear;
            else if (value == "log") c.k_spacing = GridSpacing::Log;
            else
                throw ParseError("line " + std::to_string(line) +
                                 ": k_spacing must be linear or log");
        } else if (key == "sweep_param") {
            if (!kNumericKeys.count(value) || value == "k_max_inv_m" ||
                value == "k_count") {
                throw ParseError("line " + std::to_string(line) +
                                 ": sweep_param must name a material key");
            }
            c.sweep_param = value;
        } else if (key == "sweep_values") {
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) {
                c.sweep_values.push_back(parse_number(trim(item), line));
            }
            if (c.sweep_values.empty()) {
                throw ParseError("line " + std::to_string(line) +
                                 ": sweep_values is empty");
            }
        } else if (key == "k_count") {
            const double v = parse_number(value, line);
            if (v != std::floor(v) || v < 2 || v > 1e7) {
                throw ParseError("line " + std::to_string(line) +
                                 ": k_count must be an integer >= 2");
            }
            c.k_count = static_cast<int>(v);
        } else {
            *numeric_slot(c, key) = parse_number(value, line);
            if (key == "k_max_inv_m") have_k_max = true;
        }
    }

    std::string missing;
    for (const char* req : kRequired) {
        if (!seen.count(req)) {
            if (!missing.empty()) missing += ", ";
            missing += req;
        }
    }
    if (!missing.empty()) {
        throw MissingKey("missing required keys: " + missing);
    }
    if (!have_k_max) {
        // Default grid reaches 10/L_c, the knee region of the curves.
        c.k_max_inv_m = (c.L_c_mm > 0.0) ? 10.0 / (c.L_c_mm * 1e-3) : 2000.0;
    }
    if (!(c.sweep_param.empty() == c.sweep_values.empty())) {
        throw MissingKey("sweep_param and sweep_values must come together");
    }
    return c;
}

std::string render_config(const RunConfig& c) {
    std::string out;
    out += "mu_e_mpa = " + fmt(c.mu_e_mpa) + "\n";
    out += "lambda_e_mpa = " + fmt(c.lambda_e_mpa) + "\n";
    out += "mu_micro_mpa = " + fmt(c.mu_micro_mpa) + "\n";
    out += "lambda_micro_mpa = " + fmt(c.lambda_micro_mpa) + "\n";
    out += "mu_c_mpa = " + fmt(c.mu_c_mpa) + "\n";
    out += "L_c_mm = " + fmt(c.L_c_mm) + "\n";
    out += "rho_kg_m3 = " + fmt(c.rho_kg_m3) + "\n";
    out += "eta1_kg_m = " + fmt(c.eta1_kg_m) + "\n";
    out += "eta2_kg_m = " + fmt(c.eta2_kg_m) + "\n";
    out += "eta3_kg_m = " + fmt(c.eta3_kg_m) + "\n";
    out += "alpha1 = " + fmt(c.alpha1) + "\n";
    out += "alpha2 = " + fmt(c.alpha2) + "\n";
    out += "alpha3 = " + fmt(c.alpha3) + "\n";
    out += "model = " + to_string(c.model) + "\n";
    out += "k_max_inv_m = " + fmt(c.k_max_inv_m) + "\n";
    out += "k_count = " + std::to_string(c.k_count) + "\n";
    out += std::string("k_spacing = ") +
           (c.k_spacing == GridSpacing::Log ? "log" : "linear") + "\n";
    if (!c.sweep_param.empty()) {
        out += "sweep_param = " + c.sweep_param + "\n";
        out += "sweep_values = ";
        for (std::size_t i = 0; i < c.sweep_values.size(); ++i) {
            if (i) out += ", ";
            out += fmt(c.sweep_values[i]);
        }
        out += "\n";
    }
    return out;
}

RunConfig with_sweep_value(const RunConfig& c, const std::string& key,
                           double value) {
    RunConfig copy = c;
    copy.sweep_param.clear();
    copy.sweep_values.clear();
    double* slot = numeric_slot(copy, key);
    if (slot == nullptr) {
        throw UnknownKey("sweep key '" + key + "' is not a material key");
    }
    *slot = value;
    return copy;
}

}  // namespace rmm
