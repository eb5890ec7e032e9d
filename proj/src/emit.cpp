#include "rmm/emit.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rmm/characteristics.hpp"
#include "rmm/detpoly.hpp"
#include "rmm/limits.hpp"

namespace rmm {

namespace {

std::string num9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

std::string num2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

BranchSet branches_for(const RunConfig& config) {
    const MaterialParams p = config.material();
    const KGrid grid = config.grid();
    switch (config.model) {
        case ModelTag::Relaxed:
            return compute_branches(p, grid);
        case ModelTag::InternalVariable:
            return internal_variable_branches(p, grid);
        case ModelTag::Cosserat:
            return cosserat_branches(p, grid);
        case ModelTag::CoupleStress:
            return couple_stress_branches(p, grid);
        case ModelTag::Cauchy: {
            const MacroModuli m = macro_moduli(p);
            BranchSet set;
            set.k = grid.points();
            set.branches.resize(2);
            set.branches[0] = {"LA", BranchGroup::Longitudinal, 1, {}, false};
            set.branches[1] = {"TA", BranchGroup::Transverse, 2, {}, false};
            for (double k : set.k) {
                const auto [wl, wt] = cauchy_curves(m, p.rho, k);
                set.branches[0].samples.emplace_back(k, wl);
                set.branches[1].samples.emplace_back(k, wt);
            }
            return set;
        }
    }
    throw InvalidParams("unknown model tag");
}

struct Column {
    std::string header;
    const DispersionBranch* branch;
};

std::vector<Column> csv_columns(const RunConfig& config,
                                const BranchSet& set) {
    std::vector<Column> cols;
    auto add = [&](const char* header, const char* label) {
        cols.push_back({header, &set.by_label(label)});
    };
    switch (config.model) {
        case ModelTag::Relaxed:
        case ModelTag::InternalVariable:
            add("LA", "LA");
            add("TA", "TA");
            add("LO1", "LO1");
            add("LO2", "LO2");
            add("TO1", "TO1");
            add("TO2", "TO2");
            add("TRO", "TRO");
            add("LSO", "LSO");
            add("TCVO_1", "TCVO");
            add("TCVO_2", "TA");
            add("TS_dup", "TO1");
            add("LS_dup", "TO2");
            break;
        case ModelTag::Cosserat:
            add("LA", "LA");
            add("TA", "TA");
            add("TO1", "TO1");
            add("TRO", "TRO");
            add("TA_dup", "TA");
            add("TO1_dup", "TO1");
            break;
        case ModelTag::Cauchy:
        case ModelTag::CoupleStress:
            add("LA", "LA");
            add("TA", "TA");
            break;
    }
    return cols;
}

std::vector<std::pair<std::string, double>> named_levels(
    const MaterialParams& p) {
    std::vector<std::pair<std::string, double>> names;
    const Cutoffs c = cutoffs(p);
    names.emplace_back("omega_s", c.omega_s);
    names.emplace_back("omega_r", c.omega_r);
    names.emplace_back("omega_p", c.omega_p);
    if (p.alpha1 > 0.0 && p.alpha2 > 0.0) {
        const auto horiz = horizontal_asymptotes(p, AsymptoteModel::Relaxed);
        names.emplace_back(
            "horizontal asymptote sqrt(2*mu_micro/(eta1+eta2))", horiz.front());
        names.emplace_back(
            "horizontal asymptote "
            "sqrt(3*(lambda_micro+2*mu_micro)/(2*eta1+eta3))",
            horiz.back());
    }
    for (double r : leading_roots(build_detpoly(p))) {
        names.emplace_back("detpoly leading-row root", r);
    }
    return names;
}

std::string tag_level(const std::vector<std::pair<std::string, double>>& names,
                      double value) {
    std::string best = "unmatched";
    double best_rel = 5e-3;
    for (const auto& [name, level] : names) {
        if (level <= 0.0) continue;
        const double rel = std::abs(value - level) / level;
        if (rel < best_rel) {
            best_rel = rel;
            best = name;
        }
    }
    return best;
}

}  // namespace

std::string dispersion_csv(const RunConfig& config) {
    const BranchSet set = branches_for(config);
    const std::vector<Column> cols = csv_columns(config, set);
    std::string out = "k";
    for (const auto& col : cols) out += "," + col.header;
    out += "\n";
    for (std::size_t i = 0; i < set.k.size(); ++i) {
        out += num9(set.k[i]);
        for (const auto& col : cols) {
            out += "," + num9(col.branch->samples[i].second);
        }
        out += "\n";
    }
    return out;
}

std::string characteristics_report(const RunConfig& config) {
    const MaterialParams p = config.material();
    std::ostringstream os;
    os << "model: " << to_string(config.model) << "\n";

    if (config.model == ModelTag::Cauchy) {
        const MacroModuli m = macro_moduli(p);
        os << "macro moduli [Pa]\n";
        os << "  mu_macro     = mu_e*mu_micro/(mu_e+mu_micro) = "
           << num9(m.mu_macro) << "\n";
        os << "  lambda_macro = " << num9(m.lambda_macro) << "\n";
        os << "  kappa_macro  = (2*mu_macro+3*lambda_macro)/3 = "
           << num9(m.kappa_macro) << "\n";
        os << "slopes [m/s]\n";
        os << "  longitudinal = sqrt((2*mu_macro+lambda_macro)/rho) = "
           << num9(std::sqrt((2.0 * m.mu_macro + m.lambda_macro) / p.rho))
           << "\n";
        os << "  transverse   = sqrt(mu_macro/rho) = "
           << num9(std::sqrt(m.mu_macro / p.rho)) << "\n";
        return os.str();
    }
    if (config.model == ModelTag::Cosserat) {
        const auto c = cosserat_asymptotes(p);
        os << "cosserat asymptotes [m/s]\n";
        os << "  c1 = sqrt((alpha1+2*alpha3)*mu_e*L_c^2/(3*eta2)) = "
           << num9(c[0]) << "\n";
        os << "  c2 = sqrt((mu_c+mu_e)/rho) = " << num9(c[1]) << "\n";
        os << "  c3 = (1/2)*sqrt((alpha1+alpha2)*mu_e*L_c^2/eta2) = "
           << num9(c[2]) << "\n";
        os << "  c4 = sqrt((lambda_e+2*mu_e)/rho) = " << num9(c[3]) << "\n";
        os << "rotational cut-off [rad/s]\n";
        os << "  omega_r = sqrt(2*mu_c/eta2) = "
           << num9(std::sqrt(2.0 * p.mu_c / p.eta2)) << "\n";
        return os.str();
    }
    if (config.model == ModelTag::CoupleStress) {
        const auto [wl, wt] = couple_stress_pair(p, 1.0);
        os << "acoustic slopes at k -> 0 [m/s]\n";
        os << "  longitudinal = sqrt((lambda_e+2*mu_e)/rho) = " << num9(wl)
           << "\n";
        os << "  transverse   = sqrt(mu_e/rho) = "
           << num9(std::sqrt(p.mu_e / p.rho)) << "\n";
        os << "transverse stiffening term: mu_e*L_c^2*(alpha1+alpha2)/4 = "
           << num9(p.mu_e * p.L_c * p.L_c * (p.alpha1 + p.alpha2) / 4.0)
           << "\n";
        return os.str();
    }

    const Characteristics ch = characteristics(p);
    os << "cut-offs [rad/s]\n";
    os << "  omega_s = sqrt(2*(mu_e+mu_micro)/eta1) = " << num9(ch.cutoff.omega_s)
       << "\n";
    os << "  omega_r = sqrt(2*mu_c/eta2) = " << num9(ch.cutoff.omega_r) << "\n";
    os << "  omega_p = sqrt((3*(lambda_e+lambda_micro)+2*(mu_e+mu_micro))/eta3)"
          " = "
       << num9(ch.cutoff.omega_p) << "\n";
    os << "oblique asymptote slopes [m/s]\n";
    os << "  c_m_d  = sqrt(alpha1*mu_e*L_c^2/eta1) = " << num9(ch.slopes.c_m_d)
       << "\n";
    os << "  c_m_vd = sqrt((alpha1+2*alpha3)*mu_e*L_c^2/(3*eta2)) = "
       << num9(ch.slopes.c_m_vd) << "\n";
    os << "  c_m_dr = (1/2)*sqrt((eta1+eta2)/(eta1*eta2)*(alpha1+alpha2)"
          "*mu_e*L_c^2) = "
       << num9(ch.slopes.c_m_dr) << "\n";
    os << "  c_s    = sqrt((mu_e+mu_c)/rho) = " << num9(ch.slopes.c_s) << "\n";
    os << "  c_p    = sqrt((2*mu_e+lambda_e)/rho) = " << num9(ch.slopes.c_p)
       << "\n";
    os << "  c_m_r  = sqrt((2*eta1+eta3)/(3*eta1*eta3)*alpha2*mu_e*L_c^2) = "
       << num9(ch.slopes.c_m_r) << "\n";

    os << "horizontal asymptotes [rad/s] ("
       << (ch.horiz_model == AsymptoteModel::InternalVariable
               ? "internal-variable closed forms"
               : "relaxed closed forms")
       << ")\n";
    if (ch.horiz.empty()) {
        os << "  no closed form for this alpha profile; see leading-row "
              "roots below\n";
    }
    if (ch.horiz_model == AsymptoteModel::Relaxed && ch.horiz.size() == 2) {
        os << "  sqrt(2*mu_micro/(eta1+eta2)) = " << num9(ch.horiz[0]) << "\n";
        os << "  sqrt(3*(lambda_micro+2*mu_micro)/(2*eta1+eta3)) = "
           << num9(ch.horiz[1]) << "\n";
    } else {
        for (double v : ch.horiz) os << "  " << num9(v) << "\n";
    }

    const BiPoly poly = build_detpoly(p);
    const AsymptoteCrossCheck cc =
        crosscheck_horizontal_asymptotes(poly, ch.horiz);
    os << "detpoly leading row h=" << poly.leading_row() << " roots [rad/s]\n";
    for (double r : cc.leading) os << "  " << num9(r) << "\n";
    if (!ch.horiz.empty()) {
        os << "closed-form vs leading-row cross-check: ";
        if (cc.all_matched()) {
            os << "all matched\n";
        } else {
            os << "MISMATCH (leading row is authoritative); unmatched:";
            for (std::size_t i = 0; i < cc.candidates.size(); ++i) {
                if (!cc.matched[i]) os << " " << num9(cc.candidates[i]);
            }
            os << "\n";
        }
    }

    os << "acoustic tangents [m/s]\n";
    os << "  slope_long  = sqrt((2*mu_macro+lambda_macro)/rho) = "
       << num9(ch.slope_aco_long) << "\n";
    os << "  slope_trans = sqrt(mu_macro/rho) = " << num9(ch.slope_aco_trans)
       << "\n";
    return os.str();
}

std::string bandgap_report(const RunConfig& config) {
    if (config.model != ModelTag::Relaxed &&
        config.model != ModelTag::InternalVariable) {
        throw ModelMismatch(
            "band-gap scan applies to the full (relaxed / internal-variable) "
            "model");
    }
    const MaterialParams p = config.material();
    const std::vector<double> grid = default_omega_grid(p);
    const BandGapReport rep = detect_band_gaps(p, grid);
    const auto names = named_levels(p);

    std::ostringstream os;
    os << "band-gap scan: omega in [" << num9(rep.omega_min) << ", "
       << num9(rep.omega_max) << "] rad/s, " << rep.scan_points
       << " points, edges refined to 1e-4 relative\n";
    if (rep.gaps.empty()) {
        os << "no complete band gap\n";
        return os.str();
    }
    for (std::size_t i = 0; i < rep.gaps.size(); ++i) {
        const auto [lo, hi] = rep.gaps[i];
        os << "gap " << (i + 1) << ": (" << num9(lo) << ", " << num9(hi)
           << ") rad/s\n";
        os << "  lower edge: " << tag_level(names, lo) << "\n";
        os << "  upper edge: " << tag_level(names, hi) << "\n";
    }
    return os.str();
}

std::string plot_svg_from_csv(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        throw IoError("plot: empty CSV input");
    }
    std::vector<std::string> headers;
    {
        std::istringstream hs(line);
        std::string h;
        while (std::getline(hs, h, ',')) headers.push_back(h);
    }
    if (headers.size() < 2 || headers[0] != "k") {
        throw IoError("plot: malformed CSV header");
    }
    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0') {
                throw IoError("plot: bad number at CSV line " +
                              std::to_string(lineno));
            }
            row.push_back(v);
        }
        if (row.size() != headers.size()) {
            throw IoError("plot: wrong column count at CSV line " +
                          std::to_string(lineno));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError("plot: CSV has no data rows");

    double x_max = 0.0, y_max = 0.0;
    for (const auto& row : rows) {
        x_max = std::max(x_max, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            y_max = std::max(y_max, row[c]);
        }
    }
    if (x_max <= 0.0) x_max = 1.0;
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;

    static const std::map<std::string, std::string> colors = {
        {"LA", "#FFA500"},     {"TA", "#00CCCC"},  {"LO1", "#8B0000"},
        {"LO2", "#FF0000"},    {"TO1", "#0000FF"}, {"TO2", "#008000"},
        {"TRO", "#000000"},    {"LSO", "#808080"}, {"TCVO", "#808080"},
        {"TCVO_1", "#808080"}, {"TCVO_2", "#C8C8C8"}, {"TS_dup", "#C8C8C8"},
        {"TA_dup", "#C8C8C8"}, {"TO1_dup", "#C8C8C8"}, {"LS_dup", "#C8C8C8"}};
    auto color_of = [&](const std::string& name) -> std::string {
        const auto it = colors.find(name);
        return it == colors.end() ? "#555555" : it->second;
    };

    const double ml = 70.0, mr = 20.0, mt = 20.0, mb = 50.0;
    const double pw = 800.0 - ml - mr, ph = 600.0 - mt - mb;
    auto px = [&](double x) { return ml + x / x_max * pw; };
    auto py = [&](double y) { return mt + ph - y / y_max * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
          "width=\"800\" height=\"600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
          "fill=\"white\"/>\n";
    // Axes and ticks.
    os << "<line x1=\"" << num2(ml) << "\" y1=\"" << num2(mt + ph)
       << "\" x2=\"" << num2(ml + pw) << "\" y2=\"" << num2(mt + ph)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << num2(ml) << "\" y1=\"" << num2(mt) << "\" x2=\""
       << num2(ml) << "\" y2=\"" << num2(mt + ph) << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double fx = x_max * t / 5.0;
        const double fy = y_max * t / 5.0;
        char lbl[32];
        os << "<line x1=\"" << num2(px(fx)) << "\" y1=\"" << num2(mt + ph)
           << "\" x2=\"" << num2(px(fx)) << "\" y2=\"" << num2(mt + ph + 5)
           << "\" stroke=\"black\"/>\n";
        std::snprintf(lbl, sizeof(lbl), "%.3g", fx);
        os << "<text x=\"" << num2(px(fx)) << "\" y=\"" << num2(mt + ph + 18)
           << "\" font-size=\"11\" text-anchor=\"middle\">" << lbl
           << "</text>\n";
        os << "<line x1=\"" << num2(ml - 5) << "\" y1=\"" << num2(py(fy))
           << "\" x2=\"" << num2(ml) << "\" y2=\"" << num2(py(fy))
           << "\" stroke=\"black\"/>\n";
        std::snprintf(lbl, sizeof(lbl), "%.3g", fy);
        os << "<text x=\"" << num2(ml - 8) << "\" y=\"" << num2(py(fy) + 4)
           << "\" font-size=\"11\" text-anchor=\"end\">" << lbl
           << "</text>\n";
    }
    os << "<text x=\"" << num2(ml + pw / 2) << "\" y=\"" << num2(mt + ph + 38)
       << "\" font-size=\"13\" text-anchor=\"middle\">k [1/m]</text>\n";
    os << "<text x=\"16\" y=\"" << num2(mt + ph / 2)
       << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
          "16 "
       << num2(mt + ph / 2) << ")\">omega [rad/s]</text>\n";

    // Duplicate columns first so the colored curves draw on top of them.
    auto draw_column = [&](std::size_t c) {
        os << "<polyline fill=\"none\" stroke=\"" << color_of(headers[c])
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) os << ' ';
            os << num2(px(rows[i][0])) << ',' << num2(py(rows[i][c]));
        }
        os << "\"/>\n";
    };
    auto is_duplicate = [&](const std::string& name) {
        return (name.size() > 4 &&
                name.compare(name.size() - 4, 4, "_dup") == 0) ||
               name == "TCVO_2";
    };
    for (std::size_t c = 1; c < headers.size(); ++c) {
        if (is_duplicate(headers[c])) draw_column(c);
    }
    for (std::size_t c = 1; c < headers.size(); ++c) {
        if (!is_duplicate(headers[c])) draw_column(c);
    }
    os << "</svg>\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("error writing " + path);
}

void cmd_dispersion(const RunConfig& config, const std::string& out_path) {
    write_file(out_path, dispersion_csv(config));
}

void cmd_characteristics(const RunConfig& config,
                         const std::string& out_path) {
    write_file(out_path, characteristics_report(config));
}

void cmd_bandgap(const RunConfig& config, const std::string& out_path) {
    write_file(out_path, bandgap_report(config));
}

void cmd_sweep(const RunConfig& config, const std::string& out_dir) {
    if (config.sweep_param.empty() || config.sweep_values.empty()) {
        throw MissingKey("sweep requires sweep_param and sweep_values");
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir);

    std::string index;
    for (double value : config.sweep_values) {
        const RunConfig entry =
            with_sweep_value(config, config.sweep_param, value);
        char vbuf[32];
        std::snprintf(vbuf, sizeof(vbuf), "%g", value);
        const std::string name = config.sweep_param + "_" + vbuf + ".csv";
        write_file(out_dir + "/" + name, dispersion_csv(entry));
        index += std::string(vbuf) + " " + name + "\n";
    }
    // Index is written last so readers see a complete sweep.
    write_file(out_dir + "/index.txt", index);
}

void cmd_plot(const std::string& csv_path, const std::string& out_path) {
    const std::string svg = plot_svg_from_csv(read_file(csv_path));
    write_file(out_path, svg);
}

}  // namespace rmm
