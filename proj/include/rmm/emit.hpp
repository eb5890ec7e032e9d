#pragma once

#include <string>

#include "rmm/config.hpp"

namespace rmm {

/// Dispersion CSV for the configured model. For the relaxed and
/// internal-variable models the column set is the fixed 12-curve layout
/// `k,LA,TA,LO1,LO2,TO1,TO2,TRO,LSO,TCVO_1,TCVO_2,TS_dup,LS_dup`
/// (the last three columns duplicate the multiplicity-2 transverse
/// curves); limit models emit their own smaller layouts. Frequencies in
/// rad/s at 9 significant digits; output bytes depend only on the config.
std::string dispersion_csv(const RunConfig& config);

/// Human-readable report of every characteristic quantity with the formula
/// it comes from, including the cross-check of the closed-form horizontal
/// asymptotes against the leading determinant row.
std::string characteristics_report(const RunConfig& config);

/// Band-gap intervals with edge provenance (which cut-off or asymptote
/// pins each edge). Full model only (relaxed / internal-variable tags).
std::string bandgap_report(const RunConfig& config);

/// Renders a dispersion CSV (this tool's own format) as an 800x600 SVG
/// with the standard curve colors. Throws IoError on empty or malformed
/// input, before any output is produced.
std::string plot_svg_from_csv(const std::string& csv_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

void cmd_dispersion(const RunConfig& config, const std::string& out_path);
void cmd_characteristics(const RunConfig& config, const std::string& out_path);
void cmd_bandgap(const RunConfig& config, const std::string& out_path);

/// One CSV per sweep value (named <param>_<value>.csv inside out_dir) plus
/// an index.txt written last.
void cmd_sweep(const RunConfig& config, const std::string& out_dir);

void cmd_plot(const std::string& csv_path, const std::string& out_path);

}  // namespace rmm
