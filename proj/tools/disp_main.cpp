#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rmm/emit.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 domain error, 4 I/O error.
constexpr int kConfigError = 2;
constexpr int kDomainError = 3;
constexpr int kIoError = 4;

rmm::RunConfig load_config(const std::string& path, const std::string& mode) {
    const rmm::RunConfig config = rmm::parse_config(rmm::read_file(path));
    const rmm::MaterialParams p = config.material();
    const auto strict_mode = mode == "strict" ? rmm::ValidationMode::Strict
                                              : rmm::ValidationMode::Exploratory;
    const rmm::ValidationReport rep = rmm::validate(p, strict_mode);
    if (mode == "strict") {
        if (!rep.ok()) {
            std::string msg = "material parameters out of range:";
            for (const auto& v : rep.violations) msg += " [" + v.condition + "]";
            throw rmm::InvalidParams(msg);
        }
    } else {
        // Exploratory runs proceed, but anything outside the strict
        // well-posedness range is worth a warning.
        const rmm::ValidationReport strict_rep =
            rmm::validate(p, rmm::ValidationMode::Strict);
        for (const auto& v : strict_rep.violations) {
            std::cerr << "warning: outside well-posedness range: "
                      << v.condition << " (value " << v.value << ")\n";
        }
        if (!rep.ok()) {
            std::string msg = "material parameters inadmissible:";
            for (const auto& v : rep.violations) msg += " [" + v.condition + "]";
            throw rmm::InvalidParams(msg);
        }
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersion analysis for the weighted relaxed micromorphic "
                 "continuum"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string mode = "exploratory";

    auto add_common = [&](CLI::App* sub, const char* default_out) {
        sub->add_option("--config", config_path, "config file path")
            ->required();
        sub->add_option("--out", out_path, "output path");
        sub->add_option("--mode", mode, "validation mode")
            ->check(CLI::IsMember({"strict", "exploratory"}));
        sub->parse_complete_callback([&out_path, default_out] {
            if (out_path.empty()) out_path = default_out;
        });
    };

    CLI::App* characteristics =
        app.add_subcommand("characteristics", "closed-form characteristics");
    add_common(characteristics, "characteristics.txt");
    CLI::App* dispersion =
        app.add_subcommand("dispersion", "sample the dispersion branches");
    add_common(dispersion, "dispersion.csv");
    CLI::App* bandgap = app.add_subcommand("bandgap", "band-gap scan");
    add_common(bandgap, "bandgap.txt");
    CLI::App* sweep =
        app.add_subcommand("sweep", "one dispersion CSV per sweep value");
    add_common(sweep, "sweep_out");
    CLI::App* plot =
        app.add_subcommand("plot", "render a dispersion CSV as SVG");
    add_common(plot, "dispersion.svg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kConfigError;
    }

    try {
        if (plot->parsed()) {
            // For plot, --config names the CSV to render.
            rmm::cmd_plot(config_path, out_path);
        } else {
            const rmm::RunConfig config = load_config(config_path, mode);
            if (characteristics->parsed()) {
                rmm::cmd_characteristics(config, out_path);
            } else if (dispersion->parsed()) {
                rmm::cmd_dispersion(config, out_path);
            } else if (bandgap->parsed()) {
                rmm::cmd_bandgap(config, out_path);
            } else if (sweep->parsed()) {
                rmm::cmd_sweep(config, out_path);
            }
        }
    } catch (const rmm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const rmm::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const rmm::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return 0;
}
