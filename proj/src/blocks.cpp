#include "rmm/blocks.hpp"

#include <cmath>

namespace rmm {

BlockCoefficients block_coefficients(const MaterialParams& p) {
    BlockCoefficients c;
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    c.cp2 = (2.0 * p.mu_e + p.lambda_e) / p.rho;
    c.cs2 = (p.mu_e + p.mu_c) / p.rho;
    c.cmd2 = p.alpha1 * mL2 / p.eta1;
    c.cmvd2 = (p.alpha1 + 2.0 * p.alpha3) * mL2 / (3.0 * p.eta2);
    c.omega_s2 = 2.0 * (p.mu_e + p.mu_micro) / p.eta1;
    c.omega_r2 = 2.0 * p.mu_c / p.eta2;
    c.omega_p2 =
        (3.0 * (p.lambda_e + p.lambda_micro) + 2.0 * (p.mu_e + p.mu_micro)) /
        p.eta3;
    return c;
}

BlockEntryPolys block_entry_polys(const MaterialParams& p) {
    const BlockCoefficients c = block_coefficients(p);
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    BlockEntryPolys b;

    b.S1[0] = {0.0, 0.0, c.cp2};
    b.S1[1] = {c.omega_s2, 0.0, p.alpha2 / (3.0 * p.eta1) * mL2};
    b.S1[2] = {c.omega_p2, 0.0, 2.0 * p.alpha2 / (3.0 * p.eta3) * mL2};
    b.S1[3] = {0.0,
               2.0 * std::sqrt(2.0) * p.mu_e / std::sqrt(3.0 * p.rho * p.eta1),
               0.0};
    b.S1[4] = {0.0,
               (3.0 * p.lambda_e + 2.0 * p.mu_e) /
                   std::sqrt(3.0 * p.rho * p.eta3),
               0.0};
    b.S1[5] = {0.0, 0.0,
               -p.alpha2 / std::sqrt(p.eta1 * p.eta3) * std::sqrt(2.0) * mL2 /
                   3.0};

    const double a12sum = p.alpha1 + p.alpha2;
    b.S2[0] = {0.0, 0.0, c.cs2};
    b.S2[1] = {c.omega_s2, 0.0, a12sum / (4.0 * p.eta1) * mL2};
    b.S2[2] = {c.omega_r2, 0.0, a12sum / (4.0 * p.eta2) * mL2};
    b.S2[3] = {0.0, std::sqrt(2.0) * p.mu_e / std::sqrt(p.rho * p.eta1), 0.0};
    // The paper's display writes this entry as omega_r^2 eta2 / rho, which
    // equals 2 mu_c / rho identically.
    b.S2[4] = {0.0, -std::sqrt(2.0) * p.mu_c / std::sqrt(p.rho * p.eta2), 0.0};
    b.S2[5] = {0.0, 0.0, a12sum / std::sqrt(p.eta1 * p.eta2) * mL2 / 4.0};

    b.S4[0] = {c.omega_s2, 0.0, c.cmd2};
    b.S4[1] = {c.omega_r2, 0.0, c.cmvd2};
    b.S4[2] = {c.omega_s2, 0.0, c.cmd2};
    b.S4[3] = b.S4[4] = b.S4[5] = {0.0, 0.0, 0.0};
    return b;
}

namespace {

SymBlock3 eval_entries(const std::array<EntryPoly, 6>& e, double k) {
    return {e[0].at(k), e[1].at(k), e[2].at(k),
            e[3].at(k), e[4].at(k), e[5].at(k)};
}

}  // namespace

BlockSet assemble_blocks(const MaterialParams& p, double k) {
    require_valid(p, ValidationMode::Exploratory);
    if (!(k >= 0.0)) {
        throw NegativeWavenumber("assemble_blocks: wavenumber must be >= 0");
    }
    const BlockEntryPolys e = block_entry_polys(p);
    BlockSet b;
    b.k = k;
    b.S1 = eval_entries(e.S1, k);
    b.S2 = eval_entries(e.S2, k);
    b.S4 = eval_entries(e.S4, k);
    return b;
}

namespace {

std::array<double, 3> block_frequencies(const SymBlock3& s) {
    const double scale = s.max_abs();
    std::array<double, 3> eig = symeig3(s);
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        if (eig[i] < -1e-9 * scale) {
            throw NegativeEigenvalue(
                "omega_spectrum: block eigenvalue below -1e-9*scale, no real "
                "frequency");
        }
        out[i] = std::sqrt(std::max(eig[i], 0.0));
    }
    return out;
}

}  // namespace

OmegaSpectrum omega_spectrum(const BlockSet& blocks) {
    OmegaSpectrum s;
    s.k = blocks.k;
    s.longitudinal = block_frequencies(blocks.S1);
    s.transverse = block_frequencies(blocks.S2);
    s.uncoupled = block_frequencies(blocks.S4);
    return s;
}

OmegaSpectrum omega_spectrum(const MaterialParams& p, double k) {
    return omega_spectrum(assemble_blocks(p, k));
}

}  // namespace rmm
