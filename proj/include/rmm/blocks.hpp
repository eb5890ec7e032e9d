#pragma once

#include <array>

#include "rmm/numkernels.hpp"
#include "rmm/params.hpp"

namespace rmm {

/// The three symmetrized blocks of the plane-wave acoustic tensor at a
/// fixed wavenumber (the omega^2-shifted blocks; frequencies are their
/// eigenvalues). S2 carries the transverse dynamics twice, once per
/// polarization. S4 is diagonal by construction.
struct BlockSet {
    SymBlock3 S1;  // longitudinal: (u1, deviatoric, spherical) coordinates
    SymBlock3 S2;  // transverse: (u_xi, symmetric-shear, rotational)
    SymBlock3 S4;  // uncoupled micro-distortion components
    double k = 0.0;  // wavenumber [1/m]
};

/// Twelve eigenfrequencies at one wavenumber, grouped by block.
struct OmegaSpectrum {
    std::array<double, 3> longitudinal{};  // ascending [rad/s]
    std::array<double, 3> transverse{};    // ascending, multiplicity 2 each
    std::array<double, 3> uncoupled{};     // ascending
    double k = 0.0;
};

/// Coefficients shared by the block entries; see also characteristics.hpp
/// for the asymptotic role each one plays.
struct BlockCoefficients {
    double cp2 = 0.0;        // (2 mu_e + lambda_e)/rho
    double cs2 = 0.0;        // (mu_e + mu_c)/rho
    double cmd2 = 0.0;       // alpha1 mu_e L_c^2 / eta1
    double cmvd2 = 0.0;      // (alpha1 + 2 alpha3) mu_e L_c^2 / (3 eta2)
    double omega_s2 = 0.0;   // 2 (mu_e + mu_micro)/eta1
    double omega_r2 = 0.0;   // 2 mu_c / eta2
    double omega_p2 = 0.0;   // (3 (lambda_e+lambda_micro) + 2 (mu_e+mu_micro))/eta3
};

BlockCoefficients block_coefficients(const MaterialParams& p);

/// One block entry as a polynomial c0 + c1 k + c2 k^2 in the wavenumber.
struct EntryPoly {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;

    double at(double k) const { return (c2 * k + c1) * k + c0; }
};

/// Entry polynomials of the three symmetrized blocks, stored in the order
/// (a11, a22, a33, a12, a13, a23). Shared by the per-wavenumber assembly
/// and the symbolic determinant expansion so both use identical
/// coefficients.
struct BlockEntryPolys {
    std::array<EntryPoly, 6> S1, S2, S4;
};

BlockEntryPolys block_entry_polys(const MaterialParams& p);

/// Assembles the symmetrized real blocks at wavenumber k. Requires
/// exploratory-admissible parameters and k >= 0; throws InvalidParams or
/// NegativeWavenumber otherwise.
BlockSet assemble_blocks(const MaterialParams& p, double k);

/// Eigenfrequencies sqrt(eig(S_i)) of all three blocks. Eigenvalues below
/// -1e-9 * max|entry| signal an assembly bug and raise NegativeEigenvalue;
/// small negative roundoff is clamped to zero.
OmegaSpectrum omega_spectrum(const MaterialParams& p, double k);
OmegaSpectrum omega_spectrum(const BlockSet& blocks);

}  // namespace rmm
