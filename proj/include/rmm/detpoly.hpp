#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "rmm/params.hpp"

namespace rmm {

/// Dense bivariate polynomial in (k^2, omega^2). Raw SI coefficients span
/// ~40 orders of magnitude, so the grid is stored against characteristic
/// scales k0, omega0 with one scale factor per power of k^2; root finding
/// operates on the normalized rows. Exact cancellations (the vanishing
/// c20, c22, c24 and the alpha-dependent rows) leave ~1e-16 floating-point
/// residue; a coefficient is snapped to zero during construction when its
/// signed value falls below 1e-12 of the magnitude accumulated while
/// computing it, which stays meaningful however far the slope and cut-off
/// scales spread.
class BiPoly {
public:
    static constexpr int kMaxH = 12;

    BiPoly() = default;
    BiPoly(double k0sq, double w0,
           std::vector<std::vector<double>> normalized_rows,
           std::vector<double> row_scales);

    /// Evaluates the polynomial at physical (k [1/m], omega [rad/s]).
    double eval(double k, double omega) const;

    /// Highest power of k^2 with a nonzero row; throws ZeroPolynomial when
    /// every row is zero.
    int leading_row() const;

    bool is_zero_row(int h) const;

    /// Physical coefficients of the row polynomial in omega^2 (ascending),
    /// i.e. det(k, omega) = sum_h row_in_si(h)(omega^2) k^(2h). Rows beyond
    /// the stored degree are zero polynomials. Throws IndexOutOfRange for
    /// h outside [0, 12].
    std::vector<double> row_in_si(int h) const;

    /// Row scaled to max |coefficient| = 1 (empty for zero rows).
    std::vector<double> normalized_row(int h) const;

    /// Coefficients in x = k^2/k0sq of the polynomial at fixed omega.
    /// Multiply roots by k0sq() for k^2.
    std::vector<double> restrict_to_omega(double omega) const;

    double k0sq() const { return k0sq_; }
    double w0() const { return w0_; }
    int max_h() const { return static_cast<int>(rows_.size()) - 1; }
    int max_q() const;

private:
    double k0sq_ = 1.0;  // k^2 scale
    double w0_ = 1.0;    // omega^2 scale
    double smax_ = 0.0;  // largest row scale
    std::vector<std::vector<double>> rows_;
    std::vector<double> rscale_;
};

/// det D(k, omega) = det E1 (det E2)^2 det E4 expanded symbolically from
/// the symmetrized blocks. Requires exploratory-admissible parameters.
BiPoly build_detpoly(const MaterialParams& p);

/// Determinants of the individual blocks (E1, E2, E4 order), same
/// representation. The full polynomial is their product with the E2 factor
/// squared.
std::array<BiPoly, 3> block_det_polys(const MaterialParams& p);

/// Row polynomial in omega^2 for k^(2h); see BiPoly::row_in_si.
std::vector<double> coefficient(const BiPoly& poly, int h);

/// Real nonnegative omega roots of the leading row, ascending. These are
/// the only candidate horizontal-asymptote levels.
std::vector<double> leading_roots(const BiPoly& poly);

/// Plain-text dump: `h q coeff` triples in SI units, row-major.
void dump_coefficients(const BiPoly& poly, std::ostream& os);

/// Cross-check of closed-form horizontal asymptotes against the leading
/// determinant row (the authoritative source). Each candidate is matched to
/// the nearest leading root at 1e-6 relative tolerance.
struct AsymptoteCrossCheck {
    std::vector<double> candidates;
    std::vector<bool> matched;
    std::vector<double> leading;  // the detpoly roots themselves

    bool all_matched() const;
};

AsymptoteCrossCheck crosscheck_horizontal_asymptotes(
    const BiPoly& poly, const std::vector<double>& closed_form);

}  // namespace rmm
