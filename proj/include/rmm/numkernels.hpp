#pragma once

#include <array>
#include <span>
#include <vector>

#include "rmm/errors.hpp"

namespace rmm {

/// Real symmetric 3x3 matrix stored by its six independent entries.
struct SymBlock3 {
    double a11 = 0.0, a22 = 0.0, a33 = 0.0;
    double a12 = 0.0, a13 = 0.0, a23 = 0.0;

    double trace() const { return a11 + a22 + a33; }
    double det() const;
    double max_abs() const;
};

/// Eigenvalues of a real symmetric 3x3 matrix, ascending. Uses the
/// trigonometric closed form; falls back to cyclic Jacobi sweeps when the
/// normalized discriminant is within 1e-13 of zero (near-degenerate
/// spectra, e.g. at branch crossings). Throws NonFinite on NaN/Inf input.
std::array<double, 3> symeig3(const SymBlock3& m);

/// Real roots with multiplicities, sorted ascending.
struct RealRoots {
    std::vector<double> roots;
    std::vector<int> multiplicities;

    std::size_t count() const { return roots.size(); }
};

/// Real roots of a polynomial given by ascending coefficients, degree <= 4
/// after dropping zero leading coefficients. Analytic formulas plus one
/// Newton polish step; roots closer than 1e-8*(1+|r|) are merged into one
/// root with higher multiplicity. Throws ZeroPolynomial when every
/// coefficient is zero.
RealRoots real_roots_poly(std::span<const double> coeffs);

/// Real roots for arbitrary (modest) degree via recursive critical-point
/// bracketing: the roots of p' split the axis into monotonic intervals,
/// each holding at most one sign change. Even-multiplicity roots are picked
/// up where p touches zero at a critical point. Same merge rule and error
/// contract as real_roots_poly. Intended for coefficients of roughly unit
/// scale; normalize first.
RealRoots real_roots_any(std::span<const double> coeffs);

/// p(x) by Horner's rule, ascending coefficients.
double poly_eval(std::span<const double> coeffs, double x);

}  // namespace rmm
