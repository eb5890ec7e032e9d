#include "rmm/numkernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rmm {

namespace {

constexpr double kMergeRel = 1e-8;

bool all_finite(const SymBlock3& m) {
    return std::isfinite(m.a11) && std::isfinite(m.a22) &&
           std::isfinite(m.a33) && std::isfinite(m.a12) &&
           std::isfinite(m.a13) && std::isfinite(m.a23);
}

std::array<double, 3> sorted3(double a, double b, double c) {
    std::array<double, 3> r{a, b, c};
    std::sort(r.begin(), r.end());
    return r;
}

// Cyclic Jacobi sweeps on the six stored entries. Converges in a handful of
// sweeps for 3x3; used where the closed form is ill-conditioned.
std::array<double, 3> jacobi3(SymBlock3 m) {
    double a[3][3] = {{m.a11, m.a12, m.a13},
                      {m.a12, m.a22, m.a23},
                      {m.a13, m.a23, m.a33}};
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
        double diag =
            a[0][0] * a[0][0] + a[1][1] * a[1][1] + a[2][2] * a[2][2];
        if (off <= 1e-32 * (diag + off)) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) +
                                  std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    return sorted3(a[0][0], a[1][1], a[2][2]);
}

std::vector<double> derivative(std::span<const double> c) {
    std::vector<double> d;
    for (std::size_t i = 1; i < c.size(); ++i) {
        d.push_back(static_cast<double>(i) * c[i]);
    }
    return d;
}

// Sum_i |c_i| max(1,|x|)^i, the natural residual scale at x.
double local_scale(std::span<const double> c, double x) {
    const double ax = std::max(1.0, std::abs(x));
    double s = 0.0, pw = 1.0;
    for (double ci : c) {
        s += std::abs(ci) * pw;
        pw *= ax;
    }
    return s;
}

double newton_polish(std::span<const double> c,
                     std::span<const double> dc, double x, int iters = 2) {
    for (int it = 0; it < iters; ++it) {
        const double f = poly_eval(c, x);
        const double df = poly_eval(dc, x);
        if (df == 0.0) break;
        const double step = f / df;
        if (!std::isfinite(step)) break;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(x))) break;
        x -= step;
    }
    return x;
}

RealRoots merge_sorted(std::vector<double> roots) {
    std::sort(roots.begin(), roots.end());
    RealRoots out;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i + 1;
        double sum = roots[i];
        while (j < roots.size() &&
               roots[j] - roots[j - 1] <= kMergeRel * (1.0 + std::abs(roots[j]))) {
            sum += roots[j];
            ++j;
        }
        out.roots.push_back(sum / static_cast<double>(j - i));
        out.multiplicities.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::vector<double> quadratic_roots(double c0, double c1, double c2) {
    double disc = c1 * c1 - 4.0 * c2 * c0;
    const double disc_scale = c1 * c1 + 4.0 * std::abs(c2 * c0);
    if (disc < 0.0) {
        // A true double root can land slightly negative in floating point.
        if (disc >= -1e-14 * disc_scale) {
            return {-c1 / (2.0 * c2), -c1 / (2.0 * c2)};
        }
        return {};
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + std::copysign(sq, c1));
    if (q == 0.0) return {0.0, 0.0};
    return {q / c2, c0 / q};
}

// Cardano / trigonometric cubic, monic input x^3 + a x^2 + b x + c.
std::vector<double> cubic_roots_monic(double a, double b, double c) {
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (a * (2.0 * a * a - 9.0 * b) + 27.0 * c) / 54.0;
    const double r2 = r * r;
    const double q3 = q * q * q;
    if (r2 < q3) {
        const double t = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        const double sh = a / 3.0;
        return {m * std::cos(t / 3.0) - sh,
                m * std::cos((t + 2.0 * std::numbers::pi) / 3.0) - sh,
                m * std::cos((t - 2.0 * std::numbers::pi) / 3.0) - sh};
    }
    const double u = std::cbrt(-r - std::copysign(std::sqrt(r2 - q3), r));
    const double v = (u == 0.0) ? 0.0 : q / u;
    std::vector<double> roots{u + v - a / 3.0};
    // The remaining pair is complex unless its imaginary part vanished.
    const double t_im = 0.5 * std::sqrt(3.0) * (u - v);
    if (std::abs(t_im) <= 1e-12 * (std::abs(u) + std::abs(v) + 1e-300)) {
        roots.push_back(-0.5 * (u + v) - a / 3.0);
        roots.push_back(-0.5 * (u + v) - a / 3.0);
    }
    return roots;
}

// Ferrari quartic via the resolvent cubic, monic depressed form.
std::vector<double> quartic_roots_monic(double a, double b, double c,
                                        double d) {
    // x = y - a/4 depresses to y^4 + p y^2 + q y + r.
    const double a2 = a * a;
    const double p = b - 3.0 * a2 / 8.0;
    const double q = c - a * b / 2.0 + a2 * a / 8.0;
    const double r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;
    std::vector<double> ys;
    if (std::abs(q) <=
        1e-14 * (std::abs(p) + std::abs(r) + std::abs(q) + 1.0)) {
        // Biquadratic.
        for (double z : quadratic_roots(r, p, 1.0)) {
            if (z < 0.0) {
                if (z >= -1e-12 * (std::abs(p) + std::abs(r) + 1.0)) z = 0.0;
                else continue;
            }
            const double s = std::sqrt(z);
            ys.push_back(s);
            ys.push_back(-s);
        }
    } else {
        // (y^2 + s y + u)(y^2 - s y + v) with s^2 a nonnegative root of the
        // resolvent z^3 + 2 p z^2 + (p^2 - 4 r) z - q^2 = 0.
        const auto zs = cubic_roots_monic(2.0 * p, p * p - 4.0 * r, -q * q);
        double z = 0.0;
        for (double zi : zs) z = std::max(z, zi);
        if (z <= 0.0) return {};
        const double s = std::sqrt(z);
        const double u = 0.5 * (p + z - q / s);
        const double v = 0.5 * (p + z + q / s);
        for (double y : quadratic_roots(u, s, 1.0)) ys.push_back(y);
        for (double y : quadratic_roots(v, -s, 1.0)) ys.push_back(y);
    }
    for (double& y : ys) y -= a / 4.0;
    return ys;
}

std::size_t effective_degree(std::span<const double> c) {
    std::size_t d = c.size();
    while (d > 0 && c[d - 1] == 0.0) --d;
    if (d == 0) throw ZeroPolynomial("all polynomial coefficients are zero");
    return d - 1;
}

std::vector<double> roots_by_bracketing(std::span<const double> c);

std::vector<double> roots_recursive(std::span<const double> c) {
    const std::size_t deg = effective_degree(c);
    if (deg == 0) return {};
    if (deg == 1) return {-c[0] / c[1]};
    if (deg == 2) return quadratic_roots(c[0], c[1], c[2]);
    return roots_by_bracketing(c);
}

std::vector<double> roots_by_bracketing(std::span<const double> c) {
    const std::size_t deg = effective_degree(c);
    const auto dc = derivative(c.first(deg + 1));
    std::vector<double> crit = roots_recursive(dc);
    std::sort(crit.begin(), crit.end());

    double bound = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
        bound = std::max(bound, std::abs(c[i] / c[deg]));
    }
    bound += 1.0;

    std::vector<double> pts{-bound};
    for (double x : crit) {
        if (x > -bound && x < bound) pts.push_back(x);
    }
    pts.push_back(bound);

    std::vector<double> roots;
    auto value = [&](double x) { return poly_eval(c, x); };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        double fa = value(a), fb = value(b);
        if (fa == 0.0) roots.push_back(a);
        if ((fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0) {
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = value(mid);
                if (fm == 0.0 || b - a <= 1e-15 * (1.0 + std::abs(mid))) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(newton_polish(c, dc, 0.5 * (a + b)));
        }
    }
    // Even-multiplicity roots: p touches zero at a critical point. The
    // critical point is a well-conditioned simple root of p' and is the
    // best available estimate of the double root; plain Newton on p would
    // divide by the vanishing p' and wander off.
    for (double x : crit) {
        if (std::abs(value(x)) <= 1e-9 * local_scale(c, x)) {
            roots.push_back(x);
            roots.push_back(x);
        }
    }
    if (value(bound) == 0.0) roots.push_back(bound);
    return roots;
}

}  // namespace

double SymBlock3::det() const {
    return a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
           a13 * (a12 * a23 - a22 * a13);
}

double SymBlock3::max_abs() const {
    return std::max({std::abs(a11), std::abs(a22), std::abs(a33),
                     std::abs(a12), std::abs(a13), std::abs(a23)});
}

double poly_eval(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
    }
    return acc;
}

std::array<double, 3> symeig3(const SymBlock3& m) {
    if (!all_finite(m)) throw NonFinite("symeig3: non-finite matrix entry");

    const double off2 = m.a12 * m.a12 + m.a13 * m.a13 + m.a23 * m.a23;
    if (off2 == 0.0) return sorted3(m.a11, m.a22, m.a33);

    const double q = m.trace() / 3.0;
    const double p2 = (m.a11 - q) * (m.a11 - q) + (m.a22 - q) * (m.a22 - q) +
                      (m.a33 - q) * (m.a33 - q) + 2.0 * off2;
    const double p = std::sqrt(p2 / 6.0);
    if (p == 0.0) return {q, q, q};

    SymBlock3 b{(m.a11 - q) / p, (m.a22 - q) / p, (m.a33 - q) / p,
                m.a12 / p,       m.a13 / p,       m.a23 / p};
    const double r = 0.5 * b.det();

    // acos is ill-conditioned at |r| ~ 1 (two nearly equal eigenvalues).
    if (1.0 - std::abs(r) <= 1e-13) return jacobi3(m);

    const double phi = std::acos(std::clamp(r, -1.0, 1.0)) / 3.0;
    const double e_hi = q + 2.0 * p * std::cos(phi);
    const double e_lo =
        q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e_mid = 3.0 * q - e_hi - e_lo;
    return sorted3(e_lo, e_mid, e_hi);
}

RealRoots real_roots_poly(std::span<const double> coeffs) {
    const std::size_t deg = effective_degree(coeffs);
    if (deg > 4) {
        throw IndexOutOfRange("real_roots_poly: degree exceeds 4");
    }
    std::vector<double> raw;
    switch (deg) {
        case 0:
            break;
        case 1:
            raw = {-coeffs[0] / coeffs[1]};
            break;
        case 2:
            raw = quadratic_roots(coeffs[0], coeffs[1], coeffs[2]);
            break;
        case 3:
            raw = cubic_roots_monic(coeffs[2] / coeffs[3],
                                    coeffs[1] / coeffs[3],
                                    coeffs[0] / coeffs[3]);
            break;
        default:
            raw = quartic_roots_monic(coeffs[3] / coeffs[4],
                                      coeffs[2] / coeffs[4],
                                      coeffs[1] / coeffs[4],
                                      coeffs[0] / coeffs[4]);
            break;
    }
    const auto dc = derivative(coeffs.first(deg + 1));
    for (double& r : raw) r = newton_polish(coeffs.first(deg + 1), dc, r);
    return merge_sorted(std::move(raw));
}

RealRoots real_roots_any(std::span<const double> coeffs) {
    return merge_sorted(roots_recursive(coeffs));
}

}  // namespace rmm
