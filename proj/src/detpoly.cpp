#include "rmm/detpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>

#include "rmm/blocks.hpp"
#include "rmm/characteristics.hpp"
#include "rmm/numkernels.hpp"

namespace rmm {

namespace {

// A coefficient whose signed value has cancelled below 1e-12 of the
// magnitude accumulated while computing it is floating-point residue, not
// a real term.
constexpr double kResidueRel = 1e-12;

// Dense polynomial in (k, omega^2) used only during construction. Next to
// the signed coefficients it carries the sum of |term| contributions, so
// exact cancellations can be told apart from genuinely small coefficients
// regardless of the (enormous) dynamic range of the SI units.
struct KwPoly {
    std::vector<std::vector<double>> c;  // c[i][j] multiplies k^i (omega^2)^j
    std::vector<std::vector<double>> mag;

    static KwPoly zero(std::size_t nk, std::size_t nw) {
        KwPoly p;
        p.c.assign(nk, std::vector<double>(nw, 0.0));
        p.mag.assign(nk, std::vector<double>(nw, 0.0));
        return p;
    }

    static KwPoly entry(const EntryPoly& e, bool subtract_w) {
        KwPoly p = zero(3, 2);
        p.c[0][0] = e.c0;
        p.c[1][0] = e.c1;
        p.c[2][0] = e.c2;
        if (subtract_w) p.c[0][1] = -1.0;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                p.mag[i][j] = std::abs(p.c[i][j]);
            }
        }
        return p;
    }

    KwPoly operator*(const KwPoly& o) const {
        KwPoly p = zero(c.size() + o.c.size() - 1,
                        c[0].size() + o.c[0].size() - 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c[i].size(); ++j) {
                if (mag[i][j] == 0.0) continue;
                for (std::size_t a = 0; a < o.c.size(); ++a) {
                    for (std::size_t b = 0; b < o.c[a].size(); ++b) {
                        p.c[i + a][j + b] += c[i][j] * o.c[a][b];
                        p.mag[i + a][j + b] += mag[i][j] * o.mag[a][b];
                    }
                }
            }
        }
        return p;
    }

    KwPoly combine(const KwPoly& o, double sign) const {
        KwPoly p = zero(std::max(c.size(), o.c.size()),
                        std::max(c[0].size(), o.c[0].size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c[i].size(); ++j) {
                p.c[i][j] = c[i][j];
                p.mag[i][j] = mag[i][j];
            }
        }
        for (std::size_t i = 0; i < o.c.size(); ++i) {
            for (std::size_t j = 0; j < o.c[i].size(); ++j) {
                p.c[i][j] += sign * o.c[i][j];
                p.mag[i][j] += o.mag[i][j];
            }
        }
        return p;
    }

    KwPoly operator-(const KwPoly& o) const { return combine(o, -1.0); }
    KwPoly operator+(const KwPoly& o) const { return combine(o, 1.0); }
};

// det of a symmetric 3x3 with polynomial entries (a11,a22,a33,a12,a13,a23
// order, each diagonal entry shifted by -omega^2).
KwPoly det3(const std::array<EntryPoly, 6>& e) {
    const KwPoly a11 = KwPoly::entry(e[0], true);
    const KwPoly a22 = KwPoly::entry(e[1], true);
    const KwPoly a33 = KwPoly::entry(e[2], true);
    const KwPoly a12 = KwPoly::entry(e[3], false);
    const KwPoly a13 = KwPoly::entry(e[4], false);
    const KwPoly a23 = KwPoly::entry(e[5], false);
    return a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
           a13 * (a12 * a23 - a22 * a13);
}

struct Scales {
    double k0sq;
    double w0;
};

// Balance k^2 against omega^2 so the stored rows stay well-conditioned for
// root finding. The geometric mean of the extreme slopes centers the
// spread that high powers of k^2 would otherwise amplify.
Scales characteristic_scales(const MaterialParams& p) {
    const Cutoffs c = cutoffs(p);
    const ObliqueSlopes s = oblique_slopes(p);
    const double w0 = std::max(
        {c.omega_s * c.omega_s, c.omega_r * c.omega_r, c.omega_p * c.omega_p});
    double cmax2 = 0.0;
    double cmin2 = 0.0;
    for (double v : s.as_vector()) {
        const double v2 = v * v;
        if (v2 <= 0.0) continue;
        cmax2 = std::max(cmax2, v2);
        cmin2 = (cmin2 == 0.0) ? v2 : std::min(cmin2, v2);
    }
    assert(w0 > 0.0 && cmax2 > 0.0);
    return {w0 / std::sqrt(cmax2 * cmin2), w0};
}

// Only even powers of k can appear: every permutation product of the
// determinant pairs up the odd (first-row/column) entries.
BiPoly to_bipoly(const KwPoly& kw, const Scales& sc) {
    for (std::size_t i = 1; i < kw.c.size(); i += 2) {
        for (double v : kw.c[i]) {
            assert(v == 0.0);
            (void)v;
        }
    }
    const std::size_t nh = (kw.c.size() + 1) / 2;
    const std::size_t nq = kw.c[0].size();
    std::vector<std::vector<double>> rows(nh, std::vector<double>(nq, 0.0));
    std::vector<double> rscale(nh, 0.0);
    for (std::size_t h = 0; h < nh; ++h) {
        const double xpow = std::pow(sc.k0sq, static_cast<double>(h));
        double wpow = 1.0;
        for (std::size_t q = 0; q < nq; ++q) {
            double v = kw.c[2 * h][q] * xpow * wpow;
            if (std::abs(v) <= kResidueRel * kw.mag[2 * h][q] * xpow * wpow) {
                v = 0.0;
            }
            rows[h][q] = v;
            wpow *= sc.w0;
        }
        for (double v : rows[h]) rscale[h] = std::max(rscale[h], std::abs(v));
        if (rscale[h] > 0.0) {
            for (double& v : rows[h]) v /= rscale[h];
        }
    }
    return BiPoly(sc.k0sq, sc.w0, std::move(rows), std::move(rscale));
}

}  // namespace

BiPoly::BiPoly(double k0sq, double w0,
               std::vector<std::vector<double>> normalized_rows,
               std::vector<double> row_scales)
    : k0sq_(k0sq),
      w0_(w0),
      rows_(std::move(normalized_rows)),
      rscale_(std::move(row_scales)) {
    for (double s : rscale_) smax_ = std::max(smax_, s);
    // Trailing zero rows trimmed; zero polynomials keep one empty row.
    while (rows_.size() > 1 && rscale_.back() == 0.0) {
        rows_.pop_back();
        rscale_.pop_back();
    }
}

double BiPoly::eval(double k, double omega) const {
    const double x = k * k / k0sq_;
    const double w = omega * omega / w0_;
    double acc = 0.0;
    double xpow = 1.0;
    for (std::size_t h = 0; h < rows_.size(); ++h) {
        double row = 0.0;
        for (std::size_t q = rows_[h].size(); q-- > 0;) {
            row = row * w + rows_[h][q];
        }
        acc += rscale_[h] * row * xpow;
        xpow *= x;
    }
    return acc;
}

bool BiPoly::is_zero_row(int h) const {
    if (h < 0 || h > kMaxH) {
        throw IndexOutOfRange("BiPoly row index outside [0, 12]");
    }
    if (h >= static_cast<int>(rows_.size())) return true;
    return rscale_[h] == 0.0;
}

int BiPoly::leading_row() const {
    for (int h = static_cast<int>(rows_.size()) - 1; h >= 0; --h) {
        if (!is_zero_row(h)) return h;
    }
    throw ZeroPolynomial("BiPoly: all rows are zero");
}

std::vector<double> BiPoly::row_in_si(int h) const {
    if (h < 0 || h > kMaxH) {
        throw IndexOutOfRange("BiPoly row index outside [0, 12]");
    }
    if (h >= static_cast<int>(rows_.size()) || rscale_[h] == 0.0) return {};
    std::vector<double> out(rows_[h].size());
    const double xden = std::pow(k0sq_, static_cast<double>(h));
    double wden = 1.0;
    for (std::size_t q = 0; q < out.size(); ++q) {
        out[q] = rows_[h][q] * rscale_[h] / (xden * wden);
        wden *= w0_;
    }
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

std::vector<double> BiPoly::normalized_row(int h) const {
    if (h < 0 || h > kMaxH) {
        throw IndexOutOfRange("BiPoly row index outside [0, 12]");
    }
    if (h >= static_cast<int>(rows_.size())) return {};
    std::vector<double> out = rows_[h];
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

std::vector<double> BiPoly::restrict_to_omega(double omega) const {
    const double w = omega * omega / w0_;
    std::vector<double> out(rows_.size(), 0.0);
    for (std::size_t h = 0; h < rows_.size(); ++h) {
        double row = 0.0;
        for (std::size_t q = rows_[h].size(); q-- > 0;) {
            row = row * w + rows_[h][q];
        }
        out[h] = rscale_[h] * row;
    }
    while (!out.empty() && out.back() == 0.0) out.pop_back();
    return out;
}

int BiPoly::max_q() const {
    int q = 0;
    for (const auto& row : rows_) {
        q = std::max(q, static_cast<int>(row.size()) - 1);
    }
    return q;
}

std::array<BiPoly, 3> block_det_polys(const MaterialParams& p) {
    require_valid(p, ValidationMode::Exploratory);
    const BlockEntryPolys e = block_entry_polys(p);
    const Scales sc = characteristic_scales(p);
    return {to_bipoly(det3(e.S1), sc), to_bipoly(det3(e.S2), sc),
            to_bipoly(det3(e.S4), sc)};
}

BiPoly build_detpoly(const MaterialParams& p) {
    require_valid(p, ValidationMode::Exploratory);
    const BlockEntryPolys e = block_entry_polys(p);
    const Scales sc = characteristic_scales(p);
    const KwPoly d1 = det3(e.S1);
    const KwPoly d2 = det3(e.S2);
    const KwPoly d4 = det3(e.S4);
    return to_bipoly(d1 * d2 * d2 * d4, sc);
}

std::vector<double> coefficient(const BiPoly& poly, int h) {
    return poly.row_in_si(h);
}

std::vector<double> leading_roots(const BiPoly& poly) {
    const int h = poly.leading_row();
    const std::vector<double> row = poly.normalized_row(h);
    const RealRoots r = real_roots_any(row);
    std::vector<double> omegas;
    for (double w : r.roots) {
        if (w < -1e-10) continue;
        omegas.push_back(std::sqrt(std::max(w, 0.0) * poly.w0()));
    }
    std::sort(omegas.begin(), omegas.end());
    return omegas;
}

void dump_coefficients(const BiPoly& poly, std::ostream& os) {
    for (int h = 0; h <= poly.max_h(); ++h) {
        const std::vector<double> row = poly.row_in_si(h);
        for (std::size_t q = 0; q < row.size(); ++q) {
            os << h << ' ' << q << ' ' << row[q] << '\n';
        }
    }
}

bool AsymptoteCrossCheck::all_matched() const {
    return std::all_of(matched.begin(), matched.end(),
                       [](bool b) { return b; });
}

AsymptoteCrossCheck crosscheck_horizontal_asymptotes(
    const BiPoly& poly, const std::vector<double>& closed_form) {
    AsymptoteCrossCheck cc;
    cc.candidates = closed_form;
    cc.leading = leading_roots(poly);
    for (double v : closed_form) {
        bool hit = false;
        for (double r : cc.leading) {
            if (std::abs(v - r) <= 1e-6 * std::max({std::abs(v), std::abs(r),
                                                    1e-300})) {
                hit = true;
                break;
            }
        }
        cc.matched.push_back(hit);
    }
    return cc;
}

}  // namespace rmm
