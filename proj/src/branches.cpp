#include "rmm/branches.hpp"

#include <algorithm>
#include <cmath>

#include "rmm/characteristics.hpp"
#include "rmm/detpoly.hpp"
#include "rmm/numkernels.hpp"

namespace rmm {

namespace {

constexpr int kTailSamples = 72;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out(n);
    const double ratio = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo * std::exp(ratio * i);
    out.back() = hi;
    return out;
}

double secant(const std::pair<double, double>& a,
              const std::pair<double, double>& b) {
    return (b.second - a.second) / (b.first - a.first);
}

}  // namespace

std::vector<double> KGrid::points() const {
    if (count < 2) throw InvalidParams("KGrid: count must be >= 2");
    if (!(k_max > k_min)) throw InvalidParams("KGrid: k_max must exceed k_min");
    if (spacing == GridSpacing::Log) {
        if (!(k_min > 0.0)) {
            throw InvalidParams("KGrid: log spacing requires k_min > 0");
        }
        return log_grid(k_min, k_max, count);
    }
    if (!(k_min >= 0.0)) throw InvalidParams("KGrid: k_min must be >= 0");
    std::vector<double> out(count);
    const double step = (k_max - k_min) / (count - 1);
    for (int i = 0; i < count; ++i) out[i] = k_min + step * i;
    out.back() = k_max;
    return out;
}

int BranchSet::curve_count() const {
    int n = 0;
    for (const auto& b : branches) n += b.multiplicity;
    return n;
}

const DispersionBranch& BranchSet::by_label(const std::string& label) const {
    for (const auto& b : branches) {
        if (b.label == label) return b;
    }
    throw IndexOutOfRange("no branch labelled " + label);
}

double asymptote_probe_k(const MaterialParams& p) {
    const Cutoffs c = cutoffs(p);
    const ObliqueSlopes s = oblique_slopes(p);
    const double omega_max = std::max({c.omega_s, c.omega_r, c.omega_p});
    double c_min = 0.0;
    for (double v : s.as_vector()) {
        if (v > 0.0) c_min = (c_min == 0.0) ? v : std::min(c_min, v);
    }
    double k_hi = (p.L_c > 0.0) ? 150.0 / p.L_c : 0.0;
    if (c_min > 0.0) k_hi = std::max(k_hi, 300.0 * omega_max / c_min);
    return std::min(k_hi, 1e12);
}

BranchSet compute_branches(const MaterialParams& p, const KGrid& grid) {
    require_valid(p, ValidationMode::Exploratory);
    const std::vector<double> ks = grid.points();

    BranchSet set;
    set.k = ks;
    const char* labels[9] = {"LA",  "LO1",  "LO2", "TA", "TO1",
                             "TO2", "LSO", "TCVO", "TRO"};
    const BranchGroup groups[9] = {
        BranchGroup::Longitudinal, BranchGroup::Longitudinal,
        BranchGroup::Longitudinal, BranchGroup::Transverse,
        BranchGroup::Transverse,   BranchGroup::Transverse,
        BranchGroup::Uncoupled,    BranchGroup::Uncoupled,
        BranchGroup::Uncoupled};
    set.branches.resize(9);
    for (int b = 0; b < 9; ++b) {
        set.branches[b].label = labels[b];
        set.branches[b].group = groups[b];
        set.branches[b].multiplicity =
            (groups[b] == BranchGroup::Transverse) ? 2 : 1;
        set.branches[b].samples.reserve(ks.size());
    }
    for (double k : ks) {
        const OmegaSpectrum s = omega_spectrum(p, k);
        for (int j = 0; j < 3; ++j) {
            set.branches[j].samples.emplace_back(k, s.longitudinal[j]);
            set.branches[3 + j].samples.emplace_back(k, s.transverse[j]);
            set.branches[6 + j].samples.emplace_back(k, s.uncoupled[j]);
        }
    }

    // Boundedness from the tail behavior on a log resample.
    const double k_hi = asymptote_probe_k(p);
    const std::vector<double> tail = log_grid(k_hi * 1e-4, k_hi, kTailSamples);
    std::vector<DispersionBranch> probes(9);
    for (auto& b : probes) b.samples.reserve(tail.size());
    for (double k : tail) {
        const OmegaSpectrum s = omega_spectrum(p, k);
        for (int j = 0; j < 3; ++j) {
            probes[j].samples.emplace_back(k, s.longitudinal[j]);
            probes[3 + j].samples.emplace_back(k, s.transverse[j]);
            probes[6 + j].samples.emplace_back(k, s.uncoupled[j]);
        }
    }
    for (int b = 0; b < 9; ++b) {
        const AsymptoteEstimate est = numeric_asymptote(probes[b], p.L_c);
        set.branches[b].bounded =
            (est.kind == AsymptoteEstimate::Kind::Horizontal);
    }
    return set;
}

AsymptoteEstimate numeric_asymptote(const DispersionBranch& branch,
                                    double L_c) {
    std::vector<std::pair<double, double>> s;
    for (const auto& pt : branch.samples) {
        if (pt.first > 0.0) s.push_back(pt);
    }
    if (s.size() < 4) {
        throw InsufficientRange("numeric_asymptote: too few samples");
    }
    const double k_hi = s.back().first;
    if (L_c > 0.0 && k_hi < 50.0 / L_c) {
        throw InsufficientRange(
            "numeric_asymptote: branch not sampled past 50/L_c");
    }

    // Secant slope across the first decade of sampled wavenumbers and
    // across the last one.
    const double first_hi = s.front().first * 10.0;
    std::size_t i_first = 0;
    while (i_first + 1 < s.size() && s[i_first + 1].first <= first_hi) {
        ++i_first;
    }
    if (i_first == 0) i_first = 1;
    const double slope_first = std::abs(secant(s.front(), s[i_first]));

    std::size_t i_last = s.size() - 1;
    while (i_last > 0 && s[i_last - 1].first >= k_hi / 10.0) --i_last;
    if (i_last == s.size() - 1) --i_last;
    const double slope_last = std::abs(secant(s[i_last], s.back()));

    double tail_level = 0.0;
    int n_tail = 0;
    for (std::size_t i = i_last; i < s.size(); ++i) {
        tail_level += s[i].second;
        ++n_tail;
    }
    tail_level /= n_tail;

    AsymptoteEstimate est;
    const bool degenerate_flat = slope_last * k_hi <= 1e-9 * tail_level;
    if (slope_last < 1e-3 * slope_first || degenerate_flat) {
        est.kind = AsymptoteEstimate::Kind::Horizontal;
        est.value = tail_level;
    } else {
        est.kind = AsymptoteEstimate::Kind::Oblique;
        est.value = secant(s[i_last], s.back());
    }
    return est;
}

namespace {

bool any_admissible_root(const std::vector<double>& coeffs) {
    if (coeffs.empty()) return false;
    bool all_zero = true;
    for (double c : coeffs) all_zero &= (c == 0.0);
    if (all_zero) return true;  // identically zero block: degenerate, roots everywhere
    const RealRoots r = real_roots_poly(coeffs);
    double bound = 1.0;
    for (double root : r.roots) bound = std::max(bound, std::abs(root));
    for (double root : r.roots) {
        if (root >= -1e-12 * bound) return true;
    }
    return false;
}

bool propagating(const std::array<BiPoly, 3>& blocks, double omega) {
    for (const auto& b : blocks) {
        if (any_admissible_root(b.restrict_to_omega(omega))) return true;
    }
    return false;
}

}  // namespace

bool is_propagating(const MaterialParams& p, double omega) {
    return propagating(block_det_polys(p), omega);
}

std::vector<double> default_omega_grid(const MaterialParams& p, int count) {
    const Cutoffs c = cutoffs(p);
    const double top = 1.2 * std::max({c.omega_s, c.omega_r, c.omega_p});
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) grid[i] = top * i / (count - 1);
    return grid;
}

BandGapReport detect_band_gaps(const MaterialParams& p,
                               std::span<const double> omega_grid) {
    require_valid(p, ValidationMode::Exploratory);
    if (omega_grid.size() < 100) {
        throw InvalidParams("detect_band_gaps: need >= 100 scan points");
    }
    if (!std::is_sorted(omega_grid.begin(), omega_grid.end())) {
        throw InvalidParams("detect_band_gaps: scan grid must be ascending");
    }
    const auto blocks = block_det_polys(p);

    std::vector<bool> prop(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i) {
        prop[i] = propagating(blocks, omega_grid[i]);
    }

    auto refine = [&](double lo, double hi, bool lo_prop) {
        // Invariant: predicate differs at lo and hi.
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= 1e-4 * std::max(std::abs(mid), 1e-300)) break;
            if (propagating(blocks, mid) == lo_prop) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    BandGapReport report;
    report.omega_min = omega_grid.front();
    report.omega_max = omega_grid.back();
    report.scan_points = static_cast<int>(omega_grid.size());
    std::size_t i = 0;
    while (i < omega_grid.size()) {
        if (prop[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < omega_grid.size() && !prop[j + 1]) ++j;
        // Runs touching the scan bounds cannot be certified as gaps.
        if (i > 0 && j + 1 < omega_grid.size()) {
            const double lo = refine(omega_grid[i - 1], omega_grid[i], true);
            const double hi = refine(omega_grid[j], omega_grid[j + 1], false);
            report.gaps.emplace_back(lo, hi);
        }
        i = j + 1;
    }
    return report;
}

}  // namespace rmm
