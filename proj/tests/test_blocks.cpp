#include <algorithm>
#include <complex>
#include <map>
#include <random>

#include "doctest.h"
#include "rmm/blocks.hpp"
#include "rmm/numkernels.hpp"
#include "test_support.hpp"

using namespace rmm;
using rmmtest::rel_err;

namespace {

using C3 = std::array<std::array<std::complex<double>, 3>, 3>;

// The unsymmetrized complex blocks B_i = E_i + omega^2 * 1, written out
// exactly as displayed, kept as the independent oracle for the symmetrized
// assembly.
C3 complex_B1(const MaterialParams& p, double k) {
    const std::complex<double> I(0.0, 1.0);
    const BlockCoefficients c = block_coefficients(p);
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    C3 b{};
    b[0][0] = c.cp2 * k * k;
    b[0][1] = 2.0 * I * k * p.mu_e / p.rho;
    b[0][2] = I * k * (3.0 * p.lambda_e + 2.0 * p.mu_e) / p.rho;
    b[1][0] = -4.0 / 3.0 * p.mu_e / p.eta1 * I * k;
    b[1][1] = p.alpha2 / (3.0 * p.eta1) * k * k * mL2 + c.omega_s2;
    b[1][2] = -2.0 / 3.0 * p.alpha2 / p.eta1 * k * k * mL2;
    b[2][0] = -I * k * (3.0 * p.lambda_e + 2.0 * p.mu_e) / (3.0 * p.eta3);
    b[2][1] = -1.0 / 3.0 * p.alpha2 / p.eta3 * k * k * mL2;
    b[2][2] = 2.0 / 3.0 * p.alpha2 / p.eta3 * k * k * mL2 + c.omega_p2;
    return b;
}

C3 complex_B2(const MaterialParams& p, double k) {
    const std::complex<double> I(0.0, 1.0);
    const BlockCoefficients c = block_coefficients(p);
    const double mL2 = p.mu_e * p.L_c * p.L_c;
    const double curv1 = k * k * mL2 * 0.25 * (p.alpha1 + p.alpha2) / p.eta1;
    const double curv2 = k * k * mL2 * 0.25 * (p.alpha1 + p.alpha2) / p.eta2;
    C3 b{};
    b[0][0] = c.cs2 * k * k;
    b[0][1] = 2.0 * I * k * p.mu_e / p.rho;
    // Displayed as -i k omega_r^2 eta2 / rho; identical to -i k 2 mu_c/rho.
    b[0][2] = -I * k * c.omega_r2 * p.eta2 / p.rho;
    b[1][0] = -I * k * p.mu_e / p.eta1;
    b[1][1] = curv1 + c.omega_s2;
    b[1][2] = curv1;
    b[2][0] = 0.5 * I * k * c.omega_r2;
    b[2][1] = curv2;
    b[2][2] = curv2 + c.omega_r2;
    return b;
}

std::complex<double> det3c(const C3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Characteristic cubic of a complex block. Its coefficients come out real
// because the off-diagonal i k factors always pair up.
std::vector<double> complex_char_cubic(const C3& m) {
    const std::complex<double> tr = m[0][0] + m[1][1] + m[2][2];
    const std::complex<double> m2 =
        m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
        m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const std::complex<double> det = det3c(m);
    double scale = std::max({std::abs(det), std::abs(m2), std::abs(tr), 1.0});
    REQUIRE(std::abs(det.imag()) < 1e-10 * scale);
    REQUIRE(std::abs(m2.imag()) < 1e-10 * scale);
    REQUIRE(std::abs(tr.imag()) < 1e-10 * scale);
    return {det.real(), -m2.real(), tr.real(), -1.0};
}

std::vector<double> oracle_eigs(const C3& m) {
    const RealRoots r = real_roots_poly(complex_char_cubic(m));
    std::vector<double> flat;
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        for (int j = 0; j < r.multiplicities[i]; ++j) {
            flat.push_back(r.roots[i]);
        }
    }
    return flat;
}

}  // namespace

TEST_CASE("reference material at k = 0: S1 is diag(0, omega_s^2, omega_p^2)") {
    const BlockSet b = assemble_blocks(reference_params(), 0.0);
    CHECK(b.S1.a11 == 0.0);
    CHECK(rel_err(b.S1.a22, 6e10) < 1e-14);
    CHECK(rel_err(b.S1.a33, 2.1e11) < 1e-14);
    CHECK(b.S1.a12 == 0.0);
    CHECK(b.S1.a13 == 0.0);
    CHECK(b.S1.a23 == 0.0);
}

TEST_CASE("all off-diagonals vanish at k = 0 for random parameters") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        const BlockSet b = assemble_blocks(rmmtest::random_params(rng), 0.0);
        for (const SymBlock3* s : {&b.S1, &b.S2, &b.S4}) {
            CHECK(s->a12 == 0.0);
            CHECK(s->a13 == 0.0);
            CHECK(s->a23 == 0.0);
        }
    }
}

TEST_CASE("symmetrized blocks are similar to the complex originals") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 40; ++it) {
        const MaterialParams p =
            (it == 0) ? reference_params() : rmmtest::random_params(rng);
        for (double k : {100.0, 1e3 * (it % 7 + 1)}) {
            const BlockSet b = assemble_blocks(p, k);
            const auto e1 = symeig3(b.S1);
            const auto o1 = oracle_eigs(complex_B1(p, k));
            REQUIRE(o1.size() == 3);
            for (int i = 0; i < 3; ++i) {
                CHECK(rel_err(e1[i], o1[i]) < 1e-8);
            }
            const auto e2 = symeig3(b.S2);
            const auto o2 = oracle_eigs(complex_B2(p, k));
            REQUIRE(o2.size() == 3);
            for (int i = 0; i < 3; ++i) {
                CHECK(rel_err(e2[i], o2[i]) < 1e-8);
            }
        }
    }
}

TEST_CASE("the two printed forms of the S2 rotational coupling coincide") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 100; ++it) {
        const MaterialParams p = rmmtest::random_params(rng);
        const BlockCoefficients c = block_coefficients(p);
        CHECK(rel_err(c.omega_r2 * p.eta2, 2.0 * p.mu_c) < 1e-15);
    }
}

TEST_CASE("omega_spectrum at k = 0 yields the cut-off groups") {
    const OmegaSpectrum s = omega_spectrum(reference_params(), 0.0);
    const double ws = std::sqrt(6e10);
    const double wr = std::sqrt(8.8e10);
    const double wp = std::sqrt(2.1e11);
    CHECK(s.longitudinal[0] == 0.0);
    CHECK(rel_err(s.longitudinal[1], ws) < 1e-12);
    CHECK(rel_err(s.longitudinal[2], wp) < 1e-12);
    CHECK(s.transverse[0] == 0.0);
    CHECK(rel_err(s.transverse[1], ws) < 1e-12);
    CHECK(rel_err(s.transverse[2], wr) < 1e-12);
    CHECK(rel_err(s.uncoupled[0], ws) < 1e-12);
    CHECK(rel_err(s.uncoupled[1], ws) < 1e-12);
    CHECK(rel_err(s.uncoupled[2], wr) < 1e-12);
    // Spec-level reference values.
    CHECK(rel_err(ws, 2.4495e5) < 1e-4);
    CHECK(rel_err(wr, 2.9665e5) < 1e-4);
    CHECK(rel_err(wp, 4.5826e5) < 1e-4);
}

TEST_CASE("mu_c = 0 gives six acoustic curves at k = 0") {
    MaterialParams p = reference_params();
    p.mu_c = 0.0;
    const OmegaSpectrum s = omega_spectrum(p, 0.0);
    // Transverse double zero (counts twice) plus an uncoupled zero join the
    // three displacement zeros: 6 acoustic curves.
    CHECK(s.transverse[0] == 0.0);
    CHECK(s.transverse[1] == 0.0);
    CHECK(s.uncoupled[0] == 0.0);
    CHECK(s.longitudinal[0] == 0.0);
}

TEST_CASE("uncoupled frequencies are analytic") {
    const MaterialParams p = reference_params();
    const BlockCoefficients c = block_coefficients(p);
    const double k = 1e4;
    const OmegaSpectrum s = omega_spectrum(p, k);
    std::array<double, 3> expect{
        std::sqrt(c.cmd2 * k * k + c.omega_s2),
        std::sqrt(c.cmvd2 * k * k + c.omega_r2),
        std::sqrt(c.cmd2 * k * k + c.omega_s2)};
    std::sort(expect.begin(), expect.end());
    for (int i = 0; i < 3; ++i) {
        CHECK(rel_err(s.uncoupled[i], expect[i]) < 1e-12);
    }
}

TEST_CASE("k = 0 multiset: zeros x3, omega_s x5, omega_r x3, omega_p x1") {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 20) {
        const MaterialParams p = rmmtest::random_params(rng);
        const BlockCoefficients c = block_coefficients(p);
        const double ws = std::sqrt(c.omega_s2), wr = std::sqrt(c.omega_r2),
                     wp = std::sqrt(c.omega_p2);
        // Only count parameter draws with well-separated cut-offs.
        const double sep = 1e-3 * std::max({ws, wr, wp});
        if (std::abs(ws - wr) < sep || std::abs(ws - wp) < sep ||
            std::abs(wr - wp) < sep || wr < sep) {
            continue;
        }
        ++checked;
        const OmegaSpectrum s = omega_spectrum(p, 0.0);
        std::map<int, int> counts;  // key: 0 zero, 1 ws, 2 wr, 3 wp
        auto classify = [&](double w, int copies) {
            if (w < sep) counts[0] += copies;
            else if (rel_err(w, ws) < 1e-9) counts[1] += copies;
            else if (rel_err(w, wr) < 1e-9) counts[2] += copies;
            else if (rel_err(w, wp) < 1e-9) counts[3] += copies;
            else FAIL("unclassified cut-off value");
        };
        for (double w : s.longitudinal) classify(w, 1);
        for (double w : s.transverse) classify(w, 2);
        for (double w : s.uncoupled) classify(w, 1);
        CHECK(counts[0] == 3);
        CHECK(counts[1] == 5);
        CHECK(counts[2] == 3);
        CHECK(counts[3] == 1);
    }
}

TEST_CASE("spectra stay real and nonnegative over a wavenumber sweep") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 20; ++it) {
        const MaterialParams p = rmmtest::random_params(rng);
        for (int i = 0; i <= 40; ++i) {
            const double k = 1e6 * i / 40.0;
            const OmegaSpectrum s = omega_spectrum(p, k);  // throws if negative
            for (double w : s.longitudinal) CHECK(w >= 0.0);
        }
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(assemble_blocks(reference_params(), -1.0),
                    NegativeWavenumber);
    MaterialParams p = reference_params();
    p.eta1 = 0.0;
    CHECK_THROWS_AS(assemble_blocks(p, 1.0), InvalidParams);
}
