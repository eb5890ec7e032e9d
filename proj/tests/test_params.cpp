#include <random>

#include "doctest.h"
#include "rmm/params.hpp"
#include "test_support.hpp"

using namespace rmm;
using rmmtest::rel_err;

TEST_CASE("reference parameters pass strict validation") {
    const ValidationReport rep =
        validate(reference_params(), ValidationMode::Strict);
    CHECK(rep.ok());
}

TEST_CASE("zero mu_e violates the strict shear bound") {
    MaterialParams p = reference_params();
    p.mu_e = 0.0;
    const ValidationReport rep = validate(p, ValidationMode::Strict);
    REQUIRE(!rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found |= (v.condition == "mu_e > 0");
    CHECK(found);
}

TEST_CASE("vanishing curvature weights: strict rejects, exploratory admits") {
    MaterialParams p = reference_params();
    p.alpha1 = p.alpha2 = p.alpha3 = 0.0;
    const ValidationReport strict = validate(p, ValidationMode::Strict);
    REQUIRE(strict.violations.size() == 2);
    CHECK(strict.violations[0].field == "alpha1");
    CHECK(strict.violations[1].field == "alpha2");
    CHECK(validate(p, ValidationMode::Exploratory).ok());
}

TEST_CASE("validation is pure and deterministic") {
    MaterialParams p = reference_params();
    p.mu_e = -1.0;
    p.rho = 0.0;
    const ValidationReport a = validate(p, ValidationMode::Strict);
    const ValidationReport b = validate(p, ValidationMode::Strict);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].field == b.violations[i].field);
        CHECK(a.violations[i].condition == b.violations[i].condition);
    }
}

TEST_CASE("macro moduli at the reference material") {
    // By hand: mu = 2e8*1e8/3e8 = 2e8/3; the bulk term is 16e8*5e8/21e8,
    // so lambda = (80e8/21 - 4e8/3)/3 = 52e8/63.
    const MacroModuli m = macro_moduli(reference_params());
    CHECK(rel_err(m.mu_macro, 2e8 / 3.0) < 1e-14);
    CHECK(rel_err(m.lambda_macro, 52e8 / 63.0) < 1e-14);
    CHECK(rel_err(m.mu_macro, 6.6667e7) < 1e-4);
    CHECK(rel_err(m.lambda_macro, 8.254e7) < 1e-4);
    CHECK(rel_err(m.kappa_macro,
                  (2.0 * m.mu_macro + 3.0 * m.lambda_macro) / 3.0) == 0.0);
}

TEST_CASE("symmetric moduli give half the shear modulus") {
    MaterialParams p = reference_params();
    p.mu_e = p.mu_micro = 3.7e8;
    p.lambda_e = p.lambda_micro = 0.0;
    CHECK(rel_err(macro_moduli(p).mu_macro, 1.85e8) < 1e-14);
}

TEST_CASE("near-rigid micro limit recovers mu_e") {
    MaterialParams p = reference_params();
    p.mu_micro = 1e12 * p.mu_e;
    CHECK(rel_err(macro_moduli(p).mu_macro, p.mu_e) < 1e-10);
}

TEST_CASE("macro moduli degenerate denominators throw") {
    MaterialParams p = reference_params();
    p.mu_e = 1e8;
    p.mu_micro = -1e8;
    CHECK_THROWS_AS(macro_moduli(p), DegenerateDenominator);
    p = reference_params();
    p.lambda_e = -(2.0 * (p.mu_e + p.mu_micro) + 3.0 * p.lambda_micro) / 3.0;
    CHECK_THROWS_AS(macro_moduli(p), DegenerateDenominator);
}

TEST_CASE("beta_plus values") {
    CHECK(rel_err(beta_plus(reference_params()), 2.0 / 3.0) < 1e-15);
    MaterialParams p = reference_params();
    p.mu_e = p.mu_micro = 5e8;
    CHECK(beta_plus(p) == 0.5);
    p.mu_e = 1e8;
    p.mu_micro = 3e8;
    CHECK(beta_plus(p) == 0.25);
    CHECK(beta_plus(p) < 0.5);
}

TEST_CASE("harmonic-mean and beta invariants on random admissible draws") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        const MaterialParams p = rmmtest::random_params(rng);
        const MacroModuli m = macro_moduli(p);
        CHECK(m.mu_macro < p.mu_e);
        CHECK(m.mu_macro < p.mu_micro);
        const double b = beta_plus(p);
        CHECK(b > 0.0);
        CHECK(b < 1.0);
        CHECK(rel_err(b / (1.0 - b), p.mu_e / p.mu_micro) < 1e-12);
    }
}
