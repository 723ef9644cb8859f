#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sphere_poincare/sharp.hpp"
#include "sphere_poincare/spectral.hpp"

using namespace sphere_poincare;

namespace {

const double kRoot4Pi = std::sqrt(4.0 * kPi);

CoeffSet single(int family, int n, int j, double v)
{
    CoeffSet c(std::max(n, 1));
    c.set(family, n, j, v);
    return c;
}

}  // namespace

TEST_CASE("dirichlet_energy examples")
{
    CHECK(dirichlet_energy(single(1, 0, 0, kRoot4Pi)) == doctest::Approx(8.0 * kPi).epsilon(1e-14));
    CHECK(dirichlet_energy(single(2, 1, 0, kRoot4Pi)) == doctest::Approx(8.0 * kPi).epsilon(1e-14));
    CHECK(dirichlet_energy(CoeffSet(3)) == 0.0);
}

TEST_CASE("anisotropy_energy examples")
{
    CHECK(anisotropy_energy(single(1, 0, 0, kRoot4Pi)) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(anisotropy_energy(single(2, 1, 0, kRoot4Pi)) == 0.0);
    CoeffSet c(1);
    c.set(1, 1, 1, 0.8);
    c.set(2, 1, 1, -1.7);
    CHECK(anisotropy_energy(c) == doctest::Approx(0.64).epsilon(1e-15));
    // Quadrature agrees.
    const auto g = default_grid(1);
    CHECK(std::abs(normal_component_sq(synthesize(c, g)) - 0.64) <= 1e-13);
}

TEST_CASE("g_kappa examples")
{
    for (double kappa : {-8.0, -4.0, 0.0, 3.5}) {
        CHECK(g_kappa(single(1, 0, 0, kRoot4Pi), kappa) == doctest::Approx(4.0 * kPi * (kappa + 2.0)).epsilon(1e-13));
        const double x = 0.9, y = -0.4;
        CoeffSet c(1);
        c.set(1, 1, 1, x);
        c.set(2, 1, 1, y);
        const double alpha = (kappa + 4.0) * x * x - 4.0 * std::sqrt(2.0) * x * y + 2.0 * y * y;
        CHECK(std::abs(g_kappa(c, kappa) - alpha) <= 1e-13);
    }
    CHECK(g_kappa(CoeffSet(2), 5.0) == 0.0);
}

TEST_CASE("norm_sq examples and Parseval")
{
    CHECK(norm_sq(single(1, 0, 0, kRoot4Pi)) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(norm_sq(CoeffSet(2)) == 0.0);
    const int band = 4;
    const VshTable table(default_grid(band), band);
    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int k = 0; k < 30; ++k) {
        const auto c = random_normalized_coeffs(band, rng);
        const auto u = table.synthesize(c);
        worst = std::max(worst, std::abs(inner_product(u, u) - norm_sq(c)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("g_kappa equals dirichlet + kappa anisotropy on 1000 random sets")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> kd(-10.0, 10.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto c = random_normalized_coeffs(3, rng);
        const double kappa = kd(rng);
        const double rhs = dirichlet_energy(c) + kappa * anisotropy_energy(c);
        worst = std::max(worst, std::abs(g_kappa(c, kappa) - rhs) / std::max(1.0, std::abs(rhs)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("spectral and quadrature routes agree on 100 random band-4 fields")
{
    const int band = 4;
    const VshTable table(default_grid(band), band);
    std::mt19937_64 rng(77);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto c = random_normalized_coeffs(band, rng);
        const auto u = table.synthesize(c);
        for (double kappa : {-8.0, -4.0, 0.0, 6.0}) {
            const auto check = energy_report(u, kappa, band);
            CHECK(check.agree);
            worst = std::max(worst, check.max_rel_diff);
            const auto direct = energy_report(c, kappa);
            worst = std::max(worst, std::abs(direct.total - check.quadrature.total) / std::max(1.0, std::abs(direct.total)));
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("random sets are normalized and tangential draws have no radial part")
{
    std::mt19937_64 rng(4);
    const auto c = random_normalized_coeffs(5, rng);
    CHECK(std::abs(norm_sq(c) - 4.0 * kPi) <= 1e-12);
    const auto t = random_tangential_coeffs(5, rng);
    CHECK(anisotropy_energy(t) == 0.0);
    CHECK(std::abs(norm_sq(t) - 4.0 * kPi) <= 1e-12);
    CHECK_THROWS(random_tangential_coeffs(0, rng));
}

TEST_CASE("Poincare inequality on 1000 random normalized sets")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> kd(-10.0, 10.0);
    double worst = -1.0;
    double worst_shifted = -1.0;
    for (int k = 0; k < 1000; ++k) {
        const auto c = random_normalized_coeffs(4, rng);
        const double kappa = kd(rng);
        worst = std::max(worst, 4.0 * kPi * sphere_poincare::gamma(kappa) - g_kappa(c, kappa));
        if (kappa < 0.0) {
            // int |u x n|^2 = norm_sq - anisotropy
            const double lhs = dirichlet_energy(c) + std::abs(kappa) * (norm_sq(c) - anisotropy_energy(c));
            worst_shifted = std::max(worst_shifted, shifted_constant(kappa) * norm_sq(c) - lhs);
        }
    }
    CHECK(worst <= 1e-9);
    CHECK(worst_shifted <= 1e-9);
}

TEST_CASE("energy_report examples")
{
    const auto g = default_grid(2);
    const auto n = normal_field(g);
    const auto r = energy_report(n, -8.0, 2);
    CHECK(r.agree);
    CHECK(r.spectral.dirichlet == doctest::Approx(8.0 * kPi).epsilon(1e-12));
    CHECK(r.spectral.anisotropy == doctest::Approx(4.0 * kPi).epsilon(1e-12));
    CHECK(r.spectral.total == doctest::Approx(-24.0 * kPi).epsilon(1e-12));
    CHECK(r.quadrature.total == doctest::Approx(-24.0 * kPi).epsilon(1e-12));
    CHECK(r.spectral.total == r.spectral.dirichlet + r.spectral.kappa * r.spectral.anisotropy);

    for (double kappa : {-3.0, 0.0, 9.0}) {
        const auto e = energy_report(single(2, 1, 0, kRoot4Pi), kappa);
        CHECK(e.total == doctest::Approx(8.0 * kPi).epsilon(1e-14));
        CHECK(e.norm_sq == doctest::Approx(4.0 * kPi).epsilon(1e-14));
        CHECK(e.total / e.norm_sq == doctest::Approx(2.0).epsilon(1e-14));
    }

    const auto z = energy_report(SampledVectorField(g), 1.5, 2);
    CHECK(z.agree);
    CHECK(z.spectral.total == 0.0);
    CHECK(z.quadrature.total == 0.0);
    CHECK(z.quadrature.norm_sq == 0.0);

    CHECK_THROWS_AS(energy_report(n, 1.0, 5), std::invalid_argument);
}

TEST_CASE("energy_report flags a field outside the band limit")
{
    // A degree-3 field analyzed at band 1 loses energy on the spectral side only.
    const auto g = default_grid(3);
    CoeffSet c(3);
    c.set(3, 3, 1, 1.0);
    const auto r = energy_report(synthesize(c, g), 0.0, 1);
    CHECK_FALSE(r.agree);
    CHECK(r.max_rel_diff > 1e-3);
}

TEST_CASE("EnergyBreakdown JSON record")
{
    const auto e = energy_report(single(1, 0, 0, kRoot4Pi), -8.0);
    const auto j = nlohmann::json::parse(to_json(e));
    CHECK(j.at("route") == "spectral");
    CHECK(j.at("kappa").get<double>() == -8.0);
    CHECK(j.at("total").get<double>() == doctest::Approx(-24.0 * kPi));
    for (const char* key : {"dirichlet", "anisotropy", "total", "norm_sq", "kappa", "route"}) CHECK(j.contains(key));
}
