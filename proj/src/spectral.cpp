#include "sphere_poincare/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sphere_poincare {

namespace {

template <class Term>
double sum_over_degrees(const CoeffSet& c, Term&& term)
{
    double sum = 0.0;
    for (int n = 0; n <= c.band_limit(); ++n) {
        const double nstar = n * (n + 1.0);
        for (int j = -n; j <= n; ++j) sum += term(nstar, c(1, n, j), c(2, n, j), c(3, n, j));
    }
    return sum;
}

double relative_diff(double a, double b, double scale)
{
    const double denom = std::max({std::abs(a), std::abs(b), scale});
    return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

CoeffSet rescale_to_sphere(CoeffSet c)
{
    const double s = norm_sq(c);
    if (s == 0.0) throw std::runtime_error("random coefficient draw degenerated to zero");
    c *= std::sqrt(kFourPi / s);
    return c;
}

}  // namespace

double dirichlet_energy(const CoeffSet& c)
{
    return sum_over_degrees(c, [](double ns, double u1, double u2, double u3) {
        return (ns + 2.0) * u1 * u1 - 4.0 * std::sqrt(ns) * u1 * u2 + ns * u2 * u2 + ns * u3 * u3;
    });
}

double anisotropy_energy(const CoeffSet& c)
{
    return sum_over_degrees(c, [](double, double u1, double, double) { return u1 * u1; });
}

double g_kappa(const CoeffSet& c, double kappa)
{
    return sum_over_degrees(c, [kappa](double ns, double u1, double u2, double u3) {
        const double mixed = 2.0 * u1 - std::sqrt(ns) * u2;
        return (ns - 2.0 + kappa) * u1 * u1 + mixed * mixed + ns * u3 * u3;
    });
}

double norm_sq(const CoeffSet& c)
{
    return sum_over_degrees(c, [](double, double u1, double u2, double u3) { return u1 * u1 + u2 * u2 + u3 * u3; });
}

EnergyBreakdown energy_report(const CoeffSet& c, double kappa)
{
    EnergyBreakdown e;
    e.dirichlet = dirichlet_energy(c);
    e.anisotropy = anisotropy_energy(c);
    e.total = e.dirichlet + kappa * e.anisotropy;
    e.norm_sq = norm_sq(c);
    e.kappa = kappa;
    e.route = "spectral";
    return e;
}

EnergyCrossCheck energy_report(const SampledVectorField& u, double kappa, int band_limit, double tolerance)
{
    if (!u.grid) throw std::invalid_argument("energy_report: field without grid");
    if (!u.grid->resolves_vector(band_limit)) throw std::invalid_argument("energy_report: grid under-resolves band limit");

    EnergyCrossCheck out;
    out.tolerance = tolerance;
    out.spectral = energy_report(analyze(u, band_limit), kappa);

    EnergyBreakdown& q = out.quadrature;
    q.dirichlet = dirichlet_energy_scalar_route(u, band_limit + 1);
    q.anisotropy = normal_component_sq(u);
    q.total = q.dirichlet + kappa * q.anisotropy;
    q.norm_sq = inner_product(u, u);
    q.kappa = kappa;
    q.route = "quadrature";

    // Terms are compared relative to the field's squared norm at least, so a
    // vanishing anisotropy of a tangential field does not blow up the ratio.
    const double scale = q.norm_sq;
    out.max_rel_diff = std::max({relative_diff(out.spectral.dirichlet, q.dirichlet, scale),
                                 relative_diff(out.spectral.anisotropy, q.anisotropy, scale),
                                 relative_diff(out.spectral.total, q.total, scale),
                                 relative_diff(out.spectral.norm_sq, q.norm_sq, scale)});
    out.agree = out.max_rel_diff <= tolerance;
    return out;
}

std::string to_json(const EnergyBreakdown& e)
{
    nlohmann::ordered_json j;
    j["dirichlet"] = e.dirichlet;
    j["anisotropy"] = e.anisotropy;
    j["total"] = e.total;
    j["norm_sq"] = e.norm_sq;
    j["kappa"] = e.kappa;
    j["route"] = e.route;
    return j.dump();
}

CoeffSet random_normalized_coeffs(int band_limit, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    CoeffSet c(band_limit);
    for (const auto& m : c.modes()) c.set(m, gauss(rng));
    return rescale_to_sphere(std::move(c));
}

CoeffSet random_tangential_coeffs(int band_limit, std::mt19937_64& rng)
{
    if (band_limit < 1) throw std::invalid_argument("random_tangential_coeffs: band limit must be >= 1");
    std::normal_distribution<double> gauss(0.0, 1.0);
    CoeffSet c(band_limit);
    for (const auto& m : c.modes())
        if (m.family != 1) c.set(m, gauss(rng));
    return rescale_to_sphere(std::move(c));
}

}  // namespace sphere_poincare
