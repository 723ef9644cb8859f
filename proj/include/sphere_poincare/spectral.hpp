#pragma once

#include <random>
#include <string>

#include "sphere_poincare/grid.hpp"
#include "sphere_poincare/vsh.hpp"

namespace sphere_poincare {

/// Energy terms of F_kappa(u) = int |grad u|^2 + kappa int (u . n)^2.
struct EnergyBreakdown {
    double dirichlet = 0.0;
    double anisotropy = 0.0;
    double total = 0.0;  // dirichlet + kappa * anisotropy
    double norm_sq = 0.0;
    double kappa = 0.0;
    std::string route = "spectral";
};

/// sum (n*+2) u1^2 - 4 sqrt(n*) u1 u2 + n* u2^2 + n* u3^2
double dirichlet_energy(const CoeffSet& c);

/// sum u1^2
double anisotropy_energy(const CoeffSet& c);

/// sum (n* - 2 + kappa) u1^2 + (2 u1 - sqrt(n*) u2)^2 + n* u3^2
double g_kappa(const CoeffSet& c, double kappa);

double norm_sq(const CoeffSet& c);

EnergyBreakdown energy_report(const CoeffSet& c, double kappa);

/// Spectral and quadrature routes for a sampled field.
struct EnergyCrossCheck {
    EnergyBreakdown spectral;
    EnergyBreakdown quadrature;
    double max_rel_diff = 0.0;
    double tolerance = 1e-8;
    bool agree = true;
};

/// The spectral route analyzes u up to band_limit; the quadrature route uses
/// the scalar Dirichlet oracle at band_limit + 1 and direct quadrature for the
/// anisotropy and the norm. Disagreement is reported, not thrown.
EnergyCrossCheck energy_report(const SampledVectorField& u, double kappa, int band_limit, double tolerance = 1e-8);

std::string to_json(const EnergyBreakdown& e);

/// Independent standard normal entries on every valid mode, rescaled so that norm_sq = 4 pi.
CoeffSet random_normalized_coeffs(int band_limit, std::mt19937_64& rng);

/// As random_normalized_coeffs with the radial family set to zero.
CoeffSet random_tangential_coeffs(int band_limit, std::mt19937_64& rng);

}  // namespace sphere_poincare
