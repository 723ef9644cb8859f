#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sphere_poincare/vec3.hpp"
#include "sphere_poincare/vsh.hpp"

namespace sphere_poincare {

/// gamma(kappa) = kappa + 2 for kappa <= -4, gamma_plus(kappa) otherwise.
double gamma(double kappa);

/// (kappa + 6 - sqrt(kappa^2 + 4 kappa + 36)) / 2, defined for every kappa.
double gamma_plus(double kappa);

/// |kappa| + gamma(kappa) for kappa < 0; lies in [0, |kappa|].
double shifted_constant(double kappa);

enum class Regime { Below, Critical, Above };

/// |kappa + 4| < kCriticalBand is treated as the critical value.
inline constexpr double kCriticalBand = 1e-12;

Regime classify(double kappa);
const char* regime_name(Regime r);

/// Coefficients of an equality field:
///   c0 y(1;0,0) + sum_j sigma_j y(1;1,j) + tau_j y(2;1,j),  j = -1, 0, 1.
/// sigma and tau are stored in the order (j = -1, j = 0, j = 1).
struct MinimizerSpec {
    double kappa = 0.0;
    Regime regime = Regime::Above;
    double c0 = 0.0;
    std::array<double, 3> sigma{};
    std::array<double, 3> tau{};
};

/// Free parameters of the equality family.
///
/// Below:    sign selects c0 = +-sqrt(4 pi).
/// Above:    direction fixes sigma up to its forced magnitude.
/// Critical: c0 (|c0| <= 2 sqrt(pi)) and direction; |sigma| follows from
///           2 c0^2 + 3 |sigma|^2 = 8 pi. Without c0 the even split
///           c0 = sign * sqrt(2 pi) is used.
struct MinimizerParams {
    int sign = 1;
    Vec3 direction{0.0, 1.0, 0.0};
    std::optional<double> c0;
};

struct Minimizer {
    MinimizerSpec spec;
    CoeffSet coeffs;
};

Minimizer build_minimizer(double kappa, const MinimizerParams& params = {});

CoeffSet to_coeffs(const MinimizerSpec& spec);

/// g_kappa(c) - 4 pi gamma(kappa). Requires norm_sq(c) = 4 pi.
double equality_residual(const CoeffSet& c, double kappa);

/// True iff c lies in the equality family for kappa, up to tol on each coefficient relation.
bool membership_check(const CoeffSet& c, double kappa, double tol);

struct GammaRow {
    double kappa;
    double gamma;
    double gamma_plus;
    std::optional<double> shifted;
};

GammaRow gamma_row(double kappa);

/// `steps` evenly spaced values from a to b inclusive.
std::vector<GammaRow> gamma_table(double a, double b, int steps);

/// CSV with header kappa,gamma,gamma_plus,shifted; shifted is empty for kappa >= 0.
void write_gamma_table_csv(std::ostream& os, const std::vector<GammaRow>& rows);

}  // namespace sphere_poincare
