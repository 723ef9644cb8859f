#include "sphere_poincare/sharp.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "sphere_poincare/spectral.hpp"

namespace sphere_poincare {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

void require_finite(double kappa, const char* where)
{
    if (!std::isfinite(kappa)) throw std::domain_error(std::string(where) + ": kappa must be finite");
}

double discriminant_root(double kappa) { return std::sqrt(kappa * kappa + 4.0 * kappa + 36.0); }

// |sigma|^2 of the kappa > -4 family.
double above_sigma_sq(double kappa)
{
    const double root = discriminant_root(kappa);
    return 2.0 * kPi * (-(kappa + 2.0) + root) / root;
}

double above_tau_ratio(double kappa) { return -2.0 * kSqrt2 / (gamma(kappa) - 2.0); }

Vec3 unit_direction(const Vec3& d)
{
    const double len = norm(d);
    if (!(len > 0.0) || !std::isfinite(len)) throw std::invalid_argument("build_minimizer: direction must be nonzero");
    return (1.0 / len) * d;
}

}  // namespace

double gamma_plus(double kappa)
{
    require_finite(kappa, "gamma_plus");
    const double root = discriminant_root(kappa);
    const double sum = kappa + 6.0;
    // Same value as (sum - root) / 2, written to avoid cancellation for large kappa.
    if (sum > 0.0) return 0.5 * (sum * sum - root * root) / (sum + root);
    return 0.5 * (sum - root);
}

double gamma(double kappa)
{
    require_finite(kappa, "gamma");
    return kappa <= -4.0 ? kappa + 2.0 : gamma_plus(kappa);
}

double shifted_constant(double kappa)
{
    require_finite(kappa, "shifted_constant");
    if (!(kappa < 0.0)) throw std::domain_error("shifted_constant: requires kappa < 0");
    return -kappa + gamma(kappa);
}

Regime classify(double kappa)
{
    require_finite(kappa, "classify");
    if (std::abs(kappa + 4.0) < kCriticalBand) return Regime::Critical;
    return kappa < -4.0 ? Regime::Below : Regime::Above;
}

const char* regime_name(Regime r)
{
    switch (r) {
        case Regime::Below: return "below";
        case Regime::Critical: return "critical";
        case Regime::Above: return "above";
    }
    return "unknown";
}

CoeffSet to_coeffs(const MinimizerSpec& spec)
{
    CoeffSet c(1);
    c.set(1, 0, 0, spec.c0);
    for (int j = -1; j <= 1; ++j) {
        c.set(1, 1, j, spec.sigma[j + 1]);
        c.set(2, 1, j, spec.tau[j + 1]);
    }
    return c;
}

Minimizer build_minimizer(double kappa, const MinimizerParams& params)
{
    MinimizerSpec spec;
    spec.kappa = kappa;
    spec.regime = classify(kappa);

    switch (spec.regime) {
        case Regime::Below: {
            if (params.sign != 1 && params.sign != -1) throw std::invalid_argument("build_minimizer: sign must be +1 or -1");
            spec.c0 = params.sign * std::sqrt(kFourPi);
            break;
        }
        case Regime::Above: {
            const Vec3 d = unit_direction(params.direction);
            const double magnitude = std::sqrt(above_sigma_sq(kappa));
            const double ratio = above_tau_ratio(kappa);
            for (int k = 0; k < 3; ++k) {
                spec.sigma[k] = magnitude * d[k];
                spec.tau[k] = ratio * spec.sigma[k];
            }
            break;
        }
        case Regime::Critical: {
            if (params.sign != 1 && params.sign != -1) throw std::invalid_argument("build_minimizer: sign must be +1 or -1");
            const double c0 = params.c0 ? *params.c0 : params.sign * std::sqrt(2.0 * kPi);
            const double rest = 8.0 * kPi - 2.0 * c0 * c0;
            if (!std::isfinite(c0) || rest < -1e-12 * 8.0 * kPi)
                throw std::invalid_argument("build_minimizer: critical c0 violates 2 c0^2 + 3 |sigma|^2 = 8 pi");
            spec.c0 = c0;
            const double magnitude = std::sqrt(std::max(rest, 0.0) / 3.0);
            if (magnitude > 0.0) {
                const Vec3 d = unit_direction(params.direction);
                for (int k = 0; k < 3; ++k) {
                    spec.sigma[k] = magnitude * d[k];
                    spec.tau[k] = 0.5 * kSqrt2 * spec.sigma[k];
                }
            }
            break;
        }
    }
    return {spec, to_coeffs(spec)};
}

double equality_residual(const CoeffSet& c, double kappa)
{
    const double ns = norm_sq(c);
    if (std::abs(ns - kFourPi) > 1e-9 * kFourPi)
        throw std::invalid_argument("equality_residual: coefficients must satisfy norm_sq = 4 pi");
    return g_kappa(c, kappa) - kFourPi * gamma(kappa);
}

bool membership_check(const CoeffSet& c, double kappa, double tol)
{
    for (const auto& m : c.modes()) {
        const bool in_support = (m.family == 1 && m.n <= 1) || (m.family == 2 && m.n == 1);
        if (!in_support && std::abs(c.get(m)) > tol) return false;
    }
    const double c0 = c(1, 0, 0);
    std::array<double, 3> sigma{};
    std::array<double, 3> tau{};
    for (int j = -1; j <= 1; ++j) {
        sigma[j + 1] = c(1, 1, j);
        tau[j + 1] = c(2, 1, j);
    }
    const double sigma_norm = std::sqrt(sigma[0] * sigma[0] + sigma[1] * sigma[1] + sigma[2] * sigma[2]);

    switch (classify(kappa)) {
        case Regime::Below:
            if (std::abs(std::abs(c0) - std::sqrt(kFourPi)) > tol) return false;
            for (int k = 0; k < 3; ++k)
                if (std::abs(sigma[k]) > tol || std::abs(tau[k]) > tol) return false;
            return true;
        case Regime::Above: {
            if (std::abs(c0) > tol) return false;
            const double ratio = above_tau_ratio(kappa);
            for (int k = 0; k < 3; ++k)
                if (std::abs(tau[k] - ratio * sigma[k]) > tol) return false;
            return std::abs(sigma_norm - std::sqrt(above_sigma_sq(kappa))) <= tol;
        }
        case Regime::Critical: {
            for (int k = 0; k < 3; ++k)
                if (std::abs(tau[k] - 0.5 * kSqrt2 * sigma[k]) > tol) return false;
            const double constraint = 2.0 * c0 * c0 + 3.0 * sigma_norm * sigma_norm;
            return std::abs(std::sqrt(constraint) - std::sqrt(8.0 * kPi)) <= tol;
        }
    }
    return false;
}

GammaRow gamma_row(double kappa)
{
    GammaRow row{kappa, gamma(kappa), gamma_plus(kappa), std::nullopt};
    if (kappa < 0.0) row.shifted = shifted_constant(kappa);
    return row;
}

std::vector<GammaRow> gamma_table(double a, double b, int steps)
{
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("gamma_table: range must be finite");
    if (steps < 1 || (steps == 1 && a != b) || b < a) throw std::invalid_argument("gamma_table: invalid range");
    std::vector<GammaRow> rows;
    rows.reserve(steps);
    for (int k = 0; k < steps; ++k) {
        const double kappa = (steps == 1) ? a : a + (b - a) * k / (steps - 1);
        rows.push_back(gamma_row(kappa));
    }
    return rows;
}

void write_gamma_table_csv(std::ostream& os, const std::vector<GammaRow>& rows)
{
    os << "kappa,gamma,gamma_plus,shifted\n" << std::setprecision(17);
    for (const auto& r : rows) {
        os << r.kappa << ',' << r.gamma << ',' << r.gamma_plus << ',';
        if (r.shifted) os << *r.shifted;
        os << '\n';
    }
}

}  // namespace sphere_poincare
