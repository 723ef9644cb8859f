#include "sphere_poincare/legendre.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sphere_poincare/vec3.hpp"

namespace sphere_poincare {

namespace {

void check_degree_order(int n, int j)
{
    if (n < 0 || n > kMaxDegree)
        throw std::domain_error("legendre: degree " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxDegree) + "]");
    if (j < 0 || j > n)
        throw std::domain_error("legendre: order " + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
}

void check_argument(double t)
{
    if (!(std::abs(t) <= 1.0)) throw std::domain_error("legendre: argument outside [-1, 1]");
}

void check_interior(double t)
{
    if (!(std::abs(t) < 1.0)) throw std::domain_error("legendre: derivative requested at a pole");
}

// Recurrence in degree at fixed order, seeded from P_{j,j} = (2j-1)!! (1-t^2)^{j/2}.
// Returns P_{n,j} and stores P_{n-1,j} in prev (zero when n == j).
double legendre_recurrence(int n, int j, double t, double& prev)
{
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    double diag = 1.0;
    for (int k = 1; k <= j; ++k) diag *= (2.0 * k - 1.0) * s;

    prev = 0.0;
    if (n == j) return diag;

    double p_lo = diag;
    double p_hi = t * (2.0 * j + 1.0) * diag;
    for (int m = j + 2; m <= n; ++m) {
        const double next = (t * (2.0 * m - 1.0) * p_hi - (m + j - 1.0) * p_lo) / (m - j);
        p_lo = p_hi;
        p_hi = next;
    }
    prev = p_lo;
    return p_hi;
}

// (-1)^j sqrt((2n+1)/(4 pi) * (n-j)!/(n+j)!), ratio accumulated incrementally.
double normalization(int n, int j)
{
    double ratio = 1.0;
    for (int k = n - j + 1; k <= n + j; ++k) ratio /= k;
    const double c = std::sqrt((2.0 * n + 1.0) / kFourPi * ratio);
    return (j % 2 == 0) ? c : -c;
}

}  // namespace

double assoc_legendre(int n, int j, double t)
{
    check_degree_order(n, j);
    check_argument(t);
    double prev = 0.0;
    return legendre_recurrence(n, j, t, prev);
}

double assoc_legendre_dt(int n, int j, double t)
{
    check_degree_order(n, j);
    check_interior(t);
    double prev = 0.0;
    const double p = legendre_recurrence(n, j, t, prev);
    // (1 - t^2) P'_{n,j} = (n + j) P_{n-1,j} - n t P_{n,j}
    return ((n + j) * prev - n * t * p) / ((1.0 - t) * (1.0 + t));
}

double normalized_legendre(int n, int j, double t) { return normalization(n, j) * assoc_legendre(n, j, t); }

double normalized_legendre_dt(int n, int j, double t) { return normalization(n, j) * assoc_legendre_dt(n, j, t); }

double scalar_sh(int n, int j, double phi, double t)
{
    if (std::abs(j) > n) throw std::domain_error("scalar_sh: |j| > n");
    const int m = std::abs(j);
    const double x = normalized_legendre(n, m, t);
    if (j == 0) return x;
    if (j < 0) return std::sqrt(2.0) * x * std::cos(j * phi);
    return std::sqrt(2.0) * x * std::sin(j * phi);
}

ShPartials scalar_sh_grad_components(int n, int j, double phi, double t)
{
    if (std::abs(j) > n) throw std::domain_error("scalar_sh_grad_components: |j| > n");
    check_interior(t);
    const int m = std::abs(j);
    const double x = normalized_legendre(n, m, t);
    const double dx = normalized_legendre_dt(n, m, t);
    if (j == 0) return {0.0, dx};
    const double r2 = std::sqrt(2.0);
    const double c = std::cos(j * phi);
    const double s = std::sin(j * phi);
    if (j < 0) return {-r2 * x * j * s, r2 * dx * c};
    return {r2 * x * j * c, r2 * dx * s};
}

}  // namespace sphere_poincare
