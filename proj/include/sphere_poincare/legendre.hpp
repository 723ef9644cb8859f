#pragma once

// Associated Legendre functions and real scalar spherical harmonics.
//
// Conventions:
//   P_{n,j}(t) = 1/(2^n n!) (1-t^2)^{j/2} d^{n+j}/dt^{n+j} (t^2-1)^n   (no phase)
//   X_{n,j}(t) = (-1)^j sqrt((2n+1)/(4 pi) (n-j)!/(n+j)!) P_{n,j}(t)
//   Y_{n,j}    = sqrt(2) X_{n,|j|}(t) cos(j phi)   for j < 0
//              = X_{n,0}(t)                        for j = 0
//              = sqrt(2) X_{n,j}(t) sin(j phi)     for j > 0
// The cosine branch is attached to negative orders. Orthonormality on S^2
// does not depend on that choice.

namespace sphere_poincare {

/// Degree/order pair. |j| <= n always.
struct DegreeOrder {
    int n = 0;
    int j = 0;
};

/// Largest degree accepted by the Legendre layer.
inline constexpr int kMaxDegree = 64;

double assoc_legendre(int n, int j, double t);

/// dP_{n,j}/dt. Requires |t| < 1.
double assoc_legendre_dt(int n, int j, double t);

double normalized_legendre(int n, int j, double t);
double normalized_legendre_dt(int n, int j, double t);

double scalar_sh(int n, int j, double phi, double t);

/// Partial derivatives of Y_{n,j} with respect to phi and t.
struct ShPartials {
    double d_phi = 0.0;
    double d_t = 0.0;
};

ShPartials scalar_sh_grad_components(int n, int j, double phi, double t);

/// Dense index of (n, j) in a band-limited scalar table: n*n + n + j.
constexpr int sh_index(int n, int j) { return n * n + n + j; }
constexpr int sh_count(int band_limit) { return (band_limit + 1) * (band_limit + 1); }

}  // namespace sphere_poincare
