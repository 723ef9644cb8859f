#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

#include "sphere_poincare/vec3.hpp"

namespace sphere_poincare {

/// Orthonormal moving frame at a chart point: (eps_phi, eps_t, normal) is right handed.
struct TangentFrame {
    Vec3 eps_phi;
    Vec3 eps_t;
    Vec3 normal;
};

/// Point of the unit sphere, sigma(phi, t) = (sqrt(1-t^2) cos phi, sqrt(1-t^2) sin phi, t).
Vec3 sphere_point(double phi, double t);

/// Requires |t| < 1.
TangentFrame tangent_frame(double phi, double t);

/// Gauss-Legendre nodes in t times uniform nodes in phi.
///
/// Nodes are stored row-major in (t-index, phi-index). The rule integrates
/// t^a * trig(b phi) exactly for a <= 2 n_t - 1 and |b| < n_phi. Gauss nodes
/// are interior to (-1, 1), so no node sits on a pole.
class Grid {
public:
    Grid(int n_t, int n_phi);

    int n_t() const { return n_t_; }
    int n_phi() const { return n_phi_; }
    std::size_t size() const { return weights_.size(); }

    const std::vector<double>& t_nodes() const { return t_nodes_; }
    const std::vector<double>& t_weights() const { return t_weights_; }
    const std::vector<double>& phi_nodes() const { return phi_nodes_; }

    double phi(std::size_t node) const { return phi_nodes_[node % n_phi_]; }
    double t(std::size_t node) const { return t_nodes_[node / n_phi_]; }
    double weight(std::size_t node) const { return weights_[node]; }
    const TangentFrame& frame(std::size_t node) const { return frames_[node]; }
    const Vec3& normal(std::size_t node) const { return frames_[node].normal; }

    /// Exact analysis of scalar fields band-limited to degree band_limit.
    bool resolves_scalar(int band_limit) const;
    /// Exact analysis of vector fields band-limited to degree band_limit
    /// (Cartesian components then reach degree band_limit + 1).
    bool resolves_vector(int band_limit) const;

    bool compatible(const Grid& other) const { return n_t_ == other.n_t_ && n_phi_ == other.n_phi_; }

private:
    int n_t_;
    int n_phi_;
    std::vector<double> t_nodes_;
    std::vector<double> t_weights_;
    std::vector<double> phi_nodes_;
    std::vector<double> weights_;
    std::vector<TangentFrame> frames_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr build_grid(int n_t, int n_phi);

/// Oversampled grid (2N+2, 4N+3) used for verification at band limit N.
GridPtr default_grid(int band_limit);

struct SampledScalarField {
    GridPtr grid;
    std::vector<double> values;

    SampledScalarField() = default;
    explicit SampledScalarField(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}
};

struct SampledVectorField {
    GridPtr grid;
    std::vector<Vec3> values;

    SampledVectorField() = default;
    explicit SampledVectorField(GridPtr g) : grid(std::move(g)), values(grid->size(), Vec3{0.0, 0.0, 0.0}) {}
};

/// Samples f(phi, t) on every node.
template <class F>
SampledScalarField sample_scalar(const GridPtr& grid, F&& f)
{
    SampledScalarField out(grid);
    for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->phi(i), grid->t(i));
    return out;
}

template <class F>
SampledVectorField sample_vector(const GridPtr& grid, F&& f)
{
    SampledVectorField out(grid);
    for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->phi(i), grid->t(i));
    return out;
}

/// The field n(xi) = xi.
SampledVectorField normal_field(const GridPtr& grid);

SampledScalarField component(const SampledVectorField& u, int k);

double integrate(const SampledScalarField& f);
double inner_product(const SampledVectorField& u, const SampledVectorField& v);

/// Quadrature of (u . n)^2.
double normal_component_sq(const SampledVectorField& u);

/// Cached table of Y_{n,j} on a grid for repeated analysis and synthesis.
class ScalarTransform {
public:
    ScalarTransform(GridPtr grid, int band_limit);

    int band_limit() const { return band_limit_; }
    const GridPtr& grid() const { return grid_; }

    /// c(n,j) = sum_i w_i f_i Y_{n,j}(x_i), indexed by sh_index.
    std::vector<double> analyze(const std::vector<double>& samples) const;
    std::vector<double> synthesize(const std::vector<double>& coeffs) const;

private:
    GridPtr grid_;
    int band_limit_;
    std::vector<double> table_;  // [mode][node]
};

/// c(n,j) = integral of f * Y_{n,j}. Throws when the grid does not resolve band_limit.
std::vector<double> scalar_analyze(const SampledScalarField& f, int band_limit);

/// Sum over Cartesian components k and (n,j) of n(n+1) c_k(n,j)^2. band_limit
/// refers to the Cartesian components.
double dirichlet_energy_scalar_route(const SampledVectorField& u, int band_limit);

/// CSV with header phi,t,ux,uy,uz; rows in node order.
void write_vector_field_csv(std::ostream& os, const SampledVectorField& u);

}  // namespace sphere_poincare
