#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphere_poincare/grid.hpp"

namespace sphere_poincare {

/// -Laplace-Beltrami of each Cartesian component on a grid.
///
/// Components are split into their band-N projection P u (exact on the grid)
/// and the unresolved remainder u - P u. The projection is multiplied by
/// n(n+1) per degree; the remainder is charged the top eigenvalue N(N+1) so
/// that node-scale patterns invisible to the band-N analysis are not free.
/// On band-limited fields the remainder vanishes and the operator is exact.
class SpectralLaplacian {
public:
    SpectralLaplacian(GridPtr grid, int band_limit);

    int band_limit() const { return transform_.band_limit(); }
    const GridPtr& grid() const { return transform_.grid(); }

    struct Result {
        SampledVectorField neg_laplacian;
        double dirichlet = 0.0;  // (-Lap u, u) from the same coefficients
    };

    Result apply(const SampledVectorField& u) const;

private:
    ScalarTransform transform_;
};

/// Throws std::invalid_argument when some node deviates from unit length by more than tol.
void require_unit_field(const SampledVectorField& u, double tol = 1e-10);

SampledVectorField normalize_field(const SampledVectorField& u);

/// w - (w . u) u at every node.
SampledVectorField project_tangent(const SampledVectorField& u, const SampledVectorField& w);

/// int |grad u|^2 + kappa int (u . n)^2 with the Dirichlet term from SpectralLaplacian.
double saturated_energy(const SampledVectorField& u, double kappa, int band_limit);

/// u x (-Lap u + kappa (u . n) n) at every node. Requires a unit field.
SampledVectorField el_residual(const SampledVectorField& u, double kappa, int band_limit);

double max_node_norm(const SampledVectorField& u);

/// int |grad v|^2 - (kappa + 2) |v|^2 for tangential v (|v . n| <= 1e-10 pointwise).
double second_variation_normal(const SampledVectorField& v, double kappa, int band_limit);

/// L2 distance to sign * n divided by sqrt(4 pi).
double distance_to_normal(const SampledVectorField& u, int sign);

struct FlowOptions {
    double dt = 5e-3;
    int steps = 10000;
    int band_limit = 8;
    int record_every = 1;
    /// Allowed energy increase per step, relative to max(1, |energy|).
    double energy_tolerance = 1e-10;
};

struct FlowState {
    SampledVectorField field;
    double kappa = 0.0;
    int band_limit = 0;
    int step = 0;
    double energy = 0.0;
};

struct FlowSample {
    int step = 0;
    double time = 0.0;
    double energy = 0.0;
    double dist_to_plus_n = 0.0;
    double dist_to_minus_n = 0.0;
    double residual_max = 0.0;
};

enum class FlowVerdict { Stationary, Returned, Escaped, Inconclusive };

const char* verdict_name(FlowVerdict v);

struct FlowResult {
    std::vector<FlowSample> trajectory;
    FlowState final_state;
    FlowVerdict verdict = FlowVerdict::Inconclusive;
};

/// Raised when an explicit step increases the energy beyond tolerance.
class FlowDivergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit projected gradient flow on the pointwise unit-sphere constraint:
///   u <- normalize(u - dt * P_u(2 (-Lap u) + 2 kappa (u . n) n)).
/// Requires 0 < dt < 1 / (N (N + 1)).
FlowResult gradient_flow(const SampledVectorField& u0, double kappa, const FlowOptions& options = {});

/// Stationary when the distance to +-n never exceeds 1e-9, returned when it
/// ends at or below 1e-3, escaped when it ends above 0.5.
FlowVerdict classify_trajectory(const std::vector<FlowSample>& trajectory);

/// CSV with header step,time,energy,dist_to_plus_n,dist_to_minus_n,residual_max.
void write_trajectory_csv(std::ostream& os, const std::vector<FlowSample>& trajectory);

}  // namespace sphere_poincare
