#include "sphere_poincare/flow.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "sphere_poincare/legendre.hpp"

namespace sphere_poincare {

SpectralLaplacian::SpectralLaplacian(GridPtr grid, int band_limit) : transform_(std::move(grid), band_limit) {}

SpectralLaplacian::Result SpectralLaplacian::apply(const SampledVectorField& u) const
{
    const GridPtr& g = grid();
    if (!u.grid || !u.grid->compatible(*g) || u.values.size() != g->size())
        throw std::invalid_argument("SpectralLaplacian: grid mismatch");

    Result r{SampledVectorField(g), 0.0};
    const int band = band_limit();
    const double closure = band * (band + 1.0);
    std::vector<double> samples(g->size());
    for (int k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = u.values[i][k];
        auto c = transform_.analyze(samples);
        const auto resolved = transform_.synthesize(c);
        for (int n = 0; n <= band; ++n) {
            const double nstar = n * (n + 1.0);
            for (int j = -n; j <= n; ++j) {
                double& v = c[sh_index(n, j)];
                r.dirichlet += nstar * v * v;
                v *= nstar;
            }
        }
        const auto lap = transform_.synthesize(c);
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const double rest = samples[i] - resolved[i];
            r.dirichlet += closure * g->weight(i) * rest * rest;
            r.neg_laplacian.values[i][k] = lap[i] + closure * rest;
        }
    }
    return r;
}

void require_unit_field(const SampledVectorField& u, double tol)
{
    for (const auto& v : u.values)
        if (!(std::abs(norm(v) - 1.0) <= tol)) throw std::invalid_argument("expected a pointwise unit field");
}

SampledVectorField normalize_field(const SampledVectorField& u)
{
    SampledVectorField out(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double len = norm(u.values[i]);
        if (!(len > 0.0)) throw std::domain_error("normalize_field: zero vector at a node");
        out.values[i] = (1.0 / len) * u.values[i];
    }
    return out;
}

SampledVectorField project_tangent(const SampledVectorField& u, const SampledVectorField& w)
{
    if (u.values.size() != w.values.size()) throw std::invalid_argument("project_tangent: size mismatch");
    SampledVectorField out(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        out.values[i] = w.values[i] - dot(w.values[i], u.values[i]) * u.values[i];
    return out;
}

double saturated_energy(const SampledVectorField& u, double kappa, int band_limit)
{
    const SpectralLaplacian lap(u.grid, band_limit);
    return lap.apply(u).dirichlet + kappa * normal_component_sq(u);
}

namespace {

// -Lap u + kappa (u . n) n, i.e. half the L2 gradient of the energy.
SampledVectorField effective_field(const SampledVectorField& u, const SampledVectorField& neg_lap, double kappa)
{
    SampledVectorField h(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const Vec3& n = u.grid->normal(i);
        h.values[i] = neg_lap.values[i] + (kappa * dot(u.values[i], n)) * n;
    }
    return h;
}

double max_cross_norm(const SampledVectorField& u, const SampledVectorField& h)
{
    double m = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) m = std::max(m, norm(cross(u.values[i], h.values[i])));
    return m;
}

}  // namespace

SampledVectorField el_residual(const SampledVectorField& u, double kappa, int band_limit)
{
    require_unit_field(u);
    const SpectralLaplacian lap(u.grid, band_limit);
    const auto h = effective_field(u, lap.apply(u).neg_laplacian, kappa);
    SampledVectorField r(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) r.values[i] = cross(u.values[i], h.values[i]);
    return r;
}

double max_node_norm(const SampledVectorField& u)
{
    double m = 0.0;
    for (const auto& v : u.values) m = std::max(m, norm(v));
    return m;
}

double second_variation_normal(const SampledVectorField& v, double kappa, int band_limit)
{
    if (!v.grid) throw std::invalid_argument("second_variation_normal: field without grid");
    for (std::size_t i = 0; i < v.values.size(); ++i)
        if (std::abs(dot(v.values[i], v.grid->normal(i))) > 1e-10)
            throw std::invalid_argument("second_variation_normal: variation must be tangential");
    return dirichlet_energy_scalar_route(v, band_limit) - (kappa + 2.0) * inner_product(v, v);
}

double distance_to_normal(const SampledVectorField& u, int sign)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const Vec3 d = u.values[i] - static_cast<double>(sign) * u.grid->normal(i);
        sum += u.grid->weight(i) * dot(d, d);
    }
    return std::sqrt(sum / kFourPi);
}

const char* verdict_name(FlowVerdict v)
{
    switch (v) {
        case FlowVerdict::Stationary: return "stationary";
        case FlowVerdict::Returned: return "returned";
        case FlowVerdict::Escaped: return "escaped";
        case FlowVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

FlowVerdict classify_trajectory(const std::vector<FlowSample>& trajectory)
{
    if (trajectory.empty()) return FlowVerdict::Inconclusive;
    auto dist = [](const FlowSample& s) { return std::min(s.dist_to_plus_n, s.dist_to_minus_n); };
    double worst = 0.0;
    for (const auto& s : trajectory) worst = std::max(worst, dist(s));
    if (worst <= 1e-9) return FlowVerdict::Stationary;
    const double last = dist(trajectory.back());
    if (last <= 1e-3) return FlowVerdict::Returned;
    if (last > 0.5) return FlowVerdict::Escaped;
    return FlowVerdict::Inconclusive;
}

FlowResult gradient_flow(const SampledVectorField& u0, double kappa, const FlowOptions& options)
{
    const int band = options.band_limit;
    if (band < 1) throw std::invalid_argument("gradient_flow: band limit must be >= 1");
    const double dt_max = 1.0 / (band * (band + 1.0));
    if (!(options.dt > 0.0) || !(options.dt < dt_max))
        throw std::invalid_argument("gradient_flow: dt must lie in (0, " + std::to_string(dt_max) +
                                    ") for band limit " + std::to_string(band));
    if (options.steps < 0 || options.record_every < 1) throw std::invalid_argument("gradient_flow: invalid step counts");
    require_unit_field(u0);

    const SpectralLaplacian lap(u0.grid, band);
    FlowResult result;
    SampledVectorField u = u0;
    double previous_energy = 0.0;

    for (int step = 0;; ++step) {
        const auto applied = lap.apply(u);
        const auto h = effective_field(u, applied.neg_laplacian, kappa);
        const double energy = applied.dirichlet + kappa * normal_component_sq(u);
        if (step > 0 && energy - previous_energy > options.energy_tolerance * std::max(1.0, std::abs(previous_energy)))
            throw FlowDivergence("gradient_flow: energy rose from " + std::to_string(previous_energy) + " to " +
                                 std::to_string(energy) + " at step " + std::to_string(step) +
                                 "; reduce dt");
        previous_energy = energy;

        if (step % options.record_every == 0 || step == options.steps) {
            result.trajectory.push_back({step, step * options.dt, energy, distance_to_normal(u, 1),
                                         distance_to_normal(u, -1), max_cross_norm(u, h)});
        }
        if (step == options.steps) {
            result.final_state = {u, kappa, band, step, energy};
            break;
        }

        for (std::size_t i = 0; i < u.values.size(); ++i) {
            const Vec3& ui = u.values[i];
            const Vec3 grad = 2.0 * h.values[i];
            const Vec3 moved = ui - options.dt * (grad - dot(grad, ui) * ui);
            u.values[i] = (1.0 / norm(moved)) * moved;
        }
    }
    result.verdict = classify_trajectory(result.trajectory);
    return result;
}

void write_trajectory_csv(std::ostream& os, const std::vector<FlowSample>& trajectory)
{
    os << "step,time,energy,dist_to_plus_n,dist_to_minus_n,residual_max\n" << std::setprecision(17);
    for (const auto& s : trajectory)
        os << s.step << ',' << s.time << ',' << s.energy << ',' << s.dist_to_plus_n << ',' << s.dist_to_minus_n << ','
           << s.residual_max << '\n';
}

}  // namespace sphere_poincare
