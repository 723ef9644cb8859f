#include "sphere_poincare/grid.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sphere_poincare/legendre.hpp"

namespace sphere_poincare {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x)
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

void check_same_grid(const GridPtr& a, const GridPtr& b, const char* where)
{
    if (!a || !b) throw std::invalid_argument(std::string(where) + ": field without grid");
    if (a != b && !a->compatible(*b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace

Vec3 sphere_point(double phi, double t)
{
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    return {s * std::cos(phi), s * std::sin(phi), t};
}

TangentFrame tangent_frame(double phi, double t)
{
    if (!(std::abs(t) < 1.0)) throw std::domain_error("tangent_frame: frame undefined at a pole");
    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    return {{-sn, c, 0.0}, {-t * c, -t * sn, s}, {s * c, s * sn, t}};
}

Grid::Grid(int n_t, int n_phi) : n_t_(n_t), n_phi_(n_phi)
{
    if (n_t < 1 || n_phi < 1) throw std::invalid_argument("build_grid: grid dimensions must be positive");
    gauss_legendre(n_t, t_nodes_, t_weights_);
    phi_nodes_.resize(n_phi);
    for (int k = 0; k < n_phi; ++k) phi_nodes_[k] = 2.0 * kPi * k / n_phi;

    const double w_phi = 2.0 * kPi / n_phi;
    weights_.reserve(static_cast<std::size_t>(n_t) * n_phi);
    frames_.reserve(static_cast<std::size_t>(n_t) * n_phi);
    for (int it = 0; it < n_t; ++it) {
        for (int ip = 0; ip < n_phi; ++ip) {
            weights_.push_back(t_weights_[it] * w_phi);
            frames_.push_back(tangent_frame(phi_nodes_[ip], t_nodes_[it]));
        }
    }
}

bool Grid::resolves_scalar(int band_limit) const { return n_t_ >= band_limit + 1 && n_phi_ >= 2 * band_limit + 1; }

bool Grid::resolves_vector(int band_limit) const { return resolves_scalar(band_limit + 1); }

GridPtr build_grid(int n_t, int n_phi) { return std::make_shared<const Grid>(n_t, n_phi); }

GridPtr default_grid(int band_limit) { return build_grid(2 * band_limit + 2, 4 * band_limit + 3); }

SampledVectorField normal_field(const GridPtr& grid)
{
    SampledVectorField u(grid);
    for (std::size_t i = 0; i < grid->size(); ++i) u.values[i] = grid->normal(i);
    return u;
}

SampledScalarField component(const SampledVectorField& u, int k)
{
    SampledScalarField f(u.grid);
    for (std::size_t i = 0; i < u.values.size(); ++i) f.values[i] = u.values[i][k];
    return f;
}

double integrate(const SampledScalarField& f)
{
    if (!f.grid || f.values.size() != f.grid->size()) throw std::invalid_argument("integrate: grid mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) sum += f.grid->weight(i) * f.values[i];
    return sum;
}

double inner_product(const SampledVectorField& u, const SampledVectorField& v)
{
    check_same_grid(u.grid, v.grid, "inner_product");
    if (u.values.size() != u.grid->size() || v.values.size() != u.values.size())
        throw std::invalid_argument("inner_product: sample count does not match grid");
    double sum = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) sum += u.grid->weight(i) * dot(u.values[i], v.values[i]);
    return sum;
}

double normal_component_sq(const SampledVectorField& u)
{
    if (!u.grid || u.values.size() != u.grid->size()) throw std::invalid_argument("normal_component_sq: grid mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double un = dot(u.values[i], u.grid->normal(i));
        sum += u.grid->weight(i) * un * un;
    }
    return sum;
}

ScalarTransform::ScalarTransform(GridPtr grid, int band_limit) : grid_(std::move(grid)), band_limit_(band_limit)
{
    if (band_limit < 0) throw std::invalid_argument("ScalarTransform: negative band limit");
    if (!grid_->resolves_scalar(band_limit))
        throw std::invalid_argument("ScalarTransform: grid (" + std::to_string(grid_->n_t()) + "," +
                                    std::to_string(grid_->n_phi()) + ") under-resolves band limit " +
                                    std::to_string(band_limit));
    const std::size_t nodes = grid_->size();
    table_.assign(static_cast<std::size_t>(sh_count(band_limit)) * nodes, 0.0);
    for (int n = 0; n <= band_limit; ++n) {
        for (int j = -n; j <= n; ++j) {
            double* row = table_.data() + static_cast<std::size_t>(sh_index(n, j)) * nodes;
            for (std::size_t i = 0; i < nodes; ++i) row[i] = scalar_sh(n, j, grid_->phi(i), grid_->t(i));
        }
    }
}

std::vector<double> ScalarTransform::analyze(const std::vector<double>& samples) const
{
    const std::size_t nodes = grid_->size();
    if (samples.size() != nodes) throw std::invalid_argument("ScalarTransform::analyze: grid mismatch");
    std::vector<double> weighted(nodes);
    for (std::size_t i = 0; i < nodes; ++i) weighted[i] = grid_->weight(i) * samples[i];

    std::vector<double> coeffs(sh_count(band_limit_), 0.0);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const double* row = table_.data() + m * nodes;
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) sum += row[i] * weighted[i];
        coeffs[m] = sum;
    }
    return coeffs;
}

std::vector<double> ScalarTransform::synthesize(const std::vector<double>& coeffs) const
{
    const std::size_t nodes = grid_->size();
    if (coeffs.size() != static_cast<std::size_t>(sh_count(band_limit_)))
        throw std::invalid_argument("ScalarTransform::synthesize: coefficient count mismatch");
    std::vector<double> out(nodes, 0.0);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0.0) continue;
        const double* row = table_.data() + m * nodes;
        for (std::size_t i = 0; i < nodes; ++i) out[i] += coeffs[m] * row[i];
    }
    return out;
}

std::vector<double> scalar_analyze(const SampledScalarField& f, int band_limit)
{
    if (!f.grid) throw std::invalid_argument("scalar_analyze: field without grid");
    return ScalarTransform(f.grid, band_limit).analyze(f.values);
}

double dirichlet_energy_scalar_route(const SampledVectorField& u, int band_limit)
{
    if (!u.grid) throw std::invalid_argument("dirichlet_energy_scalar_route: field without grid");
    const ScalarTransform transform(u.grid, band_limit);
    double energy = 0.0;
    for (int k = 0; k < 3; ++k) {
        const auto c = transform.analyze(component(u, k).values);
        for (int n = 1; n <= band_limit; ++n) {
            const double nstar = n * (n + 1.0);
            for (int j = -n; j <= n; ++j) energy += nstar * c[sh_index(n, j)] * c[sh_index(n, j)];
        }
    }
    return energy;
}

void write_vector_field_csv(std::ostream& os, const SampledVectorField& u)
{
    os << "phi,t,ux,uy,uz\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const auto& v = u.values[i];
        os << u.grid->phi(i) << ',' << u.grid->t(i) << ',' << v[0] << ',' << v[1] << ',' << v[2] << '\n';
    }
}

}  // namespace sphere_poincare
