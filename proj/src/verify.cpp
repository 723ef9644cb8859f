#include "sphere_poincare/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "sphere_poincare/eigensolver.hpp"
#include "sphere_poincare/grid.hpp"
#include "sphere_poincare/legendre.hpp"
#include "sphere_poincare/sharp.hpp"
#include "sphere_poincare/spectral.hpp"
#include "sphere_poincare/vsh.hpp"

namespace sphere_poincare {

void RunReport::add(std::string name, double residual, double tolerance)
{
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    checks.push_back({std::move(name), residual, tolerance, ok});
}

bool RunReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double RunReport::max_residual() const
{
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

void write_text(std::ostream& os, const RunReport& report)
{
    os << "command: " << report.command << '\n';
    for (const auto& [k, v] : report.parameters) os << "  " << k << " = " << v << '\n';
    os << std::scientific << std::setprecision(3);
    for (const auto& c : report.checks)
        os << (c.passed ? "PASS " : "FAIL ") << c.name << "  residual=" << c.residual << "  tol=" << c.tolerance << '\n';
    os << std::defaultfloat << std::setprecision(6);
    os << (report.passed() ? "result: PASS" : "result: FAIL") << "  wall_time_s=" << report.wall_time_s << '\n';
}

void write_json(std::ostream& os, const RunReport& report)
{
    nlohmann::ordered_json j;
    j["command"] = report.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    j["parameters"] = params;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    j["checks"] = checks;
    j["passed"] = report.passed();
    j["max_residual"] = report.max_residual();
    j["wall_time_s"] = report.wall_time_s;
    os << j.dump(2) << '\n';
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"orthonormality", "energy-routes", "inequality", "equality", "lemma"};
    return names;
}

namespace {

void orthonormality_suite(RunReport& r, std::mt19937_64& rng)
{
    {
        const int band = 10;
        const auto grid = default_grid(band);
        const ScalarTransform st(grid, band);
        double worst = 0.0;
        for (int n = 0; n <= band; ++n)
            for (int j = -n; j <= n; ++j) {
                const auto f = sample_scalar(grid, [&](double phi, double t) { return scalar_sh(n, j, phi, t); });
                const auto c = st.analyze(f.values);
                for (std::size_t m = 0; m < c.size(); ++m) {
                    const double expected = (static_cast<int>(m) == sh_index(n, j)) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(c[m] - expected));
                }
            }
        r.add("scalar harmonics orthonormal, n <= 10", worst, 1e-10);
    }
    {
        const int band = 6;
        const VshTable table(default_grid(band), band);
        const auto& grid = *table.grid();
        double worst = 0.0;
        const auto& modes = table.modes();
        for (std::size_t a = 0; a < modes.size(); ++a)
            for (std::size_t b = a; b < modes.size(); ++b) {
                double sum = 0.0;
                const auto& sa = table.samples(a);
                const auto& sb = table.samples(b);
                for (std::size_t i = 0; i < sa.size(); ++i) sum += grid.weight(i) * dot(sa[i], sb[i]);
                worst = std::max(worst, std::abs(sum - (a == b ? 1.0 : 0.0)));
            }
        r.add("vector harmonics Gram matrix, n <= 6", worst, 1e-10);
    }
    {
        const int band = 4;
        const VshTable table(default_grid(band), band);
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto c = random_normalized_coeffs(band, rng);
            const auto back = table.analyze(table.synthesize(c));
            for (const auto& m : c.modes()) worst = std::max(worst, std::abs(back.get(m) - c.get(m)));
        }
        r.add("analyze(synthesize(c)) = c, 50 band-4 sets", worst, 1e-11);
    }
}

void energy_routes_suite(RunReport& r, std::mt19937_64& rng)
{
    const int band = 4;
    const auto grid = default_grid(band);
    const VshTable table(grid, band);
    {
        const auto n = normal_field(grid);
        r.add("int |grad n|^2 = 8 pi (quadrature)", std::abs(dirichlet_energy_scalar_route(n, band + 1) - 8.0 * kPi),
              1e-9);
        CoeffSet c(0);
        c.set(1, 0, 0, std::sqrt(kFourPi));
        double worst = 0.0;
        for (double kappa : {-8.0, -4.0, 0.0, 6.0})
            worst = std::max(worst, std::abs(g_kappa(c, kappa) - kFourPi * (kappa + 2.0)));
        r.add("F_kappa(n) = 4 pi (kappa + 2)", worst, 1e-10);
    }
    double identity = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = random_normalized_coeffs(band, rng);
        const double kappa = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
        const double lhs = g_kappa(c, kappa);
        const double rhs = dirichlet_energy(c) + kappa * anisotropy_energy(c);
        identity = std::max(identity, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    r.add("g_kappa = dirichlet + kappa anisotropy, 1000 sets", identity, 1e-12);

    double routes = 0.0;
    double parseval = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = random_normalized_coeffs(band, rng);
        const auto u = table.synthesize(c);
        const double quad_dirichlet = dirichlet_energy_scalar_route(u, band + 1);
        const double quad_aniso = normal_component_sq(u);
        const double spec_dirichlet = dirichlet_energy(c);
        const double spec_aniso = anisotropy_energy(c);
        parseval = std::max(parseval, std::abs(inner_product(u, u) - norm_sq(c)));
        for (double kappa : {-8.0, -4.0, 0.0, 6.0}) {
            const double qt = quad_dirichlet + kappa * quad_aniso;
            const double st = spec_dirichlet + kappa * spec_aniso;
            routes = std::max(routes, std::abs(qt - st) / std::max(std::abs(st), norm_sq(c)));
        }
        routes = std::max(routes, std::abs(quad_dirichlet - spec_dirichlet) / spec_dirichlet);
        routes = std::max(routes, std::abs(quad_aniso - spec_aniso) / std::max(spec_aniso, norm_sq(c)));
    }
    r.add("spectral vs quadrature energies, 100 band-4 fields", routes, 1e-8);
    r.add("Parseval norm_sq vs quadrature", parseval, 1e-10);
}

void inequality_suite(RunReport& r, std::mt19937_64& rng)
{
    const int band = 6;
    double violation = 0.0;
    double shifted_violation = 0.0;
    std::uniform_real_distribution<double> kappa_dist(-10.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = random_normalized_coeffs(band, rng);
        const double kappa = kappa_dist(rng);
        violation = std::max(violation, kFourPi * gamma(kappa) - g_kappa(c, kappa));
        if (kappa < 0.0) {
            const double ns = norm_sq(c);
            const double lhs = dirichlet_energy(c) + std::abs(kappa) * (ns - anisotropy_energy(c));
            shifted_violation = std::max(shifted_violation, shifted_constant(kappa) * ns - lhs);
        }
    }
    r.add("g_kappa >= 4 pi gamma(kappa), 1000 band-6 sets", std::max(violation, 0.0), 1e-9);
    r.add("shifted form for kappa < 0", std::max(shifted_violation, 0.0), 1e-9);
}

void equality_suite(RunReport& r)
{
    double residual = 0.0;
    double norm_err = 0.0;
    double membership = 0.0;
    for (double kappa : {-8.0, -4.5, -4.0, -3.9, 0.0, 6.0, 100.0}) {
        const auto m = build_minimizer(kappa);
        residual = std::max(residual, std::abs(equality_residual(m.coeffs, kappa)));
        norm_err = std::max(norm_err, std::abs(norm_sq(m.coeffs) - kFourPi));
        if (!membership_check(numeric_minimizer(kappa), kappa, 1e-8)) membership = 1.0;
        if (!membership_check(m.coeffs, kappa, 1e-8)) membership = 1.0;
    }
    r.add("closed-form minimizers attain 4 pi gamma(kappa)", residual, 1e-10);
    r.add("closed-form minimizers have norm_sq = 4 pi", norm_err, 1e-10);
    r.add("numeric minimizers in the equality family (0 = all)", membership, 0.0);
}

void lemma_suite(RunReport& r)
{
    double u3 = 0.0;
    double high = 0.0;
    double sign = 0.0;
    double degree = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        const double kappa = -50.0 + 0.1 * k;
        const auto c = numeric_minimizer(kappa, 20);
        for (const auto& m : c.modes()) {
            if (m.family == 3) u3 = std::max(u3, std::abs(c.get(m)));
            if (m.n >= 2) high = std::max(high, std::abs(c.get(m)));
        }
        for (int j = -1; j <= 1 && c.band_limit() >= 1; ++j)
            if (c(1, 1, j) * c(2, 1, j) < 0.0) sign = std::max(sign, std::abs(c(1, 1, j) * c(2, 1, j)));
        const auto g = gamma_numeric(kappa, 30);
        if (g.max_argmin_degree() > 1 || !g.toroidal_degrees.empty()) degree = 1.0;
    }
    r.add("numeric minimizers: u3 channel vanishes", u3, 1e-12);
    r.add("numeric minimizers: no support for n >= 2", high, 1e-12);
    r.add("numeric minimizers: sign(u1) = sign(u2) at n = 1", sign, 1e-12);
    r.add("argmin degree <= 1 and u3 never minimal (0 = all)", degree, 0.0);
}

}  // namespace

RunReport run_suite(const std::string& suite, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.command = "verify --suite " + suite;
    r.parameters.emplace_back("suite", suite);
    r.parameters.emplace_back("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);

    if (suite == "orthonormality")
        orthonormality_suite(r, rng);
    else if (suite == "energy-routes")
        energy_routes_suite(r, rng);
    else if (suite == "inequality")
        inequality_suite(r, rng);
    else if (suite == "equality")
        equality_suite(r);
    else if (suite == "lemma")
        lemma_suite(r);
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");

    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace sphere_poincare
