// sphere-poincare: sharp constants, verification suites, equality fields and
// gradient-flow probes for the anisotropic Dirichlet energy on S^2.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphere_poincare/eigensolver.hpp"
#include "sphere_poincare/flow.hpp"
#include "sphere_poincare/grid.hpp"
#include "sphere_poincare/sharp.hpp"
#include "sphere_poincare/spectral.hpp"
#include "sphere_poincare/verify.hpp"
#include "sphere_poincare/vsh.hpp"

namespace sp = sphere_poincare;

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

void emit_report(const sp::RunReport& report, bool json, const std::string& path)
{
    if (path.empty()) {
        json ? sp::write_json(std::cout, report) : sp::write_text(std::cout, report);
        return;
    }
    auto out = open_output(path);
    json ? sp::write_json(out, report) : sp::write_text(out, report);
    sp::write_text(std::cout, report);
}

struct GammaArgs {
    std::vector<double> kappa;
    std::vector<double> range;
    std::string out;
};

int run_gamma(const GammaArgs& a)
{
    std::vector<sp::GammaRow> rows;
    if (!a.range.empty()) {
        const double steps = a.range[2];
        if (steps != std::floor(steps)) throw std::invalid_argument("--range: steps must be an integer");
        rows = sp::gamma_table(a.range[0], a.range[1], static_cast<int>(steps));
    }
    for (double k : a.kappa) rows.push_back(sp::gamma_row(k));
    if (rows.empty()) throw std::invalid_argument("gamma: pass --kappa or --range");

    if (a.out.empty()) {
        sp::write_gamma_table_csv(std::cout, rows);
    } else {
        auto out = open_output(a.out);
        sp::write_gamma_table_csv(out, rows);
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 20240531;
    std::string out;
    bool json = false;
};

int run_verify(VerifyArgs a)
{
    if (const char* env = std::getenv("SPHERE_POINCARE_SEED")) a.seed = std::stoull(env);
    const auto report = sp::run_suite(a.suite, a.seed);
    emit_report(report, a.json, a.out);
    return report.passed() ? 0 : 1;
}

struct MinimizeArgs {
    double kappa = 0.0;
    std::string method = "closed";
    std::vector<double> direction{0.0, 1.0, 0.0};
    std::vector<int> grid{18, 35};
    int sign = 1;
    double c0 = std::nan("");
    std::string out = "minimizer";
    bool json = false;
};

int run_minimize(const MinimizeArgs& a)
{
    const auto start = std::chrono::steady_clock::now();
    sp::MinimizerParams params;
    params.sign = a.sign;
    params.direction = {a.direction[0], a.direction[1], a.direction[2]};
    if (!std::isnan(a.c0)) params.c0 = a.c0;

    const sp::Minimizer closed = sp::build_minimizer(a.kappa, params);
    const sp::CoeffSet numeric = sp::numeric_minimizer(a.kappa, 20);
    const sp::CoeffSet& chosen = (a.method == "numeric") ? numeric : closed.coeffs;

    const auto grid = sp::build_grid(a.grid[0], a.grid[1]);
    const auto field = sp::synthesize(chosen, grid);
    {
        auto out = open_output(a.out + "_coeffs.csv");
        sp::write_coeffs_csv(out, chosen);
    }
    {
        auto out = open_output(a.out + "_field.csv");
        sp::write_vector_field_csv(out, field);
    }

    sp::RunReport r;
    r.command = "minimize";
    r.parameters = {{"kappa", fmt(a.kappa)},
                    {"method", a.method},
                    {"regime", sp::regime_name(closed.spec.regime)},
                    {"c0", fmt(closed.spec.c0)},
                    {"grid", std::to_string(a.grid[0]) + "x" + std::to_string(a.grid[1])},
                    {"coeffs", a.out + "_coeffs.csv"},
                    {"field", a.out + "_field.csv"}};
    r.add("closed-form equality residual", std::abs(sp::equality_residual(closed.coeffs, a.kappa)), 1e-10);
    r.add("numeric equality residual", std::abs(sp::equality_residual(numeric, a.kappa)), 1e-10);
    r.add("closed-form in equality family (0 = yes)", sp::membership_check(closed.coeffs, a.kappa, 1e-8) ? 0.0 : 1.0,
          0.0);
    r.add("numeric in equality family (0 = yes)", sp::membership_check(numeric, a.kappa, 1e-8) ? 0.0 : 1.0, 0.0);
    r.add("written field norm_sq vs 4 pi (quadrature)", std::abs(sp::inner_product(field, field) - sp::kFourPi), 1e-9);
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    sp::write_text(std::cout, r);
    if (a.json) {
        auto out = open_output(a.out + "_report.json");
        sp::write_json(out, r);
    }
    return r.passed() ? 0 : 1;
}

struct FlowArgs {
    double kappa = -1.0;
    double perturb = 0.05;
    double dt = 5e-3;
    int steps = 10000;
    int band = 8;
    int record_every = 1;
    std::string out = "trajectory.csv";
    bool json = false;
};

int run_flow(const FlowArgs& a)
{
    const auto start = std::chrono::steady_clock::now();
    const auto grid = sp::default_grid(a.band);
    sp::CoeffSet c(1);
    c.set(1, 0, 0, std::sqrt(sp::kFourPi));
    c.set(2, 1, 0, a.perturb * std::sqrt(sp::kFourPi));
    const auto u0 = sp::normalize_field(sp::synthesize(c, grid));

    sp::FlowOptions options;
    options.dt = a.dt;
    options.steps = a.steps;
    options.band_limit = a.band;
    options.record_every = a.record_every;
    const auto result = sp::gradient_flow(u0, a.kappa, options);
    {
        auto out = open_output(a.out);
        sp::write_trajectory_csv(out, result.trajectory);
    }

    const auto& last = result.trajectory.back();
    sp::RunReport r;
    r.command = "flow";
    r.parameters = {{"kappa", fmt(a.kappa)},       {"perturb", fmt(a.perturb)},
                    {"dt", fmt(a.dt)},             {"steps", std::to_string(a.steps)},
                    {"band", std::to_string(a.band)}, {"trajectory", a.out},
                    {"verdict", sp::verdict_name(result.verdict)},
                    {"final_distance", fmt(std::min(last.dist_to_plus_n, last.dist_to_minus_n))},
                    {"final_energy", fmt(last.energy)}};
    double unit = 0.0;
    for (const auto& v : result.final_state.field.values) unit = std::max(unit, std::abs(sp::norm(v) - 1.0));
    r.add("final state pointwise unit", unit, 1e-12);
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "verdict: " << sp::verdict_name(result.verdict) << '\n';
    if (a.json) {
        sp::write_json(std::cout, r);
    } else {
        sp::write_text(std::cout, r);
    }
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sharp Poincare constants for vector fields on the unit sphere"};
    app.require_subcommand(1);

    GammaArgs gamma_args;
    auto* gamma_cmd = app.add_subcommand("gamma", "Tabulate gamma(kappa), gamma_plus and |kappa| + gamma(kappa)");
    auto* kappa_opt = gamma_cmd->add_option("--kappa", gamma_args.kappa, "Single kappa value (repeatable)");
    auto* range_opt = gamma_cmd->add_option("--range", gamma_args.range, "a b steps")->expected(3);
    kappa_opt->excludes(range_opt);
    gamma_cmd->add_option("--out", gamma_args.out, "Output CSV (default stdout)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant battery");
    verify_cmd->add_option("--suite", verify_args.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(sp::suite_names()));
    verify_cmd->add_option("--seed", verify_args.seed, "RNG seed (SPHERE_POINCARE_SEED overrides)");
    verify_cmd->add_option("--out", verify_args.out, "Write the report to this file");
    verify_cmd->add_flag("--json", verify_args.json, "JSON report");

    MinimizeArgs min_args;
    auto* min_cmd = app.add_subcommand("minimize", "Write an equality field for kappa");
    min_cmd->add_option("--kappa", min_args.kappa, "Anisotropy parameter")->required();
    min_cmd->add_option("--method", min_args.method, "closed or numeric")->check(CLI::IsMember({"closed", "numeric"}));
    min_cmd->add_option("--direction", min_args.direction, "sigma direction (j = -1, 0, 1)")->expected(3);
    min_cmd->add_option("--sign", min_args.sign, "Sign of c0 (kappa <= -4)")->check(CLI::IsMember({-1, 1}));
    min_cmd->add_option("--c0", min_args.c0, "c0 at kappa = -4, |c0| <= 2 sqrt(pi)");
    min_cmd->add_option("--grid", min_args.grid, "n_t n_phi")->expected(2);
    min_cmd->add_option("--out", min_args.out, "Output prefix");
    min_cmd->add_flag("--json", min_args.json, "Also write <prefix>_report.json");

    FlowArgs flow_args;
    auto* flow_cmd = app.add_subcommand("flow", "Projected gradient flow from a perturbed normal field");
    flow_cmd->add_option("--kappa", flow_args.kappa, "Anisotropy parameter")->required();
    flow_cmd->add_option("--perturb", flow_args.perturb, "Amplitude of the y(2;1,0) perturbation");
    flow_cmd->add_option("--dt", flow_args.dt, "Time step");
    flow_cmd->add_option("--steps", flow_args.steps, "Number of steps");
    flow_cmd->add_option("--band", flow_args.band, "Band limit of the spectral Laplacian");
    flow_cmd->add_option("--record-every", flow_args.record_every, "Trajectory sampling stride");
    flow_cmd->add_option("--out", flow_args.out, "Trajectory CSV");
    flow_cmd->add_flag("--json", flow_args.json, "JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gamma_cmd) return run_gamma(gamma_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*min_cmd) return run_minimize(min_args);
        if (*flow_cmd) return run_flow(flow_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
