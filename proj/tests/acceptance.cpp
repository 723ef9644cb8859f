// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sphere_poincare/eigensolver.hpp"
#include "sphere_poincare/flow.hpp"
#include "sphere_poincare/grid.hpp"
#include "sphere_poincare/sharp.hpp"
#include "sphere_poincare/spectral.hpp"
#include "sphere_poincare/vsh.hpp"

using namespace sphere_poincare;

namespace {

const double kRoot4Pi = std::sqrt(kFourPi);

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome sharp_constant()
{
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double kappa = -20.0 + 40.0 * i / 199.0;
        worst = std::max(worst, std::abs(gamma_numeric(kappa, 20).value - sphere_poincare::gamma(kappa)));
    }
    const double at_critical = std::abs(gamma_numeric(-4.0, 20).value + 2.0);
    worst = std::max(worst, std::abs(sphere_poincare::gamma(-4.0) + 2.0));
    o.require(worst <= 1e-12, "max |numeric - closed| = " + sci(worst));
    o.require(at_critical <= 1e-12, "sphere_poincare::gamma(-4) off by " + sci(at_critical));
    o.detail = o.ok ? "max deviation " + sci(std::max(worst, at_critical)) : o.detail;
    return o;
}

Outcome poincare_fuzz()
{
    Outcome o;
    std::mt19937_64 rng(1);
    std::vector<CoeffSet> sets;
    sets.reserve(1000);
    for (int k = 0; k < 1000; ++k) sets.push_back(random_normalized_coeffs(6, rng));
    double worst = -1e300;
    for (int i = 0; i < 20; ++i) {
        const double kappa = -20.0 + 40.0 * i / 19.0;
        const double bound = kFourPi * sphere_poincare::gamma(kappa);
        for (const auto& c : sets) worst = std::max(worst, bound - g_kappa(c, kappa));
    }
    o.require(worst <= 1e-9, "worst violation " + sci(worst));
    if (o.ok) o.detail = "max (4 pi gamma - g) = " + sci(worst);
    return o;
}

Outcome equality_family()
{
    Outcome o;
    double worst_res = 0.0, worst_norm = 0.0;
    for (double kappa : {-8.0, -4.5, -4.0, -3.9, 0.0, 6.0, 100.0}) {
        const auto m = build_minimizer(kappa);
        worst_res = std::max(worst_res, std::abs(equality_residual(m.coeffs, kappa)));
        worst_norm = std::max(worst_norm, std::abs(norm_sq(m.coeffs) - kFourPi));
        const auto numeric = numeric_minimizer(kappa, 20);
        o.require(membership_check(numeric, kappa, 1e-8), "numeric minimizer outside family at kappa " + sci(kappa));
        o.require(membership_check(m.coeffs, kappa, 1e-8), "closed minimizer outside family at kappa " + sci(kappa));
    }
    o.require(worst_res <= 1e-10, "residual " + sci(worst_res));
    o.require(worst_norm <= 1e-10, "norm deviation " + sci(worst_norm));
    if (o.ok) o.detail = "max residual " + sci(worst_res) + ", max norm deviation " + sci(worst_norm);
    return o;
}

Outcome sequence_space()
{
    Outcome o;
    const int band = 4;
    const auto g = default_grid(band);
    const VshTable table(g, band);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> kd(-10.0, 10.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto c = random_normalized_coeffs(band, rng);
        const auto check = energy_report(table.synthesize(c), kd(rng), band);
        worst = std::max(worst, check.max_rel_diff);
    }
    o.require(worst <= 1e-8, "max relative route difference " + sci(worst));

    const auto n = normal_field(g);
    double anchor = 0.0;
    for (double kappa : {-8.0, -4.0, 0.0, 6.0}) {
        const auto r = energy_report(n, kappa, band);
        const double want = kFourPi * (kappa + 2.0);
        anchor = std::max({anchor, std::abs(r.spectral.dirichlet - 8.0 * kPi), std::abs(r.quadrature.dirichlet - 8.0 * kPi),
                           std::abs(r.spectral.total - want), std::abs(r.quadrature.total - want)});
    }
    o.require(anchor <= 1e-10 * 8.0 * kPi, "anchor deviation " + sci(anchor));
    if (o.ok) o.detail = "max route difference " + sci(worst) + ", anchor deviation " + sci(anchor);
    return o;
}

Outcome tangential_constant()
{
    Outcome o;
    std::mt19937_64 rng(5);
    double worst = -1e300;
    for (int k = 0; k < 500; ++k) {
        const auto c = random_tangential_coeffs(6, rng);
        worst = std::max(worst, 2.0 * norm_sq(c) - dirichlet_energy(c));
    }
    CoeffSet e(1);
    e.set(2, 1, 0, kRoot4Pi);
    const double gap = std::abs(dirichlet_energy(e) - 2.0 * norm_sq(e));
    o.require(worst <= 1e-9, "worst violation " + sci(worst));
    o.require(gap <= 1e-10, "equality gap " + sci(gap));
    if (o.ok) o.detail = "max (2|u|^2 - D) = " + sci(worst) + ", equality gap " + sci(gap);
    return o;
}

Outcome orthonormality()
{
    Outcome o;
    const int band = 6;
    const auto g = default_grid(band);
    const VshTable table(g, band);
    const auto& modes = table.modes();
    double gram = 0.0;
    for (std::size_t a = 0; a < modes.size(); ++a) {
        for (std::size_t b = a; b < modes.size(); ++b) {
            const auto& sa = table.samples(a);
            const auto& sb = table.samples(b);
            double ip = 0.0;
            for (int i = 0; i < g->size(); ++i) ip += g->weight(i) * dot(sa[i], sb[i]);
            gram = std::max(gram, std::abs(ip - (a == b ? 1.0 : 0.0)));
        }
    }
    o.require(gram <= 1e-10, "Gram deviation " + sci(gram));

    const VshTable t4(default_grid(4), 4);
    std::mt19937_64 rng(6);
    double trip = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto c = random_normalized_coeffs(4, rng);
        const auto back = t4.analyze(t4.synthesize(c));
        for (const auto& m : c.modes()) trip = std::max(trip, std::abs(back.get(m) - c.get(m)));
    }
    o.require(trip <= 1e-11, "round trip " + sci(trip));
    if (o.ok) o.detail = "Gram deviation " + sci(gram) + ", round trip " + sci(trip);
    return o;
}

Outcome lemma_structure()
{
    Outcome o;
    double u3 = 0.0, high = 0.0, sign = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double kappa = -50.0 + 0.5 * i;
        NumericMinimizerOptions opts;
        opts.randomize = true;
        opts.seed = static_cast<std::uint64_t>(i);
        const auto c = numeric_minimizer(kappa, 20, opts);
        for (const auto& m : c.modes()) {
            const double v = std::abs(c.get(m));
            if (m.family == 3) u3 = std::max(u3, v);
            if (m.n >= 2) high = std::max(high, v);
        }
        for (int j = -1; c.band_limit() >= 1 && j <= 1; ++j) {
            // Opposite signs would make the product negative.
            sign = std::max(sign, -c.get({1, 1, j}) * c.get({2, 1, j}));
        }
    }
    o.require(u3 <= 1e-12, "u3 channel " + sci(u3));
    o.require(high <= 1e-12, "support above degree 1 " + sci(high));
    o.require(sign <= 1e-12, "sign disagreement " + sci(sign));
    if (o.ok) o.detail = "u3 " + sci(u3) + ", n>=2 " + sci(high) + ", sign " + sci(sign);
    return o;
}

Outcome stability_probes()
{
    Outcome o;
    const auto g = build_grid(8, 17);
    double el = 0.0;
    for (double kappa : {-8.0, -1.0, 0.0, 1.0, 6.0}) {
        for (int s : {1, -1}) {
            auto n = normal_field(g);
            for (auto& v : n.values) v = static_cast<double>(s) * v;
            el = std::max(el, max_node_norm(el_residual(n, kappa, 3)));
        }
    }
    o.require(el <= 1e-8, "el residual " + sci(el));

    const auto g4 = default_grid(4);
    CoeffSet e(1);
    e.set(2, 1, 0, kRoot4Pi);
    const auto v = synthesize(e, g4);
    double sv = 0.0;
    for (double kappa : {-5.0, -1.0, 0.0, 1.0, 5.0})
        sv = std::max(sv, std::abs(second_variation_normal(v, kappa, 4) + kFourPi * kappa));
    o.require(sv <= 1e-8, "second variation " + sci(sv));

    const int band = 8;
    const auto gf = default_grid(band);
    CoeffSet c(1);
    c.set(1, 0, 0, kRoot4Pi);
    c.set(2, 1, 0, 0.05 * kRoot4Pi);
    const auto u0 = normalize_field(synthesize(c, gf));
    FlowOptions opts;
    opts.band_limit = band;
    opts.record_every = 100;
    const auto back = gradient_flow(u0, -1.0, opts).trajectory.back();
    const auto away = gradient_flow(u0, 1.0, opts).trajectory.back();
    const double d_back = std::min(back.dist_to_plus_n, back.dist_to_minus_n);
    const double d_away = std::min(away.dist_to_plus_n, away.dist_to_minus_n);
    o.require(d_back <= 1e-3, "kappa=-1 final distance " + sci(d_back));
    o.require(d_away > 0.5, "kappa=+1 final distance " + sci(d_away));
    if (o.ok)
        o.detail = "el " + sci(el) + ", second variation " + sci(sv) + ", flow distances " + sci(d_back) + " / " +
                   sci(d_away);
    return o;
}

Outcome gamma_table_shape()
{
    Outcome o;
    const int steps = 2001;
    const auto rows = gamma_table(-10.0, 10.0, steps);
    const double h = 20.0 / (steps - 1);
    double jump = 0.0, below = 0.0, shift = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        if (k > 0) jump = std::max(jump, std::abs(r.gamma - rows[k - 1].gamma));
        if (r.kappa <= -4.0) below = std::max(below, std::abs(r.gamma - (r.kappa + 2.0)));
        if (r.kappa < 0.0) {
            const double s = std::abs(r.kappa) + r.gamma;
            shift = std::max({shift, -s, s - std::abs(r.kappa)});
        }
    }
    o.require(jump < 2.0 * h, "max jump " + sci(jump));
    o.require(below <= 1e-12, "deviation from kappa+2 " + sci(below));
    o.require(shift <= 1e-12, "shifted bound violation " + sci(shift));
    if (o.ok) o.detail = "max jump " + sci(jump) + " (step " + sci(h) + ")";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "sharp constant reproduction", 1.0, sharp_constant},
        {2, "inequality fuzzing", 5.0, poincare_fuzz},
        {3, "equality family", 1.0, equality_family},
        {4, "sequence-space energies", 10.0, sequence_space},
        {5, "tangential constant", 2.0, tangential_constant},
        {6, "orthonormality and transforms", 10.0, orthonormality},
        {7, "minimizer structure", 1.0, lemma_structure},
        {8, "stability probes", 60.0, stability_probes},
        {9, "gamma table", 1.0, gamma_table_shape},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(t < c.budget_s, "over time budget");
        if (!out.ok) ++failures;
        std::printf("%s criterion %d: %s  [%s]  %.3fs (budget %.0fs)\n", out.ok ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), t, c.budget_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
