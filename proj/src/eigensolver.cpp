#include "sphere_poincare/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sphere_poincare/vec3.hpp"

namespace sphere_poincare {

SpectralBlock block(int n, double kappa)
{
    if (n < 0) throw std::invalid_argument("block: negative degree");
    SpectralBlock b;
    b.n = n;
    if (n == 0) {
        b.a11 = kappa + 2.0;
        return b;
    }
    const double nstar = n * (n + 1.0);
    b.a11 = nstar + 2.0 + kappa;
    b.a12 = -2.0 * std::sqrt(nstar);
    b.a22 = nstar;
    b.u3_eigenvalue = nstar;
    return b;
}

EigenPair min_eigenpair(const SpectralBlock& b)
{
    if (b.degenerate()) throw std::invalid_argument("min_eigenpair: the n = 0 block is scalar");
    const double half_gap = 0.5 * (b.a11 - b.a22);
    const double radius = std::hypot(half_gap, b.a12);
    const double mean = 0.5 * b.trace();
    const double det = b.a11 * b.a22 - b.a12 * b.a12;

    EigenPair p;
    // Divide the determinant by the large root when the mean is positive to avoid cancellation.
    p.value = (mean > 0.0) ? det / (mean + radius) : mean - radius;

    // Null vectors of (A - value I) from either row: (-a12, a11 - value) and
    // (a22 - value, -a12). Keep the better conditioned one.
    double x1 = -b.a12;
    double y1 = b.a11 - p.value;
    double x2 = b.a22 - p.value;
    double y2 = -b.a12;
    double vx = x1;
    double vy = y1;
    if (std::hypot(x2, y2) > std::hypot(x1, y1)) {
        vx = x2;
        vy = y2;
    }
    const double len = std::hypot(vx, vy);
    vx /= len;
    vy /= len;
    if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) {
        vx = -vx;
        vy = -vy;
    }
    p.u1 = vx;
    p.u2 = vy;
    return p;
}

int GammaNumeric::max_argmin_degree() const
{
    int d = scalar_channel ? 0 : -1;
    for (int n : block_degrees) d = std::max(d, n);
    for (int n : toroidal_degrees) d = std::max(d, n);
    return d;
}

GammaNumeric gamma_numeric(double kappa, int n_max)
{
    if (!std::isfinite(kappa)) throw std::domain_error("gamma_numeric: kappa must be finite");
    if (n_max < 1) throw std::invalid_argument("gamma_numeric: n_max must be >= 1");

    struct Candidate {
        int kind;  // 0 scalar, 1 block, 2 toroidal
        int n;
        double value;
    };
    std::vector<Candidate> candidates;
    candidates.push_back({0, 0, block(0, kappa).a11});
    for (int n = 1; n <= n_max; ++n) {
        const SpectralBlock b = block(n, kappa);
        candidates.push_back({1, n, min_eigenpair(b).value});
        candidates.push_back({2, n, b.u3_eigenvalue});
    }

    GammaNumeric out;
    out.value = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
                    return a.value < b.value;
                })->value;
    const double tie = kChannelTie * std::max(1.0, std::abs(out.value));
    for (const auto& c : candidates) {
        if (c.value - out.value > tie) continue;
        if (c.kind == 0) out.scalar_channel = true;
        if (c.kind == 1) out.block_degrees.push_back(c.n);
        if (c.kind == 2) out.toroidal_degrees.push_back(c.n);
    }
    return out;
}

CoeffSet numeric_minimizer(double kappa, int n_max, const NumericMinimizerOptions& options)
{
    const GammaNumeric g = gamma_numeric(kappa, n_max);
    if (g.scalar_channel) {
        CoeffSet c(1);
        c.set(1, 0, 0, std::sqrt(kFourPi));
        return c;
    }
    if (g.block_degrees.empty()) throw std::logic_error("numeric_minimizer: minimum attained only by a u3 channel");

    const int n = g.block_degrees.front();
    const int dim = 2 * n + 1;
    std::vector<double> dir(dim, 0.0);
    if (options.randomize) {
        std::mt19937_64 rng(options.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (auto& d : dir) d = gauss(rng);
    } else if (!options.direction.empty()) {
        if (static_cast<int>(options.direction.size()) != dim)
            throw std::invalid_argument("numeric_minimizer: direction must have 2n+1 entries");
        dir = options.direction;
    } else {
        dir[n] = 1.0;
    }
    double len = 0.0;
    for (double d : dir) len += d * d;
    len = std::sqrt(len);
    if (!(len > 0.0)) throw std::invalid_argument("numeric_minimizer: direction must be nonzero");

    const EigenPair p = min_eigenpair(block(n, kappa));
    const double scale = std::sqrt(kFourPi) / len;
    CoeffSet c(std::max(1, n));
    for (int j = -n; j <= n; ++j) {
        c.set(1, n, j, scale * dir[j + n] * p.u1);
        c.set(2, n, j, scale * dir[j + n] * p.u2);
    }
    return c;
}

}  // namespace sphere_poincare
