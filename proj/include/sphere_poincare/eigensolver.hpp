#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphere_poincare/vsh.hpp"

namespace sphere_poincare {

/// Degree-n block of G_kappa: a symmetric 2x2 form on (u1, u2) plus the
/// decoupled u3 channel with eigenvalue n(n+1). At n = 0 only the scalar
/// kappa + 2 acting on u1(0,0) remains.
struct SpectralBlock {
    int n = 0;
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;
    double u3_eigenvalue = 0.0;

    bool degenerate() const { return n == 0; }
    double trace() const { return a11 + a22; }
};

SpectralBlock block(int n, double kappa);

struct EigenPair {
    double value = 0.0;
    double u1 = 0.0;  // unit eigenvector, u1 >= 0 (u2 >= 0 on a tie)
    double u2 = 0.0;
};

/// Smaller eigenvalue and eigenvector of a non-degenerate block.
EigenPair min_eigenpair(const SpectralBlock& b);

/// Outcome of the block sweep: the minimum and every channel attaining it.
struct GammaNumeric {
    double value = 0.0;
    bool scalar_channel = false;            // u1(0,0)
    std::vector<int> block_degrees;         // (u1, u2) blocks at these n
    std::vector<int> toroidal_degrees;      // u3 channels at these n

    int max_argmin_degree() const;
};

/// Two channel values closer than this (relative to max(1, |value|)) count as a tie.
inline constexpr double kChannelTie = 1e-12;

GammaNumeric gamma_numeric(double kappa, int n_max = 20);

struct NumericMinimizerOptions {
    /// Direction inside the degenerate order space of the minimizing degree,
    /// ordered j = -n..n. Empty selects j = 0.
    std::vector<double> direction;
    /// Draw the direction at random instead.
    bool randomize = false;
    std::uint64_t seed = 0;
};

/// Minimizing coefficients scaled to norm_sq = 4 pi. On a tie between the
/// scalar channel and a block the scalar channel is used.
CoeffSet numeric_minimizer(double kappa, int n_max = 20, const NumericMinimizerOptions& options = {});

}  // namespace sphere_poincare
