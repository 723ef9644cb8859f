#pragma once

#include <iosfwd>
#include <vector>

#include "sphere_poincare/grid.hpp"
#include "sphere_poincare/vec3.hpp"

namespace sphere_poincare {

/// One vector spherical harmonic: family 1 is radial (Y n), family 2 is the
/// normalized surface gradient, family 3 is n x (family 2).
struct ModeIndex {
    int family = 1;
    int n = 0;
    int j = 0;

    /// Families 2 and 3 start at n = 1.
    bool valid() const;

    friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Band-limited coefficient table u^(i)(n, j), dense in (i, n, j).
///
/// The formal modes (2,0,0) and (3,0,0) read as zero and cannot be set.
class CoeffSet {
public:
    explicit CoeffSet(int band_limit = 0);

    int band_limit() const { return band_limit_; }

    double get(const ModeIndex& m) const;
    double operator()(int family, int n, int j) const { return get({family, n, j}); }
    void set(const ModeIndex& m, double value);
    void set(int family, int n, int j, double value) { set({family, n, j}, value); }

    /// All valid modes with n <= band_limit, ordered by family, then n, then j.
    std::vector<ModeIndex> modes() const;

    CoeffSet& operator+=(const CoeffSet& other);
    CoeffSet& operator*=(double s);

    /// Copy with a different band limit; higher modes are dropped.
    CoeffSet resized(int band_limit) const;

private:
    std::size_t offset(const ModeIndex& m) const;

    int band_limit_;
    std::vector<double> data_;
};

CoeffSet operator+(CoeffSet a, const CoeffSet& b);
CoeffSet operator*(double s, CoeffSet a);

/// Pointwise value of a mode. Requires |t| < 1.
Vec3 eval_vsh(const ModeIndex& mode, double phi, double t);

/// Cached samples of every mode up to a band limit on a grid.
class VshTable {
public:
    VshTable(GridPtr grid, int band_limit);

    const GridPtr& grid() const { return grid_; }
    int band_limit() const { return band_limit_; }
    const std::vector<ModeIndex>& modes() const { return modes_; }
    const std::vector<Vec3>& samples(std::size_t mode) const { return samples_[mode]; }

    SampledVectorField synthesize(const CoeffSet& c) const;
    CoeffSet analyze(const SampledVectorField& u) const;

private:
    GridPtr grid_;
    int band_limit_;
    std::vector<ModeIndex> modes_;
    std::vector<std::vector<Vec3>> samples_;
};

/// Sum of c(mode) y(mode) at every node. Throws on an under-resolved grid.
SampledVectorField synthesize(const CoeffSet& c, const GridPtr& grid);

/// Coefficients (u, y(mode)) for every mode up to band_limit.
CoeffSet analyze(const SampledVectorField& u, int band_limit);

/// CSV with header i,n,j,value. Zero entries are omitted on write.
void write_coeffs_csv(std::ostream& os, const CoeffSet& c);

/// Missing rows mean zero; rows outside the band limit or naming a formal mode are
/// rejected. A negative band_limit is inferred from the largest degree present.
CoeffSet read_coeffs_csv(std::istream& is, int band_limit = -1);

}  // namespace sphere_poincare
