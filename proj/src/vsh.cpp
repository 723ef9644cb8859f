#include "sphere_poincare/vsh.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sphere_poincare/legendre.hpp"

namespace sphere_poincare {

bool ModeIndex::valid() const
{
    if (family < 1 || family > 3) return false;
    if (n < 0 || std::abs(j) > n) return false;
    return family == 1 || n >= 1;
}

namespace {

std::string describe(const ModeIndex& m)
{
    return "(" + std::to_string(m.family) + "," + std::to_string(m.n) + "," + std::to_string(m.j) + ")";
}

}  // namespace

CoeffSet::CoeffSet(int band_limit) : band_limit_(band_limit)
{
    if (band_limit < 0 || band_limit > kMaxDegree) throw std::invalid_argument("CoeffSet: band limit out of range");
    data_.assign(3 * static_cast<std::size_t>(sh_count(band_limit)), 0.0);
}

std::size_t CoeffSet::offset(const ModeIndex& m) const
{
    return static_cast<std::size_t>(m.family - 1) * sh_count(band_limit_) + sh_index(m.n, m.j);
}

double CoeffSet::get(const ModeIndex& m) const
{
    if (m.family >= 2 && m.family <= 3 && m.n == 0 && m.j == 0) return 0.0;
    if (!m.valid()) throw std::out_of_range("CoeffSet: invalid mode " + describe(m));
    if (m.n > band_limit_) return 0.0;
    return data_[offset(m)];
}

void CoeffSet::set(const ModeIndex& m, double value)
{
    if (!m.valid()) throw std::out_of_range("CoeffSet: invalid mode " + describe(m));
    if (m.n > band_limit_) throw std::out_of_range("CoeffSet: mode " + describe(m) + " above band limit");
    if (!std::isfinite(value)) throw std::invalid_argument("CoeffSet: non-finite coefficient");
    data_[offset(m)] = value;
}

std::vector<ModeIndex> CoeffSet::modes() const
{
    std::vector<ModeIndex> out;
    for (int family = 1; family <= 3; ++family)
        for (int n = (family == 1 ? 0 : 1); n <= band_limit_; ++n)
            for (int j = -n; j <= n; ++j) out.push_back({family, n, j});
    return out;
}

CoeffSet& CoeffSet::operator+=(const CoeffSet& other)
{
    if (other.band_limit_ > band_limit_) *this = resized(other.band_limit_);
    for (const auto& m : other.modes()) data_[offset(m)] += other.get(m);
    return *this;
}

CoeffSet& CoeffSet::operator*=(double s)
{
    for (auto& v : data_) v *= s;
    return *this;
}

CoeffSet CoeffSet::resized(int band_limit) const
{
    CoeffSet out(band_limit);
    for (const auto& m : modes())
        if (m.n <= band_limit) out.set(m, get(m));
    return out;
}

CoeffSet operator+(CoeffSet a, const CoeffSet& b) { return a += b; }
CoeffSet operator*(double s, CoeffSet a) { return a *= s; }

Vec3 eval_vsh(const ModeIndex& mode, double phi, double t)
{
    if (!mode.valid()) throw std::invalid_argument("eval_vsh: invalid mode " + describe(mode));
    const TangentFrame f = tangent_frame(phi, t);
    if (mode.family == 1) return scalar_sh(mode.n, mode.j, phi, t) * f.normal;

    const double s = std::sqrt((1.0 - t) * (1.0 + t));
    const ShPartials d = scalar_sh_grad_components(mode.n, mode.j, phi, t);
    const double scale = 1.0 / std::sqrt(mode.n * (mode.n + 1.0));
    const Vec3 grad = (scale * d.d_phi / s) * f.eps_phi + (scale * s * d.d_t) * f.eps_t;
    if (mode.family == 2) return grad;
    return cross(f.normal, grad);
}

VshTable::VshTable(GridPtr grid, int band_limit)
    : grid_(std::move(grid)), band_limit_(band_limit), modes_(CoeffSet(band_limit).modes())
{
    if (!grid_->resolves_vector(band_limit))
        throw std::invalid_argument("VshTable: grid (" + std::to_string(grid_->n_t()) + "," +
                                    std::to_string(grid_->n_phi()) + ") under-resolves band limit " +
                                    std::to_string(band_limit));
    samples_.reserve(modes_.size());
    for (const auto& m : modes_) {
        std::vector<Vec3> s(grid_->size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = eval_vsh(m, grid_->phi(i), grid_->t(i));
        samples_.push_back(std::move(s));
    }
}

SampledVectorField VshTable::synthesize(const CoeffSet& c) const
{
    if (c.band_limit() > band_limit_) throw std::invalid_argument("VshTable::synthesize: band limit too high");
    SampledVectorField u(grid_);
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        const double a = c.get(modes_[k]);
        if (a == 0.0) continue;
        const auto& s = samples_[k];
        for (std::size_t i = 0; i < s.size(); ++i) u.values[i] += a * s[i];
    }
    return u;
}

CoeffSet VshTable::analyze(const SampledVectorField& u) const
{
    if (!u.grid || !u.grid->compatible(*grid_) || u.values.size() != grid_->size())
        throw std::invalid_argument("VshTable::analyze: grid mismatch");
    CoeffSet c(band_limit_);
    for (std::size_t k = 0; k < modes_.size(); ++k) {
        const auto& s = samples_[k];
        double sum = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) sum += grid_->weight(i) * dot(u.values[i], s[i]);
        c.set(modes_[k], sum);
    }
    return c;
}

SampledVectorField synthesize(const CoeffSet& c, const GridPtr& grid)
{
    return VshTable(grid, c.band_limit()).synthesize(c);
}

CoeffSet analyze(const SampledVectorField& u, int band_limit)
{
    if (!u.grid) throw std::invalid_argument("analyze: field without grid");
    return VshTable(u.grid, band_limit).analyze(u);
}

void write_coeffs_csv(std::ostream& os, const CoeffSet& c)
{
    os << "i,n,j,value\n" << std::setprecision(17);
    for (const auto& m : c.modes()) {
        const double v = c.get(m);
        if (v != 0.0) os << m.family << ',' << m.n << ',' << m.j << ',' << v << '\n';
    }
}

CoeffSet read_coeffs_csv(std::istream& is, int band_limit)
{
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_coeffs_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "i,n,j,value") throw std::runtime_error("read_coeffs_csv: unexpected header '" + line + "'");

    struct Row {
        ModeIndex mode;
        double value;
    };
    std::vector<Row> rows;
    int max_n = 0;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        Row r{};
        std::string rest;
        if (!(fields >> r.mode.family >> r.mode.n >> r.mode.j >> r.value) || (fields >> rest))
            throw std::runtime_error("read_coeffs_csv: malformed row at line " + std::to_string(line_no));
        if (!r.mode.valid())
            throw std::runtime_error("read_coeffs_csv: unknown mode " + describe(r.mode) + " at line " +
                                     std::to_string(line_no));
        max_n = std::max(max_n, r.mode.n);
        rows.push_back(r);
    }
    if (band_limit < 0) band_limit = max_n;
    if (max_n > band_limit) throw std::runtime_error("read_coeffs_csv: row above band limit");
    CoeffSet c(band_limit);
    for (const auto& r : rows) c.set(r.mode, r.value);
    return c;
}

}  // namespace sphere_poincare
