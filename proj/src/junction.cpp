#include "jflow/junction.hpp"
#include "jflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jflow {

namespace {
constexpr double kSimplexTol = 1e-12;
}

JunctionSpec::JunctionSpec(std::vector<BranchSpec> branches) : branches_(std::move(branches)) {
    for (const auto& b : branches_) {
        if (b.orientation == Orientation::Incoming) {
            if (n_out_ > 0)
                throw ConfigError("junction: incoming branches must be listed before outgoing ones");
            ++n_in_;
        } else {
            ++n_out_;
        }
        if (!(b.length_m > 0.0))
            throw ConfigError("junction: branch '" + b.name + "' needs a positive length");
    }
    if (n_in_ < 1 || n_out_ < 1)
        throw ConfigError("junction: need at least one incoming and one outgoing branch");

    double sum_in = 0.0, sum_out = 0.0;
    for (const auto& b : branches_)
        (b.orientation == Orientation::Incoming ? sum_in : sum_out) += b.gamma;
    if (std::abs(sum_in - 1.0) > kSimplexTol)
        throw ConfigError("junction: incoming gamma coefficients must sum to 1");
    if (std::abs(sum_out - 1.0) > kSimplexTol)
        throw ConfigError("junction: outgoing gamma coefficients must sum to 1");

    hams_.reserve(branches_.size());
    for (const auto& b : branches_)
        hams_.emplace_back(b.diagram, b.gamma, b.orientation);
}

JunctionSpec JunctionSpec::with_gammas(const std::vector<double>& gammas) const {
    if (gammas.size() != branches_.size())
        throw std::invalid_argument("with_gammas: wrong coefficient count");
    std::vector<BranchSpec> bs = branches_;
    for (std::size_t i = 0; i < bs.size(); ++i)
        bs[i].gamma = gammas[i];
    return JunctionSpec(std::move(bs));
}

int GridSpec::n_cells(double length_m) const {
    if (!(dx_m > 0.0))
        throw ConfigError("grid: dx must be positive");
    const int n = static_cast<int>(std::floor(length_m / dx_m + 1e-9));
    if (n < 2)
        throw ConfigError("grid: branches need at least 2 cells at this dx");
    return n;
}

InitialData::InitialData(const JunctionSpec& junction,
                         std::vector<std::vector<DensitySegment>> profiles, double label0)
    : profiles_(std::move(profiles)), label0_(label0) {
    if (static_cast<int>(profiles_.size()) != junction.n_branches())
        throw ConfigError("initial data: need one density profile per branch");
    for (int b = 0; b < junction.n_branches(); ++b) {
        const auto& spec = junction.branch(b);
        const auto& prof = profiles_[b];
        if (prof.empty())
            throw ConfigError("initial data: empty profile on branch '" + spec.name + "'");
        double x = 0.0;
        for (const auto& seg : prof) {
            if (std::abs(seg.from_m - x) > 1e-9 || !(seg.to_m > seg.from_m))
                throw ConfigError("initial data: segments must tile [0, L] on branch '" +
                                  spec.name + "'");
            if (seg.rho < 0.0 || seg.rho > spec.diagram.rho_max())
                throw ConfigError("initial data: density outside [0, rho_max] on branch '" +
                                  spec.name + "'");
            x = seg.to_m;
        }
        if (std::abs(x - spec.length_m) > 1e-9)
            throw ConfigError("initial data: profile does not cover [0, L] on branch '" +
                              spec.name + "'");
    }
}

double InitialData::density_at(int b, double x_m) const {
    const auto& prof = profiles_[b];
    if (x_m >= prof.back().to_m)
        return prof.back().rho;  // constant extension beyond L
    for (const auto& seg : prof)
        if (x_m < seg.to_m)
            return seg.rho;
    return prof.back().rho;
}

double InitialData::vehicles_on(int b, double x0_m, double x1_m) const {
    double veh = 0.0;
    for (const auto& seg : profiles_[b]) {
        const double lo = std::max(x0_m, seg.from_m);
        const double hi = std::min(x1_m, seg.to_m);
        if (hi > lo)
            veh += seg.rho * (hi - lo) / 1000.0;
    }
    // constant extension past the profile end
    if (x1_m > profiles_[b].back().to_m)
        veh += profiles_[b].back().rho * (x1_m - std::max(x0_m, profiles_[b].back().to_m)) / 1000.0;
    return veh;
}

double InitialData::min_density(int b) const {
    double m = profiles_[b].front().rho;
    for (const auto& seg : profiles_[b])
        m = std::min(m, seg.rho);
    return m;
}

double InitialData::max_density(int b) const {
    double m = profiles_[b].front().rho;
    for (const auto& seg : profiles_[b])
        m = std::max(m, seg.rho);
    return m;
}

double InitialData::ghost_density(int b, const GridSpec& grid) const {
    const double end = profiles_[b].back().to_m;
    const int n = grid.n_cells(end);
    const double x0 = n * grid.dx_m;
    return vehicles_on(b, x0, x0 + grid.dx_m) / grid.dx_km();
}

LabelField labels_from_densities(const JunctionSpec& junction, const GridSpec& grid,
                                 const InitialData& init) {
    LabelField f;
    f.u.resize(junction.n_branches());
    for (int b = 0; b < junction.n_branches(); ++b) {
        const auto& spec = junction.branch(b);
        const int n = grid.n_cells(spec.length_m);
        const double s = junction.is_incoming(b) ? 1.0 : -1.0;
        auto& u = f.u[b];
        u.resize(n + 1);
        u[0] = init.label0();
        for (int i = 1; i <= n; ++i)
            u[i] = u[i - 1] +
                   s / spec.gamma * init.vehicles_on(b, (i - 1) * grid.dx_m, i * grid.dx_m);
    }
    return f;
}

DensityField densities_from_labels(const JunctionSpec& junction, const GridSpec& grid,
                                   const LabelField& field) {
    DensityField d;
    d.step = field.step;
    d.time_s = field.time_s;
    d.rho.resize(junction.n_branches());
    for (int b = 0; b < junction.n_branches(); ++b) {
        const auto& u = field.u[b];
        const double s = junction.is_incoming(b) ? 1.0 : -1.0;
        const double g = junction.branch(b).gamma;
        auto& rho = d.rho[b];
        rho.resize(u.size() - 1);
        for (std::size_t c = 0; c + 1 < u.size(); ++c)
            rho[c] = s * g * (u[c + 1] - u[c]) / grid.dx_km();
    }
    return d;
}

double p_plus(const LabelField& f, const GridSpec& grid, int branch, int i) {
    const auto& u = f.u[branch];
    if (i < 0 || i + 1 >= static_cast<int>(u.size()))
        throw std::out_of_range("p_plus: grid point out of range");
    return (u[i + 1] - u[i]) / grid.dx_km();
}

double p_minus(const LabelField& f, const GridSpec& grid, int branch, int i) {
    const auto& u = f.u[branch];
    if (i < 1 || i >= static_cast<int>(u.size()))
        throw std::out_of_range("p_minus: grid point out of range");
    return (u[i] - u[i - 1]) / grid.dx_km();
}

} // namespace jflow
