#ifndef JFLOW_JUNCTION_HPP
#define JFLOW_JUNCTION_HPP

#include "jflow/hamiltonian.hpp"

#include <string>
#include <vector>

namespace jflow {

struct BranchSpec {
    std::string name;             // used in reports and output files
    Orientation orientation = Orientation::Incoming;
    double gamma = 1.0;           // share of the junction flux, in (0, 1]
    double length_m = 0.0;
    FundamentalDiagram diagram;
};

/**
 * A junction of n_in incoming and n_out outgoing roads glued at one point.
 * Branches are stored incoming first; each group's gamma coefficients must
 * sum to 1 (within 1e-12).
 */
class JunctionSpec {
public:
    explicit JunctionSpec(std::vector<BranchSpec> branches);

    int n_branches() const { return static_cast<int>(branches_.size()); }
    int n_in() const { return n_in_; }
    int n_out() const { return n_out_; }
    bool is_incoming(int b) const { return b < n_in_; }

    const BranchSpec& branch(int b) const { return branches_[b]; }
    const std::vector<BranchSpec>& branches() const { return branches_; }
    const BranchHamiltonian& hamiltonian(int b) const { return hams_[b]; }

    // Same topology and diagrams, different split coefficients. Used by the
    // flux-maximization policy; gammas must satisfy the simplex sums.
    JunctionSpec with_gammas(const std::vector<double>& gammas) const;

private:
    std::vector<BranchSpec> branches_;
    std::vector<BranchHamiltonian> hams_;
    int n_in_ = 0, n_out_ = 0;
};

struct GridSpec {
    double dx_m = 0.0;
    double dt_s = 0.0;      // <= 0 means "auto" (resolved against the CFL bound)
    double horizon_s = 0.0;

    double dx_km() const { return dx_m / 1000.0; }
    double dt_h() const { return dt_s / 3600.0; }
    // grid points 0..n_cells on each branch, n_cells = floor(L/dx) segments
    int n_cells(double length_m) const;
};

// One piecewise-constant density patch of an initial profile, in
// branch-local coordinates (meters from the junction).
struct DensitySegment {
    double from_m = 0.0;
    double to_m = 0.0;
    double rho = 0.0;  // veh/km
};

/**
 * Initial condition: a density profile per branch plus the label of the
 * vehicle at the junction at t = 0. Profiles must tile [0, L] contiguously
 * and stay within [0, rho_max] of their branch diagram.
 */
class InitialData {
public:
    InitialData(const JunctionSpec& junction, std::vector<std::vector<DensitySegment>> profiles,
                double label0 = 0.0);

    double label0() const { return label0_; }
    const std::vector<DensitySegment>& profile(int b) const { return profiles_[b]; }

    double density_at(int b, double x_m) const;
    // vehicles on [x0, x1] (the exact piecewise integral; rho veh/km * km)
    double vehicles_on(int b, double x0_m, double x1_m) const;
    double min_density(int b) const;
    double max_density(int b) const;

    // Cell average over the virtual cell just past the last grid point,
    // extending the profile constantly beyond L. This single value feeds
    // both the label-side ghost gradient and the density-side boundary flux.
    double ghost_density(int b, const GridSpec& grid) const;

private:
    std::vector<std::vector<DensitySegment>> profiles_;
    double label0_ = 0.0;
};

/** Discrete labels U^n_i per branch, on grid points i = 0..N_b. */
struct LabelField {
    std::vector<std::vector<double>> u;
    int step = 0;
    double time_s = 0.0;

    double junction_value() const { return u.front().front(); }
};

/** Discrete densities per branch, on the N_b cells between grid points. */
struct DensityField {
    std::vector<std::vector<double>> rho;
    int step = 0;
    double time_s = 0.0;
};

// U^0 from the initial profiles: along each branch, labels accumulate the
// exact integral of the density, increasing away from the junction on
// incoming roads and decreasing on outgoing ones.
LabelField labels_from_densities(const JunctionSpec&, const GridSpec&, const InitialData&);

// rho = +gamma p on incoming branches, -gamma p on outgoing ones, with
// p the forward difference of the labels over each cell.
DensityField densities_from_labels(const JunctionSpec&, const GridSpec&, const LabelField&);

// Forward/backward difference (U_{i+1}-U_i)/dx, (U_i-U_{i-1})/dx in labels/km.
double p_plus(const LabelField&, const GridSpec&, int branch, int i);
double p_minus(const LabelField&, const GridSpec&, int branch, int i);

} // namespace jflow

#endif
