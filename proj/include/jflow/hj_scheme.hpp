#ifndef JFLOW_HJ_SCHEME_HPP
#define JFLOW_HJ_SCHEME_HPP

#include "jflow/junction.hpp"

#include <string>
#include <vector>

namespace jflow {

struct BranchBounds {
    double p_lo = 0, p_hi = 0;      // a-priori gradient bounds, labels/km
    double rho_lo = 0, rho_hi = 0;  // the same bounds in density terms
    double speed_kmh = 0;           // ess-sup |H'| over [p_lo, p_hi]
};

/**
 * Quantities of the restrictive CFL condition, all derived from one dry
 * application of the scheme to the initial data: m0/M0 are the extreme
 * initial discrete time derivatives, the gradient bounds invert the
 * monotone envelopes at -m0, and dt_max is dx over the fastest branch.
 */
struct CflReport {
    double m0 = 0, M0 = 0;  // labels/h
    std::vector<BranchBounds> bounds;
    double max_speed_kmh = 0;
    int binding_branch = 0;
    double dt_max_s = 0;  // +inf when every branch is locally flat
};

// Time-derivative and gradient bounds of the limit solution, computed from
// the best Lipschitz constants of the exact initial profiles. They bracket
// the discrete m0/M0 and gradient bounds.
struct ContinuousBounds {
    double m00 = 0, M00 = 0;
    std::vector<double> p_lo0, p_hi0;
};

enum class ViolationPolicy { Throw, Warn };

struct RunOptions {
    std::vector<double> snapshot_times_s;          // snapshot at the nearest completed step
    int record_every = 0;                          // >0: keep every k-th state (0, k, 2k, ...)
    ViolationPolicy on_violation = ViolationPolicy::Throw;
};

/**
 * Watches the provable estimates while a run advances: m^n nondecreasing,
 * M^n nonincreasing (within 1e-9 scaled by |m0|) and every discrete
 * gradient inside [p_lo - 1e-9, p_hi + 1e-9]. Violations either throw
 * InvariantError or are collected, per ViolationPolicy.
 */
class EstimateTracker {
public:
    EstimateTracker() = default;
    EstimateTracker(const CflReport& cfl, ViolationPolicy policy);

    void observe(int step, double w_min, double w_max, const std::vector<double>& p_min,
                 const std::vector<double>& p_max, const std::vector<int>& p_min_idx,
                 const std::vector<int>& p_max_idx);

    double m0() const { return m0_; }
    double M0() const { return M0_; }
    const std::vector<double>& p_lo() const { return p_lo_; }
    const std::vector<double>& p_hi() const { return p_hi_; }
    const std::vector<double>& m_history() const { return m_hist_; }
    const std::vector<double>& M_history() const { return M_hist_; }
    // per step, per branch: extreme forward gradients seen in that state
    const std::vector<std::vector<double>>& p_min_history() const { return p_min_hist_; }
    const std::vector<std::vector<double>>& p_max_history() const { return p_max_hist_; }
    const std::vector<std::string>& violations() const { return violations_; }

private:
    void fail(const std::string& msg);

    double m0_ = 0, M0_ = 0;
    std::vector<double> p_lo_, p_hi_;
    double w_tol_ = 0, p_tol_ = 0;
    ViolationPolicy policy_ = ViolationPolicy::Throw;
    std::vector<double> m_hist_, M_hist_;
    std::vector<std::vector<double>> p_min_hist_, p_max_hist_;
    std::vector<std::string> violations_;
};

struct HjRunResult {
    std::vector<LabelField> snapshots;   // parallel to RunOptions::snapshot_times_s
    std::vector<LabelField> trajectory;  // states kept by record_every
    EstimateTracker tracker;
    CflReport cfl;
    GridSpec grid;  // dt resolved
    std::vector<double> ghost_densities;
    int steps = 0;
    double wall_seconds = 0;
};

// One scheme application: the discrete time derivative W at every grid
// point of every branch (junction value shared, boundary points closed with
// the ghost gradients). Optionally reports per-branch extreme forward
// gradients of the input state and where they occur.
void time_derivatives(const JunctionSpec&, const GridSpec&, const LabelField&,
                      const std::vector<double>& ghost_densities,
                      std::vector<std::vector<double>>& w, std::vector<double>* p_min = nullptr,
                      std::vector<double>* p_max = nullptr, std::vector<int>* p_min_idx = nullptr,
                      std::vector<int>* p_max_idx = nullptr);

CflReport compute_cfl_restrictive(const JunctionSpec&, const GridSpec&, const LabelField& u0,
                                  const std::vector<double>& ghost_densities);

ContinuousBounds continuous_bounds(const JunctionSpec&, const InitialData&);

// dt selection for dt = "auto": 0.95 * dt_max, falling back to the full
// physical density range when the initial data leaves every branch flat.
double resolve_dt(const JunctionSpec&, const GridSpec&, const CflReport&);

// Advance the scheme to the grid horizon. Throws CflError when the grid dt
// exceeds dt_max (naming the binding branch).
HjRunResult run_hj(const JunctionSpec&, const GridSpec&, const InitialData&,
                   const RunOptions& = {});

} // namespace jflow

#endif
