#ifndef JFLOW_FUNDAMENTAL_DIAGRAM_HPP
#define JFLOW_FUNDAMENTAL_DIAGRAM_HPP

#include <utility>
#include <vector>

namespace jflow {

enum class DiagramKind { BiParabolic, UserPiecewise };

/**
 * Flux-density relation f(rho) of one road: unimodal, with capacity f_max
 * reached at the critical density rho_c and f(rho_max) = 0.
 *
 * Units: rho in veh/km, flows in veh/h, slopes f' in km/h.
 *
 * The bi-parabolic form is two quadratic pieces joined at rho_c; the pieces
 * are evaluated as polynomials outside [0, rho_max] as well, so that the
 * induced Hamiltonians are coercive. Physical runs never leave [0, rho_max].
 */
class FundamentalDiagram {
public:
    // f(rho) = (1-k) f_max/rho_c^2 rho^2 + k f_max/rho_c rho          for rho <= rho_c
    //          a2 rho^2 + b2 rho + c2 (vanishing at rho_max)          for rho >  rho_c
    // Requires 0 < rho_c < rho_max, f_max > 0 and k in [1, 2]; k outside
    // [1, 2] would break unimodality of the extended parabolas.
    static FundamentalDiagram bi_parabolic(double rho_c, double rho_max, double f_max, double k);

    // Piecewise-linear diagram through sampled (rho, flow) breakpoints.
    // Breakpoints must start at rho = 0, be strictly increasing in rho,
    // unimodal in flow with a unique maximum (no plateau at the top), and
    // have nonzero slope on the first and last segment.
    static FundamentalDiagram piecewise(std::vector<std::pair<double, double>> points);

    double flow(double rho) const;
    double demand(double rho) const;  // f_D: f below rho_c, f_max above
    double supply(double rho) const;  // f_S: f_max below rho_c, f above

    // inf{rho : f_D(rho) = flow}, i.e. the fluid-branch inverse (rho <= rho_c).
    // flow must not exceed f_max (a tiny overshoot is snapped to rho_c).
    double rho_from_demand(double flow) const;
    // sup{rho : f_S(rho) = flow}, i.e. the congested-branch inverse (rho >= rho_c).
    double rho_from_supply(double flow) const;

    // ess-sup of |f'| over [rho_lo, rho_hi]; the kink at rho_c contributes
    // its one-sided values. For a degenerate interval [r, r] this is the
    // one-sided slope at r (max of both sides exactly at rho_c).
    double max_abs_slope(double rho_lo, double rho_hi) const;

    double rho_c() const { return rho_c_; }
    double rho_max() const { return rho_max_; }
    double f_max() const { return f_max_; }
    double shape_k() const { return k_; }
    DiagramKind kind() const { return kind_; }

    bool operator==(const FundamentalDiagram&) const = default;

private:
    FundamentalDiagram() = default;

    double fluid_flow(double rho) const;      // extended increasing piece
    double congested_flow(double rho) const;  // extended decreasing piece
    double fluid_slope(double rho) const;
    double congested_slope(double rho) const;

    DiagramKind kind_ = DiagramKind::BiParabolic;
    double rho_c_ = 0, rho_max_ = 0, f_max_ = 0, k_ = 0;

    // bi-parabolic coefficients
    double a1_ = 0, b1_ = 0;           // fluid piece, no constant term
    double a2_ = 0, b2_ = 0, c2_ = 0;  // congested piece

    // piecewise breakpoints, (rho, flow), with crit_ the index of the maximum
    std::vector<std::pair<double, double>> pts_;
    std::size_t crit_ = 0;
};

} // namespace jflow

#endif
