#ifndef JFLOW_HAMILTONIAN_HPP
#define JFLOW_HAMILTONIAN_HPP

#include "jflow/fundamental_diagram.hpp"

namespace jflow {

enum class Orientation { Incoming, Outgoing };

/**
 * Per-branch Hamiltonian of the label equation u_t + H(u_x) = 0 and its
 * monotone envelopes:
 *
 *   incoming:  H(p) = -(1/gamma) f( gamma p),  minimizer p0 =  rho_c/gamma
 *   outgoing:  H(p) = -(1/gamma) f(-gamma p),  minimizer p0 = -rho_c/gamma
 *
 * H- is the nonincreasing envelope (H left of p0, flat after), H+ the
 * nondecreasing one; max{H-, H+} = H everywhere. In traffic terms H- maps
 * to the demand of an incoming road / supply of an outgoing one, H+ the
 * other way around.
 *
 * p is a label gradient in labels/km, H in labels/h, |H'| in km/h.
 */
class BranchHamiltonian {
public:
    BranchHamiltonian(FundamentalDiagram diagram, double gamma, Orientation orientation);

    double h(double p) const;
    double h_minus(double p) const;
    double h_plus(double p) const;
    double h_min() const { return -diagram_.f_max() / gamma_; }
    double p0() const { return p0_; }

    // inf{p : H-(p) = a}; the plateau value a = H(p0) maps to p0 exactly.
    // a = +inf maps to -inf. Throws std::domain_error for a below H(p0).
    double inverse_h_minus(double a) const;
    // sup{p : H+(p) = a}; plateau maps to p0, +inf maps to +inf.
    double inverse_h_plus(double a) const;

    // ess-sup of |H'| over [p_lo, p_hi], in km/h
    double lipschitz_bound(double p_lo, double p_hi) const;

    // density carried by a gradient and back:
    // rho_of(p) = gamma p (incoming) or -gamma p (outgoing)
    double rho_of(double p) const { return sign_ * gamma_ * p; }
    double p_of(double rho) const { return sign_ * rho / gamma_; }

    double gamma() const { return gamma_; }
    Orientation orientation() const { return orient_; }
    const FundamentalDiagram& diagram() const { return diagram_; }

private:
    FundamentalDiagram diagram_;
    double gamma_;
    Orientation orient_;
    double sign_;  // +1 incoming, -1 outgoing
    double p0_;
};

} // namespace jflow

#endif
