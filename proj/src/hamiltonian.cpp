#include "jflow/hamiltonian.hpp"
#include "jflow/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jflow {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinSnap = 1e-9;  // relative snap of a ~ H(p0) to the plateau
} // namespace

BranchHamiltonian::BranchHamiltonian(FundamentalDiagram diagram, double gamma,
                                     Orientation orientation)
    : diagram_(std::move(diagram)), gamma_(gamma), orient_(orientation),
      sign_(orientation == Orientation::Incoming ? 1.0 : -1.0) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw ConfigError("branch hamiltonian: gamma must be in (0, 1]");
    p0_ = sign_ * diagram_.rho_c() / gamma_;
}

double BranchHamiltonian::h(double p) const {
    return -diagram_.flow(rho_of(p)) / gamma_;
}

double BranchHamiltonian::h_minus(double p) const {
    const double rho = rho_of(p);
    return orient_ == Orientation::Incoming ? -diagram_.demand(rho) / gamma_
                                            : -diagram_.supply(rho) / gamma_;
}

double BranchHamiltonian::h_plus(double p) const {
    const double rho = rho_of(p);
    return orient_ == Orientation::Incoming ? -diagram_.supply(rho) / gamma_
                                            : -diagram_.demand(rho) / gamma_;
}

double BranchHamiltonian::inverse_h_minus(double a) const {
    if (a == kInf)
        return -kInf;
    if (a < h_min()) {
        if (h_min() - a <= kMinSnap * std::max(1.0, std::abs(h_min())))
            return p0_;
        throw std::domain_error("inverse_h_minus: level below the Hamiltonian minimum");
    }
    const double flow = -gamma_ * a;
    return orient_ == Orientation::Incoming ? diagram_.rho_from_demand(flow) / gamma_
                                            : -diagram_.rho_from_supply(flow) / gamma_;
}

double BranchHamiltonian::inverse_h_plus(double a) const {
    if (a == kInf)
        return kInf;
    if (a < h_min()) {
        if (h_min() - a <= kMinSnap * std::max(1.0, std::abs(h_min())))
            return p0_;
        throw std::domain_error("inverse_h_plus: level below the Hamiltonian minimum");
    }
    const double flow = -gamma_ * a;
    return orient_ == Orientation::Incoming ? diagram_.rho_from_supply(flow) / gamma_
                                            : -diagram_.rho_from_demand(flow) / gamma_;
}

double BranchHamiltonian::lipschitz_bound(double p_lo, double p_hi) const {
    if (p_lo > p_hi)
        throw std::invalid_argument("lipschitz_bound: p_lo > p_hi");
    const double r1 = rho_of(p_lo), r2 = rho_of(p_hi);
    return diagram_.max_abs_slope(std::min(r1, r2), std::max(r1, r2));
}

} // namespace jflow
