#include "jflow/fundamental_diagram.hpp"
#include "jflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jflow {

namespace {

constexpr double kCapacitySnap = 1e-9;  // relative snap of flow ~ f_max to rho_c
constexpr double kBisectTol = 1e-12;    // absolute, on rho

// Smaller root of a x^2 + b x = t on the increasing side of the parabola
// (a <= 0, b > 0). Stable against cancellation for small t.
double increasing_parabola_inverse(double a, double b, double t) {
    if (a == 0.0)
        return t / b;
    const double disc = std::max(0.0, b * b + 4.0 * a * t);
    return 2.0 * t / (b + std::sqrt(disc));
}

} // namespace

FundamentalDiagram FundamentalDiagram::bi_parabolic(double rho_c, double rho_max, double f_max,
                                                    double k) {
    if (!(rho_c > 0.0) || !(rho_max > rho_c))
        throw ConfigError("fundamental diagram: need 0 < rho_c < rho_max");
    if (!(f_max > 0.0))
        throw ConfigError("fundamental diagram: need f_max > 0");
    if (!(k >= 1.0 && k <= 2.0))
        throw ConfigError("fundamental diagram: shape parameter k must be in [1, 2]");

    FundamentalDiagram d;
    d.kind_ = DiagramKind::BiParabolic;
    d.rho_c_ = rho_c;
    d.rho_max_ = rho_max;
    d.f_max_ = f_max;
    d.k_ = k;
    d.a1_ = (1.0 - k) * f_max / (rho_c * rho_c);
    d.b1_ = k * f_max / rho_c;
    const double w = rho_max - rho_c;
    d.a2_ = (1.0 - k) * f_max / (w * w);
    d.b2_ = (k * rho_c + (k - 2.0) * rho_max) * f_max / (w * w);
    d.c2_ = -rho_max * (k * rho_c - rho_max) * f_max / (w * w);
    return d;
}

FundamentalDiagram FundamentalDiagram::piecewise(std::vector<std::pair<double, double>> points) {
    if (points.size() < 3)
        throw ConfigError("piecewise diagram: need at least 3 breakpoints");
    if (points.front().first != 0.0)
        throw ConfigError("piecewise diagram: breakpoints must start at rho = 0");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i].first > points[i - 1].first))
            throw ConfigError("piecewise diagram: breakpoint densities must be strictly increasing");

    const auto it = std::max_element(points.begin(), points.end(),
                                     [](auto& a, auto& b) { return a.second < b.second; });
    const std::size_t m = static_cast<std::size_t>(it - points.begin());
    if (m == 0 || m + 1 == points.size())
        throw ConfigError("piecewise diagram: maximum flow must be interior");
    if ((m > 0 && points[m - 1].second == points[m].second) ||
        (m + 1 < points.size() && points[m + 1].second == points[m].second))
        throw ConfigError("piecewise diagram: plateau at the maximum is not supported");
    for (std::size_t i = 1; i <= m; ++i)
        if (points[i].second < points[i - 1].second)
            throw ConfigError("piecewise diagram: flow must be nondecreasing up to the maximum");
    for (std::size_t i = m + 1; i < points.size(); ++i)
        if (points[i].second > points[i - 1].second)
            throw ConfigError("piecewise diagram: flow must be nonincreasing after the maximum");
    if (points[1].second == points[0].second)
        throw ConfigError("piecewise diagram: first segment must have positive slope");
    if (points[points.size() - 1].second == points[points.size() - 2].second)
        throw ConfigError("piecewise diagram: last segment must have negative slope");

    FundamentalDiagram d;
    d.kind_ = DiagramKind::UserPiecewise;
    d.crit_ = m;
    d.rho_c_ = points[m].first;
    d.f_max_ = points[m].second;
    d.rho_max_ = points.back().first;
    d.k_ = 0.0;
    d.pts_ = std::move(points);
    return d;
}

double FundamentalDiagram::fluid_flow(double rho) const {
    if (kind_ == DiagramKind::BiParabolic)
        return (a1_ * rho + b1_) * rho;
    // walk segments up to the maximum; extend first/last segment linearly
    const auto& p = pts_;
    std::size_t j = 0;
    while (j + 1 < crit_ && p[j + 1].first < rho)
        ++j;
    const double s = (p[j + 1].second - p[j].second) / (p[j + 1].first - p[j].first);
    return p[j].second + s * (rho - p[j].first);
}

double FundamentalDiagram::congested_flow(double rho) const {
    if (kind_ == DiagramKind::BiParabolic)
        return (a2_ * rho + b2_) * rho + c2_;
    const auto& p = pts_;
    std::size_t j = crit_;
    while (j + 2 < p.size() && p[j + 1].first < rho)
        ++j;
    const double s = (p[j + 1].second - p[j].second) / (p[j + 1].first - p[j].first);
    return p[j].second + s * (rho - p[j].first);
}

double FundamentalDiagram::flow(double rho) const {
    return rho <= rho_c_ ? fluid_flow(rho) : congested_flow(rho);
}

double FundamentalDiagram::demand(double rho) const {
    return rho <= rho_c_ ? fluid_flow(rho) : f_max_;
}

double FundamentalDiagram::supply(double rho) const {
    return rho <= rho_c_ ? f_max_ : congested_flow(rho);
}

double FundamentalDiagram::rho_from_demand(double flow) const {
    if (flow >= f_max_) {
        if (flow - f_max_ <= kCapacitySnap * std::max(1.0, f_max_))
            return rho_c_;
        throw std::domain_error("rho_from_demand: flow exceeds capacity");
    }
    if (kind_ == DiagramKind::BiParabolic)
        return increasing_parabola_inverse(a1_, b1_, flow);

    // leftmost crossing; bracket by segment walk, then bisect
    double lo, hi;
    if (flow < pts_[0].second) {
        const double s = (pts_[1].second - pts_[0].second) / (pts_[1].first - pts_[0].first);
        return pts_[0].first + (flow - pts_[0].second) / s;
    }
    std::size_t j = 0;
    while (j + 1 <= crit_ && pts_[j + 1].second < flow)
        ++j;
    lo = pts_[j].first;
    hi = pts_[j + 1].first;
    if (pts_[j].second == flow)
        return pts_[j].first;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        (fluid_flow(mid) < flow ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double FundamentalDiagram::rho_from_supply(double flow) const {
    if (flow >= f_max_) {
        if (flow - f_max_ <= kCapacitySnap * std::max(1.0, f_max_))
            return rho_c_;
        throw std::domain_error("rho_from_supply: flow exceeds capacity");
    }
    if (kind_ == DiagramKind::BiParabolic) {
        const double disc = std::max(0.0, b2_ * b2_ - 4.0 * a2_ * (c2_ - flow));
        if (a2_ == 0.0)
            return (flow - c2_) / b2_;
        return (b2_ + std::sqrt(disc)) / (2.0 * -a2_);
    }

    if (flow < pts_.back().second) {
        const auto& q = pts_[pts_.size() - 2];
        const auto& r = pts_.back();
        const double s = (r.second - q.second) / (r.first - q.first);
        return q.first + (flow - q.second) / s;
    }
    std::size_t j = pts_.size() - 1;
    while (j - 1 >= crit_ && pts_[j - 1].second < flow)
        --j;
    if (pts_[j].second == flow)
        return pts_[j].first;
    double lo = pts_[j - 1].first, hi = pts_[j].first;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        (congested_flow(mid) > flow ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double FundamentalDiagram::fluid_slope(double rho) const {
    if (kind_ == DiagramKind::BiParabolic)
        return 2.0 * a1_ * rho + b1_;
    const auto& p = pts_;
    std::size_t j = 0;
    while (j + 1 < crit_ && p[j + 1].first < rho)
        ++j;
    return (p[j + 1].second - p[j].second) / (p[j + 1].first - p[j].first);
}

double FundamentalDiagram::congested_slope(double rho) const {
    if (kind_ == DiagramKind::BiParabolic)
        return 2.0 * a2_ * rho + b2_;
    const auto& p = pts_;
    std::size_t j = crit_;
    while (j + 2 < p.size() && p[j + 1].first < rho)
        ++j;
    return (p[j + 1].second - p[j].second) / (p[j + 1].first - p[j].first);
}

double FundamentalDiagram::max_abs_slope(double rho_lo, double rho_hi) const {
    if (rho_lo > rho_hi)
        std::swap(rho_lo, rho_hi);
    double best = 0.0;
    if (rho_lo < rho_c_ || rho_lo == rho_c_) {
        // fluid part of the interval; |f'| is largest at the interval ends
        const double a = rho_lo, b = std::min(rho_hi, rho_c_);
        best = std::max({best, std::abs(fluid_slope(a)), std::abs(fluid_slope(b))});
        if (kind_ == DiagramKind::UserPiecewise)
            for (std::size_t j = 0; j + 1 <= crit_; ++j)
                if (pts_[j + 1].first > a && pts_[j].first < b)
                    best = std::max(best, std::abs(fluid_slope(0.5 * (std::max(a, pts_[j].first) +
                                                                      std::min(b, pts_[j + 1].first)))));
    }
    if (rho_hi > rho_c_ || rho_hi == rho_c_) {
        const double a = std::max(rho_lo, rho_c_), b = rho_hi;
        best = std::max({best, std::abs(congested_slope(a)), std::abs(congested_slope(b))});
        if (kind_ == DiagramKind::UserPiecewise)
            for (std::size_t j = crit_; j + 1 < pts_.size(); ++j)
                if (pts_[j + 1].first > a && pts_[j].first < b)
                    best = std::max(best, std::abs(congested_slope(0.5 * (std::max(a, pts_[j].first) +
                                                                          std::min(b, pts_[j + 1].first)))));
    }
    return best;
}

} // namespace jflow
