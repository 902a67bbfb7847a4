#include "blochlab/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace blochlab {

Weight Weight::radial(std::string id, std::function<double(double)> fn,
                      bool typical, bool decreasing) {
    Weight w;
    w.id_ = std::move(id);
    w.fn_ = std::move(fn);
    w.radial_ = true;
    w.typical_ = typical;
    w.decreasing_ = decreasing;
    return w;
}

void Weight::verify_flags() const {
    const auto grid = make_radius_grid(1024);
    double prev = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double val = (*this)(grid[k]);
        if (!(val > 0.0) || !std::isfinite(val))
            throw std::logic_error("weight '" + id_ + "' is not positive at r = " +
                                   std::to_string(grid[k]));
        if (decreasing_ && k > 0 && val > prev * (1.0 + 1e-12))
            throw std::logic_error("weight '" + id_ + "' declared decreasing but increases at r = " +
                                   std::to_string(grid[k]));
        prev = val;
    }
    if (typical_) {
        // vanishing at the boundary is only observable as a strict decrease
        // along 1 - 10^-k; the loglog-slow weights never get numerically small.
        double last = (*this)(1.0 - 1e-4);
        for (int k = 5; k <= 12; ++k) {
            const double val = (*this)(1.0 - std::pow(10.0, -k));
            if (!(val < last))
                throw std::logic_error("weight '" + id_ +
                                       "' declared typical but does not decay toward the boundary");
            last = val;
        }
    }
}

namespace {

Weight make_verified(std::string id, std::function<double(double)> fn,
                     bool typical, bool decreasing) {
    Weight w = Weight::radial(std::move(id), std::move(fn), typical, decreasing);
    w.verify_flags();
    return w;
}

} // namespace

const Weight& weight_vlog() {
    static const Weight w = make_verified(
        "vlog", [](double r) { return (1.0 - r) * std::log(2.0 / (1.0 - r)); },
        /*typical=*/true, /*decreasing=*/false);
    return w;
}

const Weight& weight_wlog() {
    static const Weight w = make_verified(
        "wlog",
        [](double r) { return 1.0 / std::log(std::log(4.0 / (1.0 - r * r))); },
        /*typical=*/true, /*decreasing=*/true);
    return w;
}

const Weight& weight_v3() {
    static const Weight w = make_verified(
        "v3", [](double r) { return (1.0 - r) * std::log(3.0 / (1.0 - r)); },
        /*typical=*/true, /*decreasing=*/false);
    return w;
}

const Weight& weight_ve() {
    static const Weight w = make_verified(
        "ve",
        [](double r) { return (1.0 - r) * std::log(2.0 * std::exp(1.0) / (1.0 - r)); },
        /*typical=*/true, /*decreasing=*/false);
    return w;
}

const Weight& weight_unit() {
    static const Weight w = make_verified(
        "unit", [](double) { return 1.0; }, /*typical=*/false, /*decreasing=*/true);
    return w;
}

const Weight* find_weight(std::string_view id) {
    if (id == "vlog") return &weight_vlog();
    if (id == "wlog") return &weight_wlog();
    if (id == "v3") return &weight_v3();
    if (id == "ve") return &weight_ve();
    return nullptr;
}

std::vector<double> make_radius_grid(std::size_t n, double r_max) {
    if (n == 0) throw std::invalid_argument("radius grid needs at least one interval");
    if (!(r_max > 0.0) || r_max > kRadiusClamp)
        throw std::invalid_argument("radius grid r_max must lie in (0, 1 - 1e-12]");
    const double K = -std::log2(1.0 - r_max);
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        grid[k] = 1.0 - std::exp2(-static_cast<double>(k) * K / static_cast<double>(n));
    grid.front() = 0.0;
    grid.back() = r_max;
    return grid;
}

Band weight_equivalence_band(const Weight& a, const Weight& b,
                             std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("empty radius grid");
    Band band;
    bool first = true;
    for (double r : grid) {
        if (r >= 1.0) throw std::invalid_argument("radius grid contains r >= 1");
        const double ratio = a(r) / b(r);
        if (first) {
            band.lower = band.upper = ratio;
            first = false;
        } else {
            if (ratio < band.lower) band.lower = ratio;
            if (ratio > band.upper) band.upper = ratio;
        }
    }
    return band;
}

} // namespace blochlab
