#include "blochlab/radial.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace blochlab {

Extremum golden_max(const std::function<double(double)>& f, double a, double b,
                    double xtol) {
    if (b < a) std::swap(a, b);
    constexpr double inv_phi = 0.6180339887498949;
    Extremum best{a, f(a)};
    const double fb = f(b);
    if (fb > best.value) best = {b, fb};

    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if (fc > best.value) best = {c, fc};
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if (fd > best.value) best = {d, fd};
        }
    }
    return best;
}

Extremum radial_sup(const std::function<double(double)>& f,
                    std::size_t n_intervals, double r_max) {
    const auto grid = make_radius_grid(n_intervals, r_max);
    std::vector<double> vals(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) vals[k] = f(grid[k]);

    Extremum best{grid[0], vals[0]};
    const std::size_t last = grid.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        const bool left_ok = (k == 0) || vals[k] >= vals[k - 1];
        const bool right_ok = (k == last) || vals[k] >= vals[k + 1];
        if (!(left_ok && right_ok)) continue;
        const double lo = grid[k == 0 ? 0 : k - 1];
        const double hi = grid[k == last ? last : k + 1];
        const Extremum polished = golden_max(f, lo, hi);
        if (polished.value > best.value) best = polished;
    }
    return best;
}

namespace {

std::mutex g_cache_mutex;
std::unordered_map<std::string, double>& monomial_cache() {
    static std::unordered_map<std::string, double> cache;
    return cache;
}

} // namespace

double monomial_growth_norm(const Weight& v, int n) {
    if (n < 0) throw std::invalid_argument("monomial index must be nonnegative");
    if (!v.radial_flag()) throw std::invalid_argument("monomial norms need a radial weight");

    const std::string key = v.id() + ":" + std::to_string(n);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = monomial_cache().find(key);
        if (it != monomial_cache().end()) return it->second;
    }

    double value;
    if (n == 0) {
        value = radial_sup([&](double r) { return v(r); }).value;
    } else {
        const double nn = static_cast<double>(n);
        value = radial_sup([&](double r) { return std::pow(r, nn) * v(r); }).value;
    }

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    monomial_cache().emplace(key, value);
    return value;
}

} // namespace blochlab
