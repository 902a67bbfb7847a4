#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blochlab {

/// Radius evaluations clamp here; the suprema of every implemented quantity
/// are attained strictly inside the disk, so the clamp never cuts a maximum.
inline constexpr double kRadiusClamp = 1.0 - 1e-12;

inline double clamp_radius(double r) {
    if (r < 0.0) return 0.0;
    return r < kRadiusClamp ? r : kRadiusClamp;
}

/// A radial weight: a positive function of the radius on [0, 1), plus the
/// flags the analysis relies on. Declared flags are checked on a fixed grid
/// by verify_flags() before a built-in weight is handed out.
class Weight {
public:
    static Weight radial(std::string id, std::function<double(double)> fn,
                         bool typical, bool decreasing);

    const std::string& id() const { return id_; }
    bool radial_flag() const { return radial_; }
    bool typical_flag() const { return typical_; }
    bool decreasing_flag() const { return decreasing_; }

    /// Evaluate at (clamped) radius r; positive for every valid weight.
    double operator()(double r) const { return fn_(clamp_radius(r)); }

    /// Grid self-test of positivity and the declared flags.
    /// Throws std::logic_error naming the violated property.
    void verify_flags() const;

private:
    Weight() = default;
    std::string id_;
    std::function<double(double)> fn_;
    bool radial_ = true;
    bool typical_ = false;
    bool decreasing_ = false;
};

/// v_log(r) = (1-r) log(2/(1-r))
const Weight& weight_vlog();
/// w_log(r) = 1 / log log(4/(1-r^2))
const Weight& weight_wlog();
/// v_3(r) = (1-r) log(3/(1-r))
const Weight& weight_v3();
/// v_e(r) = (1-r) log(2e/(1-r))
const Weight& weight_ve();
/// The constant weight 1 (used by the self-map check).
const Weight& weight_unit();

/// Lookup by CLI id ("vlog", "wlog", "v3", "ve"); nullptr when unknown.
const Weight* find_weight(std::string_view id);

/// n+1 radii clustered toward the boundary: r_k = 1 - 2^{-k*K/n} with K
/// chosen so r_0 = 0 and r_n = r_max.
std::vector<double> make_radius_grid(std::size_t n, double r_max = kRadiusClamp);

struct Band {
    double lower = 0.0;
    double upper = 0.0;
};

/// Min and max of a(r)/b(r) over the grid. Throws std::invalid_argument if
/// the grid reaches r >= 1.
Band weight_equivalence_band(const Weight& a, const Weight& b,
                             std::span<const double> grid);

} // namespace blochlab
