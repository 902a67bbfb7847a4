#include "blochlab/associated.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "blochlab/radial.hpp"

namespace blochlab {

AssociatedWeight::AssociatedWeight(const Weight& base, int nmax)
    : base_(base), nmax_(nmax) {
    if (nmax < 1) throw std::invalid_argument("associated weight needs nmax >= 1");
    if (!base.radial_flag())
        throw std::invalid_argument("associated weight estimator needs a radial base");
    norms_.resize(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n)
        norms_[static_cast<std::size_t>(n)] = monomial_growth_norm(base, n);
}

double AssociatedWeight::operator()(double r) const {
    const double rc = clamp_radius(r);
    double sup = 1.0 / norms_[0]; // n = 0 term: r^0 = 1
    double rn = 1.0;
    for (int n = 1; n <= nmax_; ++n) {
        rn *= rc;
        if (rn == 0.0) break;
        const double cand = rn / norms_[static_cast<std::size_t>(n)];
        if (cand > sup) sup = cand;
    }
    return 1.0 / sup;
}

Weight AssociatedWeight::as_weight() const {
    auto self = std::make_shared<AssociatedWeight>(*this);
    return Weight::radial("assoc:" + base_.id() + ":" + std::to_string(nmax_),
                          [self](double r) { return (*self)(r); },
                          base_.typical_flag(), /*decreasing=*/false);
}

} // namespace blochlab
