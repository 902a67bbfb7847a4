#pragma once

#include <vector>

#include "blochlab/weights.hpp"

namespace blochlab {

/// Monomial-family estimate of the associated weight of a radial base:
///   eval(r) = ( max_{0 <= n <= nmax} r^n / ||g_n||_{H_base^inf} )^-1.
/// The sup over the monomial sub-family under-estimates 1/assoc, so
/// eval(r) >= the true associated weight pointwise, and refining nmax can
/// only lower the estimate. The estimate is truncation-limited once
/// (1-r)*nmax drops below order one; band comparisons should stay at
/// r <= 0.999 for the default nmax.
class AssociatedWeight {
public:
    AssociatedWeight(const Weight& base, int nmax);

    double operator()(double r) const;
    const Weight& base() const { return base_; }
    int nmax() const { return nmax_; }

    /// Wrap as a Weight (id "assoc:<base>:<nmax>") for the ladder objectives.
    Weight as_weight() const;

private:
    Weight base_;
    int nmax_;
    std::vector<double> norms_; // ||g_n||_{H_base^inf}, n = 0..nmax
};

} // namespace blochlab
