#pragma once

#include <functional>

#include "blochlab/weights.hpp"

namespace blochlab {

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section maximization on [a, b]; returns the best point actually
/// evaluated (endpoints included), so the result never under-reports a
/// bracketed grid value.
Extremum golden_max(const std::function<double(double)>& f, double a, double b,
                    double xtol = 1e-8);

/// Sup of f over [0, r_max] via a boundary-clustered scan followed by a
/// golden-section polish of every local maximum bracket.
Extremum radial_sup(const std::function<double(double)>& f,
                    std::size_t n_intervals = 4096, double r_max = kRadiusClamp);

/// sup_{r in [0,1)} r^n v(r) = ||g_n||_{H_v^inf} for the monomial g_n.
/// Memoized per (weight id, n); ids are assumed to identify the weight.
double monomial_growth_norm(const Weight& v, int n);

} // namespace blochlab
