#pragma once

// Smooth partition of unity {g(x - m)} on the real line.
//
// h(t) = exp(-1/t) for t > 0, 0 otherwise
// phi(x) = h(x) / (h(x) + h(1 - x))        smooth step, 0 on x <= 0, 1 on x >= 1
// g(x) = phi(x + 1) - phi(x) = phi(1 - |x|)  bump with supp g = [-1, 1]
//
// g(x) + g(x - 1) = 1 on [0, 1], hence sum_m g(x - m) = 1 everywhere.

#include <span>
#include <vector>

#include "oscint/jet.hpp"

namespace oscint {

double smooth_step(double x);
Jet smooth_step(const Jet& x);

double bump(double x);
Jet bump(const Jet& x);

/// (g(x), g'(x), ..., g^(order)(x)); all zeros for |x| >= 1.
std::vector<double> bump_jet(double x, int order);

/// g_m(x) = g(x - m).
inline double shifted_bump(double x, int m) { return bump(x - m); }

/// max over points of |sum_{m : |x-m| < 1} g(x - m) - 1|.
double partition_residual(std::span<const double> points);

/// ||g||_{C^s(R)} estimated on a dense grid over [-1, 1]; cached per s.
double bump_cs_norm(int s);

}  // namespace oscint
