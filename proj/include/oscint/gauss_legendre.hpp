#pragma once

#include <vector>

namespace oscint {

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Newton iteration on P_n from the Tricomi initial guesses. Results for a
/// given n are computed once and cached.
const GaussLegendre& gauss_legendre(int n);

}  // namespace oscint
