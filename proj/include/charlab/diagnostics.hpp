#pragma once

#include <utility>
#include <vector>

#include "charlab/field.hpp"

namespace charlab {

/// L1 norm of the depth difference between two fields at time t, integrated
/// by the trapezoid rule over the overlap of their x-ranges on n_eval points
/// (default: 4x the finer grid).
double l1_depth_difference(const SolutionField& a, const SolutionField& b, double t,
                           int n_eval = 0);

struct PdeResidual {
    double max_continuity = 0.0; // max |h_t + u h_x + h u_x| over interior nodes
    double max_momentum = 0.0;   // max |u_t + u u_x + h_x|
};

/// Central-difference residuals of the shallow-water equations over all
/// interior grid nodes.
PdeResidual max_pde_residual(const SolutionField& field);

/// (x,t) coordinates of every interior grid node.
std::vector<std::pair<double, double>> interior_points(const SolutionField& field);

} // namespace charlab
