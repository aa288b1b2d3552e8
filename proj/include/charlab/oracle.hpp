#pragma once

#include <functional>

#include "charlab/field.hpp"

namespace charlab {

/// Per-run conservation diagnostics for the finite-volume oracle.
struct FvStats {
    long steps = 0;
    double max_mass_drift = 0.0;     // max per-step |d(sum h dx)|
    double max_momentum_drift = 0.0; // max per-step |d(sum q dx)|
};

/// Independent first-order finite-volume reference solver.
///
/// Conservative variables (h, q = h*u), local Lax-Friedrichs (Rusanov)
/// fluxes, forward-Euler in time with dt = cfl*dx/max(|u|+sqrt(h)) chosen per
/// step, outflow (zero-gradient) boundaries. The solution is stored at
/// nt_out uniform output times (the solver steps exactly onto them).
///
/// Per-step drift of the conserved sums is recorded into `stats` when given;
/// for compact-support perturbations on a constant background the drift is
/// pure roundoff.
SolutionField fv_solve(const std::function<double(double)>& h0,
                       const std::function<double(double)>& u0,
                       double x_min, double x_max, double t_end,
                       int nx, double cfl, int nt_out = 101,
                       FvStats* stats = nullptr);

} // namespace charlab
