#pragma once

#include <functional>
#include <vector>

#include "charlab/field.hpp"

namespace charlab {

struct CharSample {
    double t;
    double x;
    double h;
    double u;
    double j; // the matching Riemann invariant
};

/// A characteristic curve traced through a solution field.
///
/// family +1 follows dx/dt = u + sqrt(h) and records J+ = u + 2*sqrt(h);
/// family -1 follows dx/dt = u - sqrt(h) and records J- = u - 2*sqrt(h).
struct CharCurve {
    int family = +1;
    std::vector<CharSample> samples; // t strictly increasing
    double drift = 0.0;              // max |J(t) - J(t0)|
    bool exited = false;             // left the x-domain before reaching t1
};

/// Integrates dx/dt = lambda_family through the interpolated field with the
/// classical 4-stage Runge-Kutta method at fixed step dt, recording the
/// matching invariant at every step. Stops early (flagged) if the curve
/// exits the x-domain.
CharCurve trace_characteristic(const SolutionField& field, int family,
                               double x0, double t0, double t1, double dt);

/// Max CharCurve::drift over seed positions; the headline certification
/// number for Riemann-invariant constancy.
double invariant_drift(const SolutionField& field, int family,
                       const std::vector<double>& seeds,
                       double t0, double t1, double dt);

/// Two-invariant method-of-characteristics solver.
///
/// Advances J+ and J- as advected quantities along their own characteristic
/// speeds (semi-Lagrangian: RK2 foot location, cubic interpolation in x) and
/// reconstructs (h,u) from the invariants each step. Invariants are
/// constantly extrapolated at the domain ends, so initial data must be
/// constant within 5 grid cells of each end. dt is shrunk to divide t_end
/// evenly; the CFL-like restriction dt*max|lambda|/dx <= 1 is enforced.
SolutionField moc_solve(const std::function<double(double)>& h0,
                        const std::function<double(double)>& u0,
                        double x_min, double x_max, double t_end,
                        int nx, double dt);

} // namespace charlab
