#pragma once

#include <utility>

#include "charlab/core.hpp"

namespace charlab {

/// Depths at or below this are rejected: the eigenvalues coalesce at h = 0.
inline constexpr double kDepthFloor = 1e-12;

/// Floor on sqrt(h) in the invariant-to-state inverse map; keeps the
/// characteristic gap resolvable at double precision.
inline constexpr double kSqrtDepthFloor = 1e-6;

/// Nondimensional shallow-water state.
struct SWState {
    double h;
    double u;

    SWState(double depth, double velocity);
};

/// Riemann-invariant pair J-/J+ = u -/+ 2*sqrt(h).
struct InvariantPair {
    double j_minus;
    double j_plus;
};

/// The n=2 shallow-water system with M(h,u) = [[u, h], [1, u]] in the
/// component order U = (h, u), admissible for h > 1e-12.
QuasilinearSystem sw_matrix();

/// Characteristic speeds (u - sqrt(h), u + sqrt(h)).
std::pair<double, double> sw_eigenvalues(const SWState& state);

/// (u - 2*sqrt(h), u + 2*sqrt(h)).
InvariantPair riemann_invariants(const SWState& state);

/// Algebraic inverse of riemann_invariants: u = (j- + j+)/2, sqrt(h) = (j+ - j-)/4.
/// Throws DryStateError when j+ - j- <= 4e-6.
SWState state_from_invariants(const InvariantPair& pair);

inline StateVector to_state_vector(const SWState& s) { return StateVector{s.h, s.u}; }

} // namespace charlab
