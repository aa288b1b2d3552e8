#include "charlab/swe.hpp"

#include <cmath>
#include <sstream>

namespace charlab {

SWState::SWState(double depth, double velocity) : h(depth), u(velocity)
{
    if (!(h > kDepthFloor)) {
        std::ostringstream msg;
        msg << "depth " << h << " violates predicate \"h > 1e-12\"";
        throw DomainError(msg.str());
    }
    if (!std::isfinite(h) || !std::isfinite(u))
        throw DomainError("shallow-water state must be finite");
}

QuasilinearSystem sw_matrix()
{
    QuasilinearSystem system;
    system.n = 2;
    system.name = "shallow-water";
    system.admissibility = "h > 1e-12";
    system.admissible = [](const StateVector& s) {
        return s.size() == 2 && s[0] > kDepthFloor;
    };
    system.matrix = [](const StateVector& s) {
        const double h = s[0], u = s[1];
        Eigen::MatrixXd m(2, 2);
        m << u, h, 1.0, u;
        return m;
    };
    return system;
}

std::pair<double, double> sw_eigenvalues(const SWState& state)
{
    const double c = std::sqrt(state.h);
    return {state.u - c, state.u + c};
}

InvariantPair riemann_invariants(const SWState& state)
{
    const double two_c = 2.0 * std::sqrt(state.h);
    return {state.u - two_c, state.u + two_c};
}

SWState state_from_invariants(const InvariantPair& pair)
{
    const double gap = pair.j_plus - pair.j_minus;
    if (!(gap > 4.0 * kSqrtDepthFloor)) {
        std::ostringstream msg;
        msg << "invariant gap " << gap << " at or below the dry-state floor "
            << 4.0 * kSqrtDepthFloor;
        throw DryStateError(msg.str());
    }
    const double sqrt_h = 0.25 * gap;
    return SWState(sqrt_h * sqrt_h, 0.5 * (pair.j_minus + pair.j_plus));
}

} // namespace charlab
