#include "charlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "charlab/numerics.hpp"

namespace charlab {

double l1_depth_difference(const SolutionField& a, const SolutionField& b, double t,
                           int n_eval)
{
    const double lo = std::max(a.x_min(), b.x_min());
    const double hi = std::min(a.x_max(), b.x_max());
    if (!(lo < hi))
        throw DomainError("fields do not overlap in x");
    if (n_eval <= 1)
        n_eval = 4 * std::max(a.nx(), b.nx());
    const std::vector<double> xs = linspace(lo, hi, n_eval);
    const double dx = xs[1] - xs[0];
    KahanSum sum;
    for (size_t k = 0; k < xs.size(); ++k) {
        const double w = (k == 0 || k + 1 == xs.size()) ? 0.5 : 1.0;
        sum.add(w * std::abs(a.at(xs[k], t).h - b.at(xs[k], t).h) * dx);
    }
    return sum.value();
}

PdeResidual max_pde_residual(const SolutionField& field)
{
    PdeResidual r;
    const double dx2 = 2.0 * field.dx();
    const double dt2 = 2.0 * field.dt();
    for (int i = 1; i + 1 < field.nx(); ++i)
        for (int j = 1; j + 1 < field.nt(); ++j) {
            const double h = field.h(i, j), u = field.u(i, j);
            const double h_x = (field.h(i + 1, j) - field.h(i - 1, j)) / dx2;
            const double h_t = (field.h(i, j + 1) - field.h(i, j - 1)) / dt2;
            const double u_x = (field.u(i + 1, j) - field.u(i - 1, j)) / dx2;
            const double u_t = (field.u(i, j + 1) - field.u(i, j - 1)) / dt2;
            r.max_continuity = std::max(r.max_continuity, std::abs(h_t + u * h_x + h * u_x));
            r.max_momentum = std::max(r.max_momentum, std::abs(u_t + u * u_x + h_x));
        }
    return r;
}

std::vector<std::pair<double, double>> interior_points(const SolutionField& field)
{
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<size_t>(std::max(field.nx() - 2, 0)) *
                static_cast<size_t>(std::max(field.nt() - 2, 0)));
    for (int i = 1; i + 1 < field.nx(); ++i)
        for (int j = 1; j + 1 < field.nt(); ++j)
            pts.emplace_back(field.x(i), field.t(j));
    return pts;
}

} // namespace charlab
