#include "charlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "charlab/numerics.hpp"

namespace charlab {

namespace {

struct Flux {
    double f_h;
    double f_q;
};

inline Flux physical_flux(double h, double q)
{
    return {q, q * q / h + 0.5 * h * h};
}

inline Flux rusanov(double h_l, double q_l, double h_r, double q_r)
{
    const Flux fl = physical_flux(h_l, q_l);
    const Flux fr = physical_flux(h_r, q_r);
    const double s = std::max(std::abs(q_l / h_l) + std::sqrt(h_l),
                              std::abs(q_r / h_r) + std::sqrt(h_r));
    return {0.5 * (fl.f_h + fr.f_h) - 0.5 * s * (h_r - h_l),
            0.5 * (fl.f_q + fr.f_q) - 0.5 * s * (q_r - q_l)};
}

double conserved_sum(const std::vector<double>& v, double dx)
{
    KahanSum sum;
    for (double c : v)
        sum.add(c * dx);
    return sum.value();
}

} // namespace

SolutionField fv_solve(const std::function<double(double)>& h0,
                       const std::function<double(double)>& u0,
                       double x_min, double x_max, double t_end,
                       int nx, double cfl, int nt_out, FvStats* stats)
{
    if (nx < 16)
        throw DomainError("fv_solve requires nx >= 16");
    if (!(x_min < x_max) || !(t_end > 0.0))
        throw DomainError("fv_solve requires x_min < x_max and t_end > 0");
    if (!(cfl > 0.0 && cfl < 1.0))
        throw DomainError("fv_solve requires cfl in (0,1)");
    if (nt_out < 2)
        throw DomainError("fv_solve requires nt_out >= 2");

    const double dx = (x_max - x_min) / static_cast<double>(nx);
    const size_t n = static_cast<size_t>(nx);
    std::vector<double> xc(n);
    for (size_t i = 0; i < n; ++i)
        xc[i] = x_min + (static_cast<double>(i) + 0.5) * dx;

    std::vector<double> h(n), q(n);
    for (size_t i = 0; i < n; ++i) {
        h[i] = h0(xc[i]);
        if (!(h[i] > kDepthFloor))
            throw DryStateError("fv_solve initial depth at or below the floor");
        q[i] = h[i] * u0(xc[i]);
    }

    const std::vector<double> t_out = linspace(0.0, t_end, nt_out);
    std::vector<double> h_field(n * t_out.size()), u_field(n * t_out.size());
    auto store = [&](size_t level) {
        for (size_t i = 0; i < n; ++i) {
            h_field[i * t_out.size() + level] = h[i];
            u_field[i * t_out.size() + level] = q[i] / h[i];
        }
    };
    store(0);

    std::vector<double> fh(n + 1), fq(n + 1);
    double t = 0.0;
    for (size_t level = 1; level < t_out.size(); ++level) {
        const double t_target = t_out[level];
        while (t < t_target - 1e-14 * t_end) {
            double s_max = 0.0;
            for (size_t i = 0; i < n; ++i)
                s_max = std::max(s_max, std::abs(q[i] / h[i]) + std::sqrt(h[i]));
            double dt = cfl * dx / s_max;
            dt = std::min(dt, t_target - t);

            // outflow ghosts: interface fluxes with mirrored edge state
            fh[0] = physical_flux(h[0], q[0]).f_h;
            fq[0] = physical_flux(h[0], q[0]).f_q;
            fh[n] = physical_flux(h[n - 1], q[n - 1]).f_h;
            fq[n] = physical_flux(h[n - 1], q[n - 1]).f_q;
            for (size_t i = 0; i + 1 < n; ++i) {
                const Flux f = rusanov(h[i], q[i], h[i + 1], q[i + 1]);
                fh[i + 1] = f.f_h;
                fq[i + 1] = f.f_q;
            }

            const double mass_before = stats ? conserved_sum(h, dx) : 0.0;
            const double mom_before = stats ? conserved_sum(q, dx) : 0.0;

            const double r = dt / dx;
            for (size_t i = 0; i < n; ++i) {
                h[i] -= r * (fh[i + 1] - fh[i]);
                q[i] -= r * (fq[i + 1] - fq[i]);
                if (!std::isfinite(h[i]) || !std::isfinite(q[i]))
                    throw NumericalError("fv_solve produced non-finite values");
                if (!(h[i] > kDepthFloor)) {
                    std::ostringstream msg;
                    msg << "fv_solve dry state at x=" << xc[i] << ", t=" << t + dt;
                    throw DryStateError(msg.str());
                }
            }
            t += dt;

            if (stats) {
                ++stats->steps;
                // boundary fluxes cancel for compact-support data; report the
                // raw per-step change of the conserved sums
                const double dm = std::abs(conserved_sum(h, dx) - mass_before
                                           + dt * (fh[n] - fh[0]));
                const double dq = std::abs(conserved_sum(q, dx) - mom_before
                                           + dt * (fq[n] - fq[0]));
                stats->max_mass_drift = std::max(stats->max_mass_drift, dm);
                stats->max_momentum_drift = std::max(stats->max_momentum_drift, dq);
            }
        }
        store(level);
    }

    return SolutionField(xc, t_out, std::move(h_field), std::move(u_field));
}

} // namespace charlab
