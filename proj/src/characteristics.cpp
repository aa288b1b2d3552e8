#include "charlab/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "charlab/numerics.hpp"

namespace charlab {

namespace {

double lambda_at(const SolutionField& field, int family, double x, double t)
{
    const SWState s = field.at(x, t);
    return s.u + static_cast<double>(family) * std::sqrt(s.h);
}

void require_family(int family)
{
    if (family != +1 && family != -1)
        throw DomainError("characteristic family must be +1 or -1");
}

// 4-point Lagrange interpolation on a uniform grid with clamped stencil.
// Values outside [x_min, x_max] use the nearest end value (constant
// extrapolation of invariants).
double cubic_interp(const std::vector<double>& v, double x_min, double dx, double x)
{
    const int n = static_cast<int>(v.size());
    double s = (x - x_min) / dx;
    if (s <= 0.0)
        return v.front();
    if (s >= static_cast<double>(n - 1))
        return v.back();
    int base = static_cast<int>(s) - 1;
    base = std::clamp(base, 0, n - 4);
    const double xi = s - static_cast<double>(base);
    const double w0 = -(xi - 1.0) * (xi - 2.0) * (xi - 3.0) / 6.0;
    const double w1 = xi * (xi - 2.0) * (xi - 3.0) / 2.0;
    const double w2 = -xi * (xi - 1.0) * (xi - 3.0) / 2.0;
    const double w3 = xi * (xi - 1.0) * (xi - 2.0) / 6.0;
    const size_t b = static_cast<size_t>(base);
    return w0 * v[b] + w1 * v[b + 1] + w2 * v[b + 2] + w3 * v[b + 3];
}

} // namespace

CharCurve trace_characteristic(const SolutionField& field, int family,
                               double x0, double t0, double t1, double dt)
{
    require_family(family);
    if (!(dt > 0.0))
        throw DomainError("trace step dt must be positive");
    if (!(t1 > t0))
        throw DomainError("trace requires t1 > t0");
    if (t1 > field.t_max() * (1.0 + 1e-12) && t1 > field.t_max() + 1e-15)
        throw DomainError("trace end time t1 exceeds the field's time grid");
    if (!field.contains(x0, t0))
        throw OutOfDomainError("trace start point outside the field domain");
    const double t_end = std::min(t1, field.t_max());

    CharCurve curve;
    curve.family = family;

    const double fam = static_cast<double>(family);
    auto record = [&](double x, double t) {
        const SWState s = field.at(x, t);
        curve.samples.push_back({t, x, s.h, s.u, s.u + fam * 2.0 * std::sqrt(s.h)});
    };
    record(x0, t0);

    const double span = t_end - t0;
    long n_steps = std::lround(std::ceil(span / dt - 1e-9));
    n_steps = std::max<long>(n_steps, 1);

    double x = x0;
    double t = t0;
    for (long k = 0; k < n_steps; ++k) {
        const double t_next = (k + 1 == n_steps) ? t_end : t0 + dt * static_cast<double>(k + 1);
        const double step = t_next - t;
        bool ok = true;
        double x_next = x;
        try {
            const double k1 = lambda_at(field, family, x, t);
            const double k2 = lambda_at(field, family, x + 0.5 * step * k1, t + 0.5 * step);
            const double k3 = lambda_at(field, family, x + 0.5 * step * k2, t + 0.5 * step);
            const double k4 = lambda_at(field, family, x + step * k3, t_next);
            x_next = x + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            ok = field.contains(x_next, t_next);
        } catch (const OutOfDomainError&) {
            ok = false;
        }
        if (!ok) {
            curve.exited = true;
            break;
        }
        x = x_next;
        t = t_next;
        record(x, t);
    }

    const double j0 = curve.samples.front().j;
    for (const CharSample& s : curve.samples)
        curve.drift = std::max(curve.drift, std::abs(s.j - j0));
    return curve;
}

double invariant_drift(const SolutionField& field, int family,
                       const std::vector<double>& seeds,
                       double t0, double t1, double dt)
{
    if (seeds.empty())
        throw DomainError("invariant_drift requires at least one seed");
    double worst = 0.0;
    for (double x0 : seeds)
        worst = std::max(worst, trace_characteristic(field, family, x0, t0, t1, dt).drift);
    return worst;
}

SolutionField moc_solve(const std::function<double(double)>& h0,
                        const std::function<double(double)>& u0,
                        double x_min, double x_max, double t_end,
                        int nx, double dt)
{
    if (nx < 16)
        throw DomainError("moc_solve requires nx >= 16");
    if (!(x_min < x_max))
        throw DomainError("moc_solve requires x_min < x_max");
    if (!(t_end > 0.0) || !(dt > 0.0))
        throw DomainError("moc_solve requires positive t_end and dt");

    const std::vector<double> x = linspace(x_min, x_max, nx);
    const double dx = x[1] - x[0];
    const size_t n = static_cast<size_t>(nx);

    std::vector<double> jp(n), jm(n);
    for (size_t i = 0; i < n; ++i) {
        const InvariantPair inv = riemann_invariants(SWState(h0(x[i]), u0(x[i])));
        jm[i] = inv.j_minus;
        jp[i] = inv.j_plus;
    }

    // constant-extrapolation boundaries are only valid when the initial data
    // is already constant near both ends
    for (int e = 0; e <= 5; ++e) {
        const size_t l = static_cast<size_t>(e);
        const size_t r = n - 1 - l;
        const double tol_p = 1e-10 * (1.0 + std::abs(jp[0]) + std::abs(jp[n - 1]));
        const double tol_m = 1e-10 * (1.0 + std::abs(jm[0]) + std::abs(jm[n - 1]));
        if (std::abs(jp[l] - jp[0]) > tol_p || std::abs(jm[l] - jm[0]) > tol_m ||
            std::abs(jp[r] - jp[n - 1]) > tol_p || std::abs(jm[r] - jm[n - 1]) > tol_m)
            throw DomainError("moc_solve initial data must be constant within 5 cells "
                              "of each domain end");
    }

    long n_steps = std::lround(std::ceil(t_end / dt - 1e-9));
    n_steps = std::max<long>(n_steps, 1);
    const double dt_eff = t_end / static_cast<double>(n_steps);
    const std::vector<double> t = linspace(0.0, t_end, static_cast<int>(n_steps) + 1);

    std::vector<double> h_out(n * t.size()), u_out(n * t.size());
    auto store_level = [&](size_t level) {
        for (size_t i = 0; i < n; ++i) {
            const double gap = jp[i] - jm[i];
            if (!(gap > 4.0 * kSqrtDepthFloor)) {
                std::ostringstream msg;
                msg << "dry state at x=" << x[i] << ", t=" << t[level];
                throw DryStateError(msg.str());
            }
            const double sqrt_h = 0.25 * gap;
            h_out[i * t.size() + level] = sqrt_h * sqrt_h;
            u_out[i * t.size() + level] = 0.5 * (jm[i] + jp[i]);
        }
    };
    store_level(0);

    std::vector<double> lam_p(n), lam_m(n), jp_new(n), jm_new(n);
    for (long step = 0; step < n_steps; ++step) {
        double max_speed = 0.0;
        for (size_t i = 0; i < n; ++i) {
            lam_p[i] = 0.25 * (3.0 * jp[i] + jm[i]);
            lam_m[i] = 0.25 * (jp[i] + 3.0 * jm[i]);
            max_speed = std::max(max_speed, std::max(std::abs(lam_p[i]), std::abs(lam_m[i])));
        }
        if (dt_eff * max_speed / dx > 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "CFL violation: dt*max|lambda|/dx = " << dt_eff * max_speed / dx;
            throw CflError(msg.str());
        }

        auto advect = [&](const std::vector<double>& j, const std::vector<double>& lam,
                          std::vector<double>& out) {
            for (size_t i = 0; i < n; ++i) {
                // RK2 foot location backwards through the frozen speed field
                const double x_mid = x[i] - 0.5 * dt_eff * lam[i];
                const double lam_mid = cubic_interp(lam, x_min, dx, x_mid);
                const double x_foot = x[i] - dt_eff * lam_mid;
                out[i] = cubic_interp(j, x_min, dx, x_foot);
            }
        };
        advect(jp, lam_p, jp_new);
        advect(jm, lam_m, jm_new);
        jp.swap(jp_new);
        jm.swap(jm_new);

        store_level(static_cast<size_t>(step) + 1);

        // gradient catastrophe guard
        double max_hx = 0.0;
        for (size_t i = 1; i + 1 < n; ++i) {
            const size_t col = static_cast<size_t>(step) + 1;
            const double hx = (h_out[(i + 1) * t.size() + col] - h_out[(i - 1) * t.size() + col])
                              / (2.0 * dx);
            max_hx = std::max(max_hx, std::abs(hx));
        }
        if (!std::isfinite(max_hx))
            throw NumericalError("moc_solve produced non-finite values");
        if (max_hx > 1e6) {
            std::ostringstream msg;
            msg << "gradient blow-up detected at t=" << t[static_cast<size_t>(step) + 1]
                << " (max |h_x| = " << max_hx << ")";
            throw BlowupError(msg.str());
        }
    }

    return SolutionField(x, t, std::move(h_out), std::move(u_out));
}

} // namespace charlab
