#include "charlab/symmetry.hpp"

#include <cmath>
#include <sstream>

namespace charlab {

namespace {

enum class Coord { X, T, H, U };

double fd_partial(const ScalarField4& f, Coord which, double x, double t, double h, double u)
{
    double* target = nullptr;
    double xx = x, tt = t, hh = h, uu = u;
    switch (which) {
    case Coord::X: target = &xx; break;
    case Coord::T: target = &tt; break;
    case Coord::H: target = &hh; break;
    case Coord::U: target = &uu; break;
    }
    const double step = 1e-6 * (1.0 + std::abs(*target));
    const double base = *target;
    *target = base + step;
    const double fp = f.value(xx, tt, hh, uu);
    *target = base - step;
    const double fm = f.value(xx, tt, hh, uu);
    return (fp - fm) / (2.0 * step);
}

double partial(const ScalarField4& f,
               const std::function<double(double, double, double, double)>& analytic,
               Coord which, double x, double t, double h, double u)
{
    if (analytic)
        return analytic(x, t, h, u);
    return fd_partial(f, which, x, t, h, u);
}

std::pair<int, int> interior_node(const SolutionField& field, double x, double t)
{
    const auto [i, j] = field.nearest_node(x, t);
    if (i < 1 || i > field.nx() - 2 || j < 1 || j > field.nt() - 2) {
        std::ostringstream msg;
        msg << "point (" << x << ", " << t << ") maps to a boundary node; central "
            << "differences need one-cell interior margins";
        throw DomainError(msg.str());
    }
    return {i, j};
}

double psi_denominator(const PsiFamily& fam, double t, double h, double u)
{
    if (!(h > 0.0))
        throw DomainError("psi family requires h > 0");
    if (fam.a != +1 && fam.a != -1)
        throw DomainError("psi family constant a must be +1 or -1");
    if (!fam.f)
        throw DomainError("psi family has no f(h,u)");
    return 1.5 * static_cast<double>(fam.a) * t / std::sqrt(h) + fam.f(h, u);
}

} // namespace

Generator v1_generator()
{
    Generator g;
    g.xi.value = [](double, double, double h, double u) { return u + std::sqrt(h); };
    g.phi.value = [](double, double, double, double) { return 0.0; };
    g.psi.value = [](double, double, double, double) { return 0.0; };
    return g;
}

Generator v2_generator()
{
    Generator g;
    g.xi.value = [](double, double, double h, double u) { return u - std::sqrt(h); };
    g.phi.value = [](double, double, double, double) { return 0.0; };
    g.psi.value = [](double, double, double, double) { return 0.0; };
    return g;
}

std::vector<ResidualPair> invariant_surface_residual(
    const Generator& gen, const SolutionField& field,
    const std::vector<std::pair<double, double>>& points)
{
    std::vector<ResidualPair> out;
    out.reserve(points.size());
    const double dx2 = 2.0 * field.dx();
    const double dt2 = 2.0 * field.dt();
    for (const auto& [px, pt] : points) {
        const auto [i, j] = interior_node(field, px, pt);
        const double x = field.x(i), t = field.t(j);
        const double h = field.h(i, j), u = field.u(i, j);
        const double h_x = (field.h(i + 1, j) - field.h(i - 1, j)) / dx2;
        const double h_t = (field.h(i, j + 1) - field.h(i, j - 1)) / dt2;
        const double u_x = (field.u(i + 1, j) - field.u(i - 1, j)) / dx2;
        const double u_t = (field.u(i, j + 1) - field.u(i, j - 1)) / dt2;
        const double xi = gen.xi.value(x, t, h, u);
        const double phi = gen.phi.value(x, t, h, u);
        const double psi = gen.psi.value(x, t, h, u);
        out.push_back({h_t + xi * h_x - phi, u_t + xi * u_x - psi});
    }
    return out;
}

EigenCoefficientReport eigenvalue_coefficient_check(
    const QuasilinearSystem& system,
    const std::function<double(const StateVector&)>& xi,
    const std::vector<StateVector>& samples)
{
    EigenCoefficientReport report;
    report.samples.reserve(samples.size());
    double max_norm2 = 0.0;
    for (const StateVector& state : samples) {
        const Eigen::MatrixXd m = eval_matrix(system, state);
        max_norm2 = std::max(max_norm2, m.squaredNorm());
        const Eigen::MatrixXd shifted =
            m - xi(state) * Eigen::MatrixXd::Identity(m.rows(), m.cols());
        const double det = (m.rows() == 2)
            ? shifted(0, 0) * shifted(1, 1) - shifted(0, 1) * shifted(1, 0)
            : shifted.determinant();
        report.samples.push_back({state, det});
        report.max_abs_det = std::max(report.max_abs_det, std::abs(det));
    }
    report.threshold = 1e-10 * (1.0 + max_norm2);
    report.accepted = report.max_abs_det <= report.threshold;
    return report;
}

std::vector<ResidualPair> det0_determining_residual(const ScalarField4& psi, int k_sign,
                                                    const std::vector<Point4>& points)
{
    if (k_sign != +1 && k_sign != -1)
        throw DomainError("k_sign must be +1 or -1");
    std::vector<ResidualPair> out;
    out.reserve(points.size());
    for (const Point4& p : points) {
        if (!(p.h > 0.0))
            throw DomainError("det0 determining residual requires h > 0");
        const double k = static_cast<double>(k_sign) * std::sqrt(p.h);
        const double v = psi.value(p.x, p.t, p.h, p.u);
        const double p_x = partial(psi, psi.d_x, Coord::X, p.x, p.t, p.h, p.u);
        const double p_t = partial(psi, psi.d_t, Coord::T, p.x, p.t, p.h, p.u);
        const double p_h = partial(psi, psi.d_h, Coord::H, p.x, p.t, p.h, p.u);
        const double p_u = partial(psi, psi.d_u, Coord::U, p.x, p.t, p.h, p.u);
        const double r1 = -p.h * p_h + k * p_u + 0.75 * v;
        const double r2 = p_t + p.u * p_x + v * p_u + k * p_x - k * v * p_h;
        out.push_back({r1, r2});
    }
    return out;
}

ABPair ab_coefficients(const Generator& gen, const Point4& point)
{
    const double xi = gen.xi.value(point.x, point.t, point.h, point.u);
    const double phi = gen.phi.value(point.x, point.t, point.h, point.u);
    const double psi = gen.psi.value(point.x, point.t, point.h, point.u);
    const double shift = xi - point.u;
    const double den = shift * shift - point.h;
    if (std::abs(den) <= kSingularMargin) {
        std::ostringstream msg;
        msg << "(xi-u)^2 - h = " << den << " is singular: characteristic coefficient "
            << "(det = 0 case)";
        throw SingularDenominatorError(msg.str(), den);
    }
    return {(shift * phi + point.h * psi) / den, (phi + shift * psi) / den};
}

double psi_eval(const PsiFamily& fam, double t, double h, double u)
{
    const double den = psi_denominator(fam, t, h, u);
    if (std::abs(den) <= kSingularMargin) {
        std::ostringstream msg;
        msg << "psi family denominator " << den << " within the singularity margin";
        throw SingularDenominatorError(msg.str(), den);
    }
    return -1.0 / den;
}

PsiPartials psi_eval_with_partials(const PsiFamily& fam, double t, double h, double u)
{
    if (!fam.f_h || !fam.f_u)
        throw DomainError("psi family partials require analytic f_h and f_u");
    const double den = psi_denominator(fam, t, h, u);
    if (std::abs(den) <= kSingularMargin)
        throw SingularDenominatorError("psi family denominator within the singularity margin",
                                       den);
    const double a = static_cast<double>(fam.a);
    const double inv2 = 1.0 / (den * den);
    const double sqrt_h = std::sqrt(h);
    PsiPartials p;
    p.value = -1.0 / den;
    p.d_t = 1.5 * a / sqrt_h * inv2;
    p.d_h = (-0.75 * a * t / (h * sqrt_h) + fam.f_h(h, u)) * inv2;
    p.d_u = fam.f_u(h, u) * inv2;
    return p;
}

Generator det_neq0_generator(const PsiFamily& fam)
{
    Generator g;
    g.xi.value = [](double, double, double, double u) { return u; };
    g.phi.value = [fam](double, double t, double h, double u) {
        return static_cast<double>(fam.a) * std::sqrt(h) * psi_eval(fam, t, h, u);
    };
    g.psi.value = [fam](double, double t, double h, double u) {
        return psi_eval(fam, t, h, u);
    };
    return g;
}

std::vector<double> reduced_determining_residual(
    const std::function<PsiPartials(double, double, double)>& psi, int a,
    const std::vector<std::array<double, 3>>& points)
{
    if (a != +1 && a != -1)
        throw DomainError("the reduced determining equation needs a = +1 or -1");
    std::vector<double> out;
    out.reserve(points.size());
    const double av = static_cast<double>(a);
    for (const auto& [t, h, u] : points) {
        if (!(h > 0.0))
            throw DomainError("reduced determining residual requires h > 0");
        const PsiPartials p = psi(t, h, u);
        const double sqrt_h = std::sqrt(h);
        const double coef_a = -p.value;            // A of the ansatz xi = u
        const double coef_b = -av * p.value / sqrt_h;
        const double d_psi = p.d_t - h * coef_b * p.d_h - coef_a * p.d_u;
        out.push_back(d_psi + av * sqrt_h * (coef_a * p.d_h + coef_b * p.d_u)
                      + 1.5 * coef_b * p.value);
    }
    return out;
}

std::vector<double> reduced_determining_residual(
    const PsiFamily& fam, const std::vector<std::array<double, 3>>& points)
{
    return reduced_determining_residual(
        [&fam](double t, double h, double u) { return psi_eval_with_partials(fam, t, h, u); },
        fam.a, points);
}

std::vector<ResidualPair> gradient_relations_residual(
    const Generator& gen, const SolutionField& field,
    const std::vector<std::pair<double, double>>& points)
{
    std::vector<ResidualPair> out;
    out.reserve(points.size());
    const double dx2 = 2.0 * field.dx();
    for (const auto& [px, pt] : points) {
        const auto [i, j] = interior_node(field, px, pt);
        const double x = field.x(i), t = field.t(j);
        const double h = field.h(i, j), u = field.u(i, j);
        const double h_x = (field.h(i + 1, j) - field.h(i - 1, j)) / dx2;
        const double u_x = (field.u(i + 1, j) - field.u(i - 1, j)) / dx2;
        const double phi = gen.phi.value(x, t, h, u);
        const double psi = gen.psi.value(x, t, h, u);
        out.push_back({u_x + phi / h, h_x + psi});
    }
    return out;
}

} // namespace charlab
