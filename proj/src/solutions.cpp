#include "charlab/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "charlab/numerics.hpp"

namespace charlab {

namespace {

constexpr int kScanPoints = 16385; // dense cache; breaking_time needs >= 1e4

// 7-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr double kGlNode[7] = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972, 0.7415311855993945, 0.9491079123427585};
constexpr double kGlWeight[7] = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189, 0.4179591836734694,
    0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

double gl7(const std::function<double(double)>& g, double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int k = 0; k < 7; ++k)
        sum += kGlWeight[k] * g(mid + half * kGlNode[k]);
    return half * sum;
}

// Cumulative integral of 1/f built by adaptive panel bisection; immutable
// after construction so profile evaluation stays thread-safe.
struct CumulativeTable {
    std::vector<double> edges;  // ascending panel edges, edges[0] = y_min
    std::vector<double> prefix; // integral from y_min to each edge
    std::function<double(double)> integrand;

    double eval(double y) const
    {
        if (y < edges.front() - 1e-12 || y > edges.back() + 1e-12)
            throw OutOfDomainError("profile evaluation outside the y domain");
        y = std::clamp(y, edges.front(), edges.back());
        const auto it = std::upper_bound(edges.begin(), edges.end(), y);
        const size_t k = static_cast<size_t>(std::max<ptrdiff_t>(it - edges.begin() - 1, 0));
        return prefix[k] + gl7(integrand, edges[k], y);
    }
};

void build_panels(const std::function<double(double)>& g, double lo, double hi,
                  double tol, int depth, std::vector<std::pair<double, double>>& panels)
{
    const double whole = gl7(g, lo, hi);
    const double mid = 0.5 * (lo + hi);
    const double left = gl7(g, lo, mid);
    const double right = gl7(g, mid, hi);
    if (std::abs(whole - (left + right)) <= tol) {
        panels.emplace_back(mid, left);
        panels.emplace_back(hi, right);
        return;
    }
    if (depth >= 40)
        throw NumericalError("profile quadrature did not converge; f may be "
                             "nearly singular in the domain");
    build_panels(g, lo, mid, 0.5 * tol, depth + 1, panels);
    build_panels(g, mid, hi, 0.5 * tol, depth + 1, panels);
}

} // namespace

Profile::Profile(std::function<double(double)> h, std::function<double(double)> slope,
                 double y_min, double y_max)
    : h_(std::move(h)), slope_(std::move(slope)), y_min_(y_min), y_max_(y_max)
{
    if (!h_ || !slope_)
        throw DomainError("profile requires both H and H'");
    if (!(y_min_ < y_max_))
        throw DomainError("profile requires y_min < y_max");
}

Profile Profile::from_f(std::function<double(double)> f, double y0, double H0,
                        double y_min, double y_max, double tol)
{
    if (!(y_min < y_max) || y0 < y_min || y0 > y_max)
        throw DomainError("from_f requires y_min < y_max with y0 inside");
    if (!(H0 > kProfileFloor))
        throw DryStateError("from_f initial depth H0 at or below the profile floor");

    auto guarded_f = std::make_shared<std::function<double(double)>>(std::move(f));
    auto integrand = [guarded_f](double z) {
        const double v = (*guarded_f)(z);
        if (!std::isfinite(v) || std::abs(v) < 1e-12) {
            std::ostringstream msg;
            msg << "f(" << z << ") = " << v << " vanishes in the profile domain";
            throw DomainError(msg.str());
        }
        return 1.0 / v;
    };

    auto table = std::make_shared<CumulativeTable>();
    table->integrand = integrand;
    std::vector<std::pair<double, double>> panels;
    build_panels(integrand, y_min, y_max, tol, 0, panels);
    table->edges.reserve(panels.size() + 1);
    table->prefix.reserve(panels.size() + 1);
    table->edges.push_back(y_min);
    table->prefix.push_back(0.0);
    KahanSum running;
    for (const auto& [edge, piece] : panels) {
        running.add(piece);
        table->edges.push_back(edge);
        table->prefix.push_back(running.value());
    }

    const double base = table->eval(y0);
    auto depth = [table, H0, base](double y) { return H0 + table->eval(y) - base; };

    // the floor must hold across the whole domain, not just where callers look
    for (size_t k = 0; k < table->edges.size(); ++k) {
        const double y = table->edges[k];
        const double hv = depth(y);
        if (!(hv > kProfileFloor)) {
            std::ostringstream msg;
            msg << "profile depth H(" << y << ") = " << hv << " drops below the floor "
                << kProfileFloor;
            throw DryStateError(msg.str());
        }
    }

    auto slope = [integrand](double y) { return integrand(y); };
    return Profile(depth, slope, y_min, y_max);
}

SimpleWave::SimpleWave(int a, double alpha, Profile profile)
    : a_(a), alpha_(alpha), profile_(std::move(profile))
{
    if (a_ != +1 && a_ != -1)
        throw DomainError("wave family constant a must be +1 or -1");

    ys_ = linspace(profile_.y_min(), profile_.y_max(), kScanPoints);
    hs_.resize(ys_.size());
    cs_.resize(ys_.size());
    h_min_ = std::numeric_limits<double>::infinity();
    h_max_ = -h_min_;
    const double av = static_cast<double>(a_);

    double max_compress = -std::numeric_limits<double>::infinity();
    size_t argmax = 0;
    bool increasing = true, decreasing = true;
    for (size_t i = 0; i < ys_.size(); ++i) {
        const double hv = profile_(ys_[i]);
        if (!std::isfinite(hv) || !(hv > kProfileFloor)) {
            std::ostringstream msg;
            msg << "profile depth H(" << ys_[i] << ") = " << hv
                << " violates the floor " << kProfileFloor;
            throw DryStateError(msg.str());
        }
        hs_[i] = hv;
        cs_[i] = 3.0 * av * std::sqrt(hv) + alpha_;
        h_min_ = std::min(h_min_, hv);
        h_max_ = std::max(h_max_, hv);
        if (i > 0) {
            increasing = increasing && hs_[i] > hs_[i - 1];
            decreasing = decreasing && hs_[i] < hs_[i - 1];
        }
        const double compress = -1.5 * av * profile_.slope(ys_[i]) / std::sqrt(hv);
        if (compress > max_compress) {
            max_compress = compress;
            argmax = i;
        }
    }
    monotone_ = increasing ? +1 : (decreasing ? -1 : 0);

    // golden-section refinement of the fold location around the scan argmax
    auto compress_at = [&](double y) {
        return -1.5 * av * profile_.slope(y) / std::sqrt(profile_(y));
    };
    double lo = ys_[argmax > 0 ? argmax - 1 : 0];
    double hi = ys_[std::min(argmax + 1, ys_.size() - 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = compress_at(c1), f2 = compress_at(c2);
    for (int it = 0; it < 80 && hi - lo > 1e-13 * (1.0 + std::abs(lo)); ++it) {
        if (f1 < f2) {
            lo = c1;
            c1 = c2;
            f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = compress_at(c2);
        } else {
            hi = c2;
            c2 = c1;
            f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = compress_at(c1);
        }
    }
    const double y_star = 0.5 * (lo + hi);
    max_compress = std::max(max_compress, compress_at(y_star));
    if (max_compress > 0.0) {
        breaking_.t_break = 1.0 / max_compress;
        breaking_.argmin_y = y_star;
    } else {
        breaking_.t_break = std::numeric_limits<double>::infinity();
        breaking_.argmin_y = y_star;
    }
}

double SimpleWave::speed_at_phase(double y) const
{
    return 3.0 * static_cast<double>(a_) * std::sqrt(profile_(y)) + alpha_;
}

SWState SimpleWave::eval(double x, double t) const
{
    if (!(t >= 0.0))
        throw DomainError("eval_wave requires t >= 0");
    if (t >= breaking_.t_break) {
        std::ostringstream msg;
        msg << "wave is multivalued at t = " << t << " (fold time "
            << breaking_.t_break << ")";
        throw MultivaluedError(msg.str());
    }

    // pre-breaking G(y) = y + c(y) t - x is strictly increasing in y
    auto g_phase = [&](double y) { return y + speed_at_phase(y) * t - x; };
    const double g_lo = ys_.front() + cs_.front() * t - x;
    const double g_hi = ys_.back() + cs_.back() * t - x;
    if (g_lo > 0.0 || g_hi < 0.0) {
        std::ostringstream msg;
        msg << "phase for (x,t) = (" << x << ", " << t << ") falls outside the profile "
            << "domain [" << ys_.front() << ", " << ys_.back() << "]";
        throw OutOfDomainError(msg.str());
    }
    size_t lo_i = 0, hi_i = ys_.size() - 1;
    while (hi_i - lo_i > 1) {
        const size_t mid = (lo_i + hi_i) / 2;
        if (ys_[mid] + cs_[mid] * t - x <= 0.0)
            lo_i = mid;
        else
            hi_i = mid;
    }

    double y_lo = ys_[lo_i], y_hi = ys_[hi_i];
    while (y_hi - y_lo > 1e-8) {
        const double mid = 0.5 * (y_lo + y_hi);
        if (g_phase(mid) <= 0.0)
            y_lo = mid;
        else
            y_hi = mid;
    }

    // Newton polish on the depth equation g(h) = h - H(x - c(h) t)
    const double av = static_cast<double>(a_);
    auto depth_residual = [&](double h) {
        return h - profile_(std::clamp(x - (3.0 * av * std::sqrt(h) + alpha_) * t,
                                       ys_.front(), ys_.back()));
    };
    double h = profile_(0.5 * (y_lo + y_hi));
    double res = depth_residual(h);
    for (int it = 0; it < 5 && std::abs(res) > 1e-13 * (1.0 + std::abs(h)); ++it) {
        const double y = std::clamp(x - (3.0 * av * std::sqrt(h) + alpha_) * t,
                                    ys_.front(), ys_.back());
        const double slope = profile_.slope(y);
        const double dg = 1.0 + slope * 1.5 * av * t / std::sqrt(h);
        if (std::abs(dg) < 1e-12)
            break;
        const double h_next = h - res / dg;
        if (!(h_next > kProfileFloor))
            break;
        const double res_next = depth_residual(h_next);
        if (std::abs(res_next) >= std::abs(res))
            break;
        h = h_next;
        res = res_next;
    }
    if (std::abs(res) > 1e-12 * (1.0 + std::abs(h))) {
        // fall back to exhaustive phase bisection
        while (y_hi - y_lo > 4e-16 * (1.0 + std::abs(y_lo))) {
            const double mid = 0.5 * (y_lo + y_hi);
            if (g_phase(mid) <= 0.0)
                y_lo = mid;
            else
                y_hi = mid;
        }
        h = profile_(0.5 * (y_lo + y_hi));
        res = depth_residual(h);
        if (std::abs(res) > 1e-11 * (1.0 + std::abs(h))) {
            std::ostringstream msg;
            msg << "implicit wave equation not solved to tolerance at (x,t) = (" << x
                << ", " << t << "): residual " << res;
            throw NumericalError(msg.str());
        }
    }
    return SWState(h, 2.0 * av * std::sqrt(h) + alpha_);
}

SolutionField SimpleWave::sample(const std::vector<double>& x_grid,
                                 const std::vector<double>& t_grid) const
{
    if (t_grid.empty() || x_grid.empty())
        throw DomainError("sample_field requires nonempty grids");
    const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    if (t_max >= breaking_.t_break) {
        std::ostringstream msg;
        msg << "sample grid reaches t = " << t_max << ", at or beyond the fold time "
            << breaking_.t_break;
        throw MultivaluedError(msg.str());
    }
    std::vector<double> h(x_grid.size() * t_grid.size()), u(h.size());
    size_t k = 0;
    for (double xv : x_grid)
        for (double tv : t_grid) {
            const SWState s = eval(xv, tv);
            h[k] = s.h;
            u[k] = s.u;
            ++k;
        }
    return SolutionField(x_grid, t_grid, std::move(h), std::move(u));
}

double SimpleWave::phase_from_depth(double h) const
{
    if (monotone_ == 0)
        throw DomainError("phase_from_depth requires a strictly monotone profile");
    if (h < h_min_ - 1e-12 || h > h_max_ + 1e-12) {
        std::ostringstream msg;
        msg << "depth " << h << " outside the profile range [" << h_min_ << ", "
            << h_max_ << "]";
        throw OutOfDomainError(msg.str());
    }
    // bracket on the scan cache, then Newton with the analytic slope
    size_t lo = 0, hi = ys_.size() - 1;
    const bool inc = monotone_ > 0;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        if ((hs_[mid] <= h) == inc)
            lo = mid;
        else
            hi = mid;
    }
    double y = 0.5 * (ys_[lo] + ys_[hi]);
    for (int it = 0; it < 60; ++it) {
        const double r = profile_(y) - h;
        if (std::abs(r) <= 1e-13 * (1.0 + std::abs(h)))
            break;
        const double s = profile_.slope(y);
        if (std::abs(s) < 1e-14)
            break;
        y = std::clamp(y - r / s, ys_[lo], ys_[hi]);
    }
    return y;
}

Profile profile_from_f(std::function<double(double)> f, double y0, double H0,
                       double y_min, double y_max)
{
    return Profile::from_f(std::move(f), y0, H0, y_min, y_max);
}

SimpleWave make_simple_wave(int a, double alpha, Profile profile)
{
    return SimpleWave(a, alpha, std::move(profile));
}

SWState eval_wave(const SimpleWave& wave, double x, double t)
{
    return wave.eval(x, t);
}

BreakingReport breaking_time(const SimpleWave& wave)
{
    return wave.breaking();
}

SolutionField sample_field(const SimpleWave& wave, const std::vector<double>& x_grid,
                           const std::vector<double>& t_grid)
{
    return wave.sample(x_grid, t_grid);
}

PsiFamily psi_family_from_wave(const SimpleWave& wave)
{
    if (!wave.monotone())
        throw DomainError("psi_family_from_wave requires a strictly monotone profile");
    auto shared = std::make_shared<SimpleWave>(wave);
    PsiFamily fam;
    fam.a = wave.a();
    fam.f = [shared](double h, double) {
        return 1.0 / shared->profile().slope(shared->phase_from_depth(h));
    };
    return fam;
}

} // namespace charlab
