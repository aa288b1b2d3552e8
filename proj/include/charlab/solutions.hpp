#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "charlab/field.hpp"
#include "charlab/symmetry.hpp"

namespace charlab {

/// Depth-profile floor: profiles must stay above this on their domain.
inline constexpr double kProfileFloor = 1e-6;

/// Smooth positive depth profile H(y) with slope H'(y) on a finite y-interval.
class Profile {
public:
    Profile(std::function<double(double)> h, std::function<double(double)> slope,
            double y_min, double y_max);

    /// H(y) = H0 + integral from y0 of dz/f(z), by adaptive quadrature to the
    /// given tolerance; the slope is 1/f exactly. The integration constant
    /// (y0, H0) is explicit because the indefinite integral leaves it free.
    static Profile from_f(std::function<double(double)> f, double y0, double H0,
                          double y_min, double y_max, double tol = 1e-10);

    double operator()(double y) const { return h_(y); }
    double slope(double y) const { return slope_(y); }
    double y_min() const { return y_min_; }
    double y_max() const { return y_max_; }

private:
    std::function<double(double)> h_;
    std::function<double(double)> slope_;
    double y_min_;
    double y_max_;
};

struct BreakingReport {
    double t_break = 0.0; // +infinity when the wave never compresses
    double argmin_y = 0.0;
};

/// Analytic invariant-solution family of the shallow-water system:
///   h = H(y),  u = 2a sqrt(h) + alpha,  y = x - (u + a sqrt(h)) t,
/// so each state rides at speed c(y) = 3a sqrt(H(y)) + alpha. The Riemann
/// invariant u - 2a sqrt(h) equals alpha everywhere. The same field is the
/// det = 0 simple wave (a=+1 matching the u+sqrt(h) branch) and the det != 0
/// family; they differ only in which generator leaves them invariant.
class SimpleWave {
public:
    SimpleWave(int a, double alpha, Profile profile);

    int a() const { return a_; }
    double alpha() const { return alpha_; }
    const Profile& profile() const { return profile_; }
    double depth_min() const { return h_min_; }
    double depth_max() const { return h_max_; }

    /// c(y) = 3a sqrt(H(y)) + alpha.
    double speed_at_phase(double y) const;

    const BreakingReport& breaking() const { return breaking_; }

    /// Solves h = H(x - (3a sqrt(h) + alpha) t) by bracketing on the phase,
    /// bisection, then Newton polish on the depth equation (residual 1e-12).
    /// Throws MultivaluedError at or beyond the fold time and
    /// OutOfDomainError when the phase leaves the profile domain.
    SWState eval(double x, double t) const;

    /// eval at every grid node; requires max(t_grid) < the fold time.
    SolutionField sample(const std::vector<double>& x_grid,
                         const std::vector<double>& t_grid) const;

    bool monotone() const { return monotone_ != 0; }

    /// Inverse of the profile for strictly monotone H; the phase y with
    /// H(y) = h.
    double phase_from_depth(double h) const;

private:
    int a_;
    double alpha_;
    Profile profile_;
    std::vector<double> ys_, hs_, cs_; // dense scan cache over the profile domain
    double h_min_ = 0.0, h_max_ = 0.0;
    int monotone_ = 0; // +1 increasing, -1 decreasing, 0 neither
    BreakingReport breaking_;
};

Profile profile_from_f(std::function<double(double)> f, double y0, double H0,
                       double y_min, double y_max);

SimpleWave make_simple_wave(int a, double alpha, Profile profile);

SWState eval_wave(const SimpleWave& wave, double x, double t);

BreakingReport breaking_time(const SimpleWave& wave);

SolutionField sample_field(const SimpleWave& wave, const std::vector<double>& x_grid,
                           const std::vector<double>& t_grid);

/// Psi family whose f(h,u) = 1/H'(y(h)) on the wave, the choice under which
/// the det != 0 generator leaves the wave invariant. Requires a strictly
/// monotone profile. Values only; the partials f_h, f_u are not provided.
PsiFamily psi_family_from_wave(const SimpleWave& wave);

} // namespace charlab
