#pragma once

#include <array>
#include <functional>
#include <vector>

#include "charlab/core.hpp"
#include "charlab/field.hpp"

namespace charlab {

/// Margin below which denominators count as singular.
inline constexpr double kSingularMargin = 1e-10;

/// Scalar function of (x,t,h,u) with optional analytic partials. Missing
/// partials fall back to central differences with step 1e-6*(1+|coordinate|).
struct ScalarField4 {
    std::function<double(double x, double t, double h, double u)> value;
    std::function<double(double, double, double, double)> d_x;
    std::function<double(double, double, double, double)> d_t;
    std::function<double(double, double, double, double)> d_h;
    std::function<double(double, double, double, double)> d_u;
};

/// Infinitesimal generator dt + xi*dx + phi*dh + psi*du (the dt coefficient
/// is normalized to 1).
struct Generator {
    ScalarField4 xi;
    ScalarField4 phi;
    ScalarField4 psi;
};

/// dt + (u + sqrt(h)) dx.
Generator v1_generator();
/// dt + (u - sqrt(h)) dx.
Generator v2_generator();

struct Point4 {
    double x;
    double t;
    double h;
    double u;
};

struct ResidualPair {
    double r1;
    double r2;
};

/// Invariant-surface residuals (h_t + xi h_x - phi, u_t + xi u_x - psi) at
/// the grid node nearest each point, with second-order central differences
/// on the field grid. Points whose nearest node touches the grid boundary
/// are rejected.
std::vector<ResidualPair> invariant_surface_residual(
    const Generator& gen, const SolutionField& field,
    const std::vector<std::pair<double, double>>& points);

struct EigenCoefficientSample {
    StateVector state;
    double det; // det(M(U) - xi(U) E)
};

struct EigenCoefficientReport {
    std::vector<EigenCoefficientSample> samples;
    double max_abs_det = 0.0;
    double threshold = 0.0; // 1e-10 * (1 + max ||M||^2)
    bool accepted = false;  // max_abs_det <= threshold
};

/// Checks whether a candidate dx-coefficient is an eigenvalue of M on every
/// sample: for a generator dt + xi dx the substituted system degenerates to
/// (M - xi E) U_x = 0, so xi must make the determinant vanish.
EigenCoefficientReport eigenvalue_coefficient_check(
    const QuasilinearSystem& system,
    const std::function<double(const StateVector&)>& xi,
    const std::vector<StateVector>& samples);

/// Determining-equation residuals of the det(M - xi E) = 0 branch, where
/// (xi, phi) = (u - k, k*psi) with k = k_sign*sqrt(h):
///   r1 = -h psi_h + k psi_u + (3/4) psi
///   r2 = psi_t + u psi_x + psi psi_u + k psi_x - k psi psi_h
/// k_sign = -1 selects the u + sqrt(h) branch, k_sign = +1 the u - sqrt(h)
/// branch.
std::vector<ResidualPair> det0_determining_residual(const ScalarField4& psi, int k_sign,
                                                    const std::vector<Point4>& points);

struct ABPair {
    double a;
    double b;
};

/// Coefficients of the det != 0 determining equations,
///   A = ((xi-u) phi + h psi) / ((xi-u)^2 - h)
///   B = (phi + (xi-u) psi) / ((xi-u)^2 - h).
/// Throws SingularDenominatorError when (xi-u)^2 = h (the det = 0 case).
ABPair ab_coefficients(const Generator& gen, const Point4& point);

/// The one-parameter family psi = -1 / (3at/(2 sqrt h) + f(h,u)) solving the
/// reduced det != 0 determining equation for arbitrary f. The partials f_h,
/// f_u are needed only by reduced_determining_residual.
struct PsiFamily {
    int a = +1; // +1 or -1
    std::function<double(double h, double u)> f;
    std::function<double(double h, double u)> f_h;
    std::function<double(double h, double u)> f_u;
};

/// psi of the family; throws SingularDenominatorError (carrying the
/// denominator) when |3at/(2 sqrt h) + f| <= 1e-10.
double psi_eval(const PsiFamily& fam, double t, double h, double u);

struct PsiPartials {
    double value;
    double d_t;
    double d_h;
    double d_u;
};

/// psi with analytic partials of the closed form.
PsiPartials psi_eval_with_partials(const PsiFamily& fam, double t, double h, double u);

/// Generator dt + u dx + a sqrt(h) psi dh + psi du built on the family.
Generator det_neq0_generator(const PsiFamily& fam);

/// Left side of the reduced determining equation
///   D psi + a sqrt(h) (A psi_h + B psi_u) + (3/2) B psi,
///   D = dt - h B dh - A du,
/// with A, B from the ansatz xi = u, phi = a sqrt(h) psi, evaluated with
/// analytic partials at each (t, h, u) point. psi_x terms vanish because the
/// ansatz carries no x dependence.
std::vector<double> reduced_determining_residual(
    const PsiFamily& fam, const std::vector<std::array<double, 3>>& points);

/// Same residual for an arbitrary partials provider (negative controls).
std::vector<double> reduced_determining_residual(
    const std::function<PsiPartials(double t, double h, double u)>& psi, int a,
    const std::vector<std::array<double, 3>>& points);

/// Residuals (u_x + phi/h, h_x + psi) of the gradient relations of the
/// det != 0 branch, with central-difference field gradients at the nearest
/// interior grid nodes.
std::vector<ResidualPair> gradient_relations_residual(
    const Generator& gen, const SolutionField& field,
    const std::vector<std::pair<double, double>>& points);

} // namespace charlab
