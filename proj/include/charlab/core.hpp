#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

/// Nondimensional state of an n-component system.
struct StateVector {
    std::vector<double> components;

    StateVector() = default;
    StateVector(std::initializer_list<double> c) : components(c) {}
    explicit StateVector(std::vector<double> c) : components(std::move(c)) {}

    int size() const { return static_cast<int>(components.size()); }
    double operator[](int i) const { return components[static_cast<size_t>(i)]; }
};

/// A 1-D quasilinear system U_t + M(U) U_x = 0.
///
/// `matrix` must return a finite n-by-n matrix for every state accepted by
/// `admissible`; `admissibility` is the human-readable predicate quoted in
/// domain errors.
struct QuasilinearSystem {
    int n = 0;
    std::string name;
    std::function<Eigen::MatrixXd(const StateVector&)> matrix;
    std::function<bool(const StateVector&)> admissible;
    std::string admissibility;
};

/// Real eigendecomposition of a coefficient matrix.
///
/// Eigenvalues sorted ascending; eigenvectors unit-norm with the first
/// nonzero component positive, paired with eigenvalues by index.
struct EigenStructure {
    std::vector<double> eigenvalues;
    std::vector<Eigen::VectorXd> right_eigenvectors;
    bool strictly_hyperbolic = false;
};

/// Evaluates M(U). Throws DomainError naming the violated predicate when the
/// state is inadmissible, or when the state length does not match the system.
Eigen::MatrixXd eval_matrix(const QuasilinearSystem& system, const StateVector& state);

/// Eigenvalues and right eigenvectors of a real matrix.
///
/// n=2 uses the closed-form quadratic; n>2 a standard numeric eigensolver.
/// Throws NonHyperbolicError when a genuinely complex pair appears.
EigenStructure eigen_structure(const Eigen::MatrixXd& m);

struct HyperbolicitySample {
    StateVector state;
    bool admissible = false;
    bool strictly_hyperbolic = false;
    double min_gap = 0.0;
    std::string error; // nonempty when the sample was rejected
};

struct HyperbolicityReport {
    std::vector<HyperbolicitySample> samples;
    bool all_strictly_hyperbolic = false; // conjunction over samples
    double min_gap = 0.0;                 // over samples that evaluated
};

/// Evaluates strict hyperbolicity sample-by-sample. Per-sample domain errors
/// are recorded in the report rather than thrown.
HyperbolicityReport check_strict_hyperbolicity(const QuasilinearSystem& system,
                                               const std::vector<StateVector>& samples);

} // namespace charlab
