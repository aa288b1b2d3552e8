#include "charlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace charlab {

namespace {

constexpr double kRelTol = 1e-10;

// Unit norm, first component with |v_i| > 1e-12 made positive.
Eigen::VectorXd normalize_sign(Eigen::VectorXd v)
{
    const double norm = v.norm();
    if (norm <= 0.0)
        throw NumericalError("eigenvector has zero norm");
    v /= norm;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0.0)
                v = -v;
            break;
        }
    }
    return v;
}

EigenStructure eigen_2x2(const Eigen::MatrixXd& m)
{
    const double a = m(0, 0), b = m(0, 1);
    const double c = m(1, 0), d = m(1, 1);
    const double trace = a + d;
    const double det = a * d - b * c;
    const double disc = trace * trace - 4.0 * det;
    const double scale = 1.0 + m.norm();

    if (disc < 0.0) {
        const double imag = 0.5 * std::sqrt(-disc);
        if (imag > kRelTol * scale) {
            std::ostringstream msg;
            msg << "complex eigenvalue pair " << 0.5 * trace << " +/- " << imag << "i";
            throw NonHyperbolicError(msg.str(), {0.5 * trace, imag});
        }
        // roundoff-negative discriminant: treat as a repeated real eigenvalue
        EigenStructure es;
        es.eigenvalues = {0.5 * trace, 0.5 * trace};
        Eigen::VectorXd v(2);
        v << 1.0, 0.0;
        es.right_eigenvectors = {v, v};
        es.strictly_hyperbolic = false;
        return es;
    }

    const double root = std::sqrt(disc);
    double lo = 0.5 * (trace - root);
    double hi = 0.5 * (trace + root);

    auto eigvec = [&](double lambda) {
        Eigen::VectorXd v(2);
        // rows of M - lambda*I are parallel; pick the better-conditioned one
        if (std::abs(b) + std::abs(a - lambda) >= std::abs(c) + std::abs(d - lambda))
            v << b, lambda - a;
        else
            v << lambda - d, c;
        if (v.norm() == 0.0)
            v << 1.0, 0.0; // diagonal matrix
        return normalize_sign(v);
    };

    EigenStructure es;
    es.eigenvalues = {lo, hi};
    es.right_eigenvectors = {eigvec(lo), eigvec(hi)};
    const double gap_threshold = kRelTol * (1.0 + std::max(std::abs(lo), std::abs(hi)));
    es.strictly_hyperbolic = (hi - lo) > gap_threshold;
    return es;
}

EigenStructure eigen_general(const Eigen::MatrixXd& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigensolver did not converge");

    const double scale = 1.0 + m.norm();
    const auto values = solver.eigenvalues();
    std::vector<double> lambdas;
    lambdas.reserve(static_cast<size_t>(values.size()));
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (std::abs(values[i].imag()) > kRelTol * scale) {
            std::ostringstream msg;
            msg << "complex eigenvalue pair " << values[i].real() << " +/- "
                << std::abs(values[i].imag()) << "i";
            throw NonHyperbolicError(msg.str(), values[i]);
        }
        lambdas.push_back(values[i].real());
    }
    std::sort(lambdas.begin(), lambdas.end());

    EigenStructure es;
    es.eigenvalues = lambdas;
    es.right_eigenvectors.reserve(lambdas.size());
    const Eigen::Index n = m.rows();
    for (double lambda : lambdas) {
        // deterministic kernel vector of M - lambda*I
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m - lambda * Eigen::MatrixXd::Identity(n, n));
        lu.setThreshold(1e-8);
        const Eigen::MatrixXd kernel = lu.kernel();
        if (kernel.cols() < 1)
            throw NumericalError("no eigenvector found for a computed eigenvalue");
        es.right_eigenvectors.push_back(normalize_sign(kernel.col(0)));
    }

    double max_abs = 0.0;
    for (double l : lambdas)
        max_abs = std::max(max_abs, std::abs(l));
    const double gap_threshold = kRelTol * (1.0 + max_abs);
    bool strict = true;
    for (size_t i = 0; i + 1 < lambdas.size(); ++i)
        strict = strict && (lambdas[i + 1] - lambdas[i]) > gap_threshold;
    es.strictly_hyperbolic = strict;
    return es;
}

} // namespace

Eigen::MatrixXd eval_matrix(const QuasilinearSystem& system, const StateVector& state)
{
    if (state.size() != system.n) {
        std::ostringstream msg;
        msg << "state has " << state.size() << " components, system '" << system.name
            << "' expects " << system.n;
        throw DomainError(msg.str());
    }
    if (system.admissible && !system.admissible(state)) {
        std::ostringstream msg;
        msg << "inadmissible state for system '" << system.name
            << "': violated predicate \"" << system.admissibility << "\"";
        throw DomainError(msg.str());
    }
    Eigen::MatrixXd m = system.matrix(state);
    if (!m.allFinite())
        throw NumericalError("coefficient matrix has non-finite entries");
    return m;
}

EigenStructure eigen_structure(const Eigen::MatrixXd& m)
{
    if (m.rows() != m.cols() || m.rows() < 2)
        throw DomainError("eigen_structure requires a square matrix with n >= 2");
    if (!m.allFinite())
        throw NumericalError("matrix has non-finite entries");
    return m.rows() == 2 ? eigen_2x2(m) : eigen_general(m);
}

HyperbolicityReport check_strict_hyperbolicity(const QuasilinearSystem& system,
                                               const std::vector<StateVector>& samples)
{
    if (samples.empty())
        throw DomainError("check_strict_hyperbolicity requires a nonempty sample list");

    HyperbolicityReport report;
    report.samples.reserve(samples.size());
    report.all_strictly_hyperbolic = true;
    report.min_gap = std::numeric_limits<double>::infinity();

    for (const StateVector& state : samples) {
        HyperbolicitySample entry;
        entry.state = state;
        try {
            const Eigen::MatrixXd m = eval_matrix(system, state);
            const EigenStructure es = eigen_structure(m);
            entry.admissible = true;
            entry.strictly_hyperbolic = es.strictly_hyperbolic;
            double gap = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i + 1 < es.eigenvalues.size(); ++i)
                gap = std::min(gap, es.eigenvalues[i + 1] - es.eigenvalues[i]);
            entry.min_gap = gap;
            report.min_gap = std::min(report.min_gap, gap);
        } catch (const DomainError& e) {
            entry.error = e.what();
        } catch (const NonHyperbolicError& e) {
            entry.admissible = true;
            entry.error = e.what();
        }
        report.all_strictly_hyperbolic =
            report.all_strictly_hyperbolic && entry.strictly_hyperbolic;
        report.samples.push_back(std::move(entry));
    }
    return report;
}

} // namespace charlab
