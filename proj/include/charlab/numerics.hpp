#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace charlab {

/// n equally spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

/// Deterministic uniform double in [lo, hi) from a seeded engine. The
/// distribution is hand-rolled (53-bit mantissa scaling) so output does not
/// depend on the standard library's std::uniform_real_distribution.
double uniform(std::mt19937_64& rng, double lo, double hi);

/// Least-squares convergence order from errors at successive grid halvings:
/// the slope of log2(error) against the level index, negated.
double fit_order(const std::vector<double>& errors);

/// log2(errors[i] / errors[i+1]) for each successive pair.
std::vector<double> successive_orders(const std::vector<double>& errors);

/// Compensated (Kahan) running sum.
class KahanSum {
public:
    void add(double v)
    {
        const double y = v - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace charlab
