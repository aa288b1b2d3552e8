#include "charlab/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace charlab {

std::vector<double> linspace(double lo, double hi, int n)
{
    if (n < 2)
        throw std::invalid_argument("linspace needs n >= 2");
    std::vector<double> v(static_cast<size_t>(n));
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = lo + step * static_cast<double>(i);
    v.back() = hi;
    return v;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

double fit_order(const std::vector<double>& errors)
{
    const size_t n = errors.size();
    if (n < 2)
        throw std::invalid_argument("fit_order needs at least 2 levels");
    // least squares of log2(e_i) on i
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        const double y = std::log2(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double dn = static_cast<double>(n);
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    return -slope;
}

std::vector<double> successive_orders(const std::vector<double>& errors)
{
    std::vector<double> orders;
    for (size_t i = 0; i + 1 < errors.size(); ++i)
        orders.push_back(std::log2(errors[i] / errors[i + 1]));
    return orders;
}

} // namespace charlab
