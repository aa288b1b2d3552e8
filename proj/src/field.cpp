#include "charlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace charlab {

namespace {

double check_uniform(const std::vector<double>& grid, const char* name)
{
    if (grid.size() < 2) {
        std::ostringstream msg;
        msg << name << " grid needs at least 2 points";
        throw DomainError(msg.str());
    }
    const double step = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    if (!(step > 0.0))
        throw DomainError(std::string(name) + " grid must be strictly increasing");
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double d = grid[i + 1] - grid[i];
        if (!(d > 0.0) || std::abs(d - step) > 1e-9 * step) {
            std::ostringstream msg;
            msg << name << " grid must be uniform and strictly increasing (spacing "
                << d << " vs " << step << " at index " << i << ")";
            throw DomainError(msg.str());
        }
    }
    return step;
}

} // namespace

SolutionField::SolutionField(std::vector<double> x_grid, std::vector<double> t_grid,
                             std::vector<double> h_values, std::vector<double> u_values)
    : x_(std::move(x_grid)), t_(std::move(t_grid)),
      h_(std::move(h_values)), u_(std::move(u_values))
{
    dx_ = check_uniform(x_, "x");
    dt_ = check_uniform(t_, "t");
    const size_t expected = x_.size() * t_.size();
    if (h_.size() != expected || u_.size() != expected)
        throw DomainError("field value arrays must have nx*nt entries");
    for (size_t k = 0; k < h_.size(); ++k) {
        if (!std::isfinite(h_[k]) || !std::isfinite(u_[k]))
            throw NumericalError("field contains non-finite values");
        if (!(h_[k] > kDepthFloor)) {
            std::ostringstream msg;
            msg << "field depth " << h_[k] << " at flat index " << k
                << " violates h > 1e-12";
            throw DryStateError(msg.str());
        }
    }
}

SolutionField SolutionField::sample(const std::vector<double>& x_grid,
                                    const std::vector<double>& t_grid,
                                    const std::function<double(double, double)>& h_fn,
                                    const std::function<double(double, double)>& u_fn)
{
    std::vector<double> h(x_grid.size() * t_grid.size());
    std::vector<double> u(h.size());
    size_t k = 0;
    for (double xv : x_grid)
        for (double tv : t_grid) {
            h[k] = h_fn(xv, tv);
            u[k] = u_fn(xv, tv);
            ++k;
        }
    return SolutionField(x_grid, t_grid, std::move(h), std::move(u));
}

bool SolutionField::contains(double x, double t) const
{
    return x >= x_.front() && x <= x_.back() && t >= t_.front() && t <= t_.back();
}

SWState SolutionField::at(double x, double t) const
{
    if (!contains(x, t)) {
        std::ostringstream msg;
        msg << "point (" << x << ", " << t << ") outside field domain ["
            << x_.front() << ", " << x_.back() << "] x [" << t_.front() << ", "
            << t_.back() << "]";
        throw OutOfDomainError(msg.str());
    }
    const int i = std::clamp(static_cast<int>((x - x_.front()) / dx_), 0, nx() - 2);
    const int j = std::clamp(static_cast<int>((t - t_.front()) / dt_), 0, nt() - 2);
    const double wx = (x - this->x(i)) / dx_;
    const double wt = (t - this->t(j)) / dt_;

    auto blend = [&](const std::vector<double>& v) {
        const double v00 = v[index(i, j)], v01 = v[index(i, j + 1)];
        const double v10 = v[index(i + 1, j)], v11 = v[index(i + 1, j + 1)];
        return (1.0 - wx) * ((1.0 - wt) * v00 + wt * v01)
             + wx * ((1.0 - wt) * v10 + wt * v11);
    };
    return SWState(blend(h_), blend(u_));
}

std::pair<int, int> SolutionField::nearest_node(double x, double t) const
{
    if (!contains(x, t)) {
        std::ostringstream msg;
        msg << "point (" << x << ", " << t << ") outside field domain";
        throw OutOfDomainError(msg.str());
    }
    const int i = std::clamp(static_cast<int>(std::lround((x - x_.front()) / dx_)), 0, nx() - 1);
    const int j = std::clamp(static_cast<int>(std::lround((t - t_.front()) / dt_)), 0, nt() - 1);
    return {i, j};
}

} // namespace charlab
