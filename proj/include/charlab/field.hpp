#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/swe.hpp"

namespace charlab {

/// Gridded (x,t) -> (h,u) sample with bilinear interpolation.
///
/// Grids are strictly increasing and uniform; all depths exceed the 1e-12
/// floor. Values are stored x-major: index(i,j) = i*nt + j. Immutable after
/// construction and safe to share across threads.
class SolutionField {
public:
    SolutionField(std::vector<double> x_grid, std::vector<double> t_grid,
                  std::vector<double> h_values, std::vector<double> u_values);

    /// Samples h_fn/u_fn at every grid node.
    static SolutionField sample(const std::vector<double>& x_grid,
                                const std::vector<double>& t_grid,
                                const std::function<double(double, double)>& h_fn,
                                const std::function<double(double, double)>& u_fn);

    int nx() const { return static_cast<int>(x_.size()); }
    int nt() const { return static_cast<int>(t_.size()); }
    double x(int i) const { return x_[static_cast<size_t>(i)]; }
    double t(int j) const { return t_[static_cast<size_t>(j)]; }
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    double t_min() const { return t_.front(); }
    double t_max() const { return t_.back(); }
    double dx() const { return dx_; }
    double dt() const { return dt_; }

    double h(int i, int j) const { return h_[index(i, j)]; }
    double u(int i, int j) const { return u_[index(i, j)]; }

    const std::vector<double>& x_grid() const { return x_; }
    const std::vector<double>& t_grid() const { return t_; }
    const std::vector<double>& h_values() const { return h_; }
    const std::vector<double>& u_values() const { return u_; }

    bool contains(double x, double t) const;

    /// Bilinear interpolation; throws OutOfDomainError outside the grid.
    SWState at(double x, double t) const;

    /// Grid node closest to (x,t); throws OutOfDomainError outside the grid.
    std::pair<int, int> nearest_node(double x, double t) const;

private:
    size_t index(int i, int j) const
    {
        return static_cast<size_t>(i) * t_.size() + static_cast<size_t>(j);
    }

    std::vector<double> x_, t_, h_, u_;
    double dx_ = 0.0, dt_ = 0.0;
};

} // namespace charlab
