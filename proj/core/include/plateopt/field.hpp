#pragma once

#include "plateopt/grid.hpp"

#include <Eigen/Dense>

namespace plateopt {

/**
 * Real values at the unknown nodes of a grid. Arithmetic is only defined
 * between functions on compatible grids; mismatches throw
 * std::invalid_argument.
 */
class GridFunction {
public:
    GridFunction(GridPtr grid, Eigen::VectorXd values);

    static GridFunction constant(const GridPtr& grid, double value);
    static GridFunction zero(const GridPtr& grid);

    const GridPtr& grid() const { return grid_; }
    const Eigen::VectorXd& values() const { return values_; }
    Eigen::VectorXd& values() { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double s);
    GridFunction& operator/=(double s);

private:
    GridPtr grid_;
    Eigen::VectorXd values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a);
GridFunction operator*(GridFunction a, double s);
GridFunction operator*(double s, GridFunction a);
/// Node-wise product.
GridFunction operator*(const GridFunction& a, const GridFunction& b);

/// Throws std::invalid_argument unless f lives on (a grid compatible with) grid.
void require_on_grid(const GridPtr& grid, const GridFunction& f, const char* what);

/// Quadrature: sum of w_i * f_i.
double integrate(const GridPtr& grid, const GridFunction& f);

/// sqrt of the integral of f^2.
double l2_norm(const GridPtr& grid, const GridFunction& f);

/// Discrete Dirichlet Laplacian of f (boundary values taken as zero).
GridFunction apply_laplacian(const GridPtr& grid, const GridFunction& f);

/// Solve -Laplacian(u) = rhs with zero Dirichlet data. The discrete
/// operator is an M-matrix, so rhs >= 0 node-wise gives u >= 0 node-wise.
GridFunction solve_poisson(const GridPtr& grid, const GridFunction& rhs);

} // namespace plateopt
