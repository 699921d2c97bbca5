#include "plateopt/field.hpp"

#include <cmath>
#include <stdexcept>

namespace plateopt {

GridFunction::GridFunction(GridPtr grid, Eigen::VectorXd values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (!grid_)
        throw std::invalid_argument("GridFunction: null grid");
    if (values_.size() != grid_->size())
        throw std::invalid_argument("GridFunction: value count does not match grid");
}

GridFunction GridFunction::constant(const GridPtr& grid, double value) {
    if (!grid)
        throw std::invalid_argument("GridFunction: null grid");
    return GridFunction(grid, Eigen::VectorXd::Constant(grid->size(), value));
}

GridFunction GridFunction::zero(const GridPtr& grid) {
    return constant(grid, 0.0);
}

namespace {
void require_compatible(const GridFunction& a, const GridFunction& b) {
    if (!compatible(a.grid(), b.grid()))
        throw std::invalid_argument("GridFunction arithmetic: grid mismatch");
}
} // namespace

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    require_compatible(*this, other);
    values_ += other.values();
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    require_compatible(*this, other);
    values_ -= other.values();
    return *this;
}

GridFunction& GridFunction::operator*=(double s) {
    values_ *= s;
    return *this;
}

GridFunction& GridFunction::operator/=(double s) {
    values_ /= s;
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }

GridFunction operator-(GridFunction a) {
    a.values() = -a.values();
    return a;
}

GridFunction operator*(GridFunction a, double s) { return a *= s; }
GridFunction operator*(double s, GridFunction a) { return a *= s; }

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    if (!compatible(a.grid(), b.grid()))
        throw std::invalid_argument("GridFunction arithmetic: grid mismatch");
    return GridFunction(a.grid(), a.values().cwiseProduct(b.values()));
}

void require_on_grid(const GridPtr& grid, const GridFunction& f, const char* what) {
    if (!compatible(grid, f.grid()))
        throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

double integrate(const GridPtr& grid, const GridFunction& f) {
    require_on_grid(grid, f, "integrate");
    return grid->weights().dot(f.values());
}

double l2_norm(const GridPtr& grid, const GridFunction& f) {
    require_on_grid(grid, f, "l2_norm");
    return std::sqrt(grid->weights().dot(f.values().cwiseAbs2()));
}

GridFunction apply_laplacian(const GridPtr& grid, const GridFunction& f) {
    require_on_grid(grid, f, "apply_laplacian");
    return GridFunction(f.grid(), -grid->apply_neg_laplacian(f.values()));
}

GridFunction solve_poisson(const GridPtr& grid, const GridFunction& rhs) {
    require_on_grid(grid, rhs, "solve_poisson");
    return GridFunction(rhs.grid(), grid->poisson_solve(rhs.values()));
}

} // namespace plateopt
