#include "plateopt/coefficient.hpp"

#include <cmath>
#include <stdexcept>

namespace plateopt {

namespace {
constexpr double kBoundSlack = 1e-12;
} // namespace

double coefficient_mass_tolerance(const Grid& grid, double lo, double hi, double mass) {
    return 0.5 * (hi - lo) * grid.max_cell_weight() + 1e-9 * (1.0 + std::abs(mass));
}

CoefficientField::CoefficientField(GridPtr grid, Eigen::VectorXd values,
                                   const ThicknessClass& cls)
    : grid_(std::move(grid)), values_(std::move(values)), kind_(CoefficientKind::Thickness),
      lo_(1.0), hi_(1.0 + cls.beta0), mass_(cls.mass), beta0_(cls.beta0) {
    if (!grid_)
        throw std::invalid_argument("CoefficientField: null grid");
    if (!(cls.beta0 > 0.0))
        throw std::invalid_argument("thickness class: beta0 must be positive");
    const double area = grid_->area();
    if (!(cls.mass > area) || !(cls.mass < (1.0 + cls.beta0) * area))
        throw std::invalid_argument(
            "thickness class: mass must lie strictly between area and (1+beta0)*area");
    validate();
}

CoefficientField::CoefficientField(GridPtr grid, Eigen::VectorXd values, const DensityClass& cls)
    : grid_(std::move(grid)), values_(std::move(values)), kind_(CoefficientKind::Density),
      lo_(0.0), hi_(1.0), mass_(cls.mass), beta0_(0.0) {
    if (!grid_)
        throw std::invalid_argument("CoefficientField: null grid");
    const double area = grid_->area();
    if (!(cls.mass > 0.0) || !(cls.mass < area))
        throw std::invalid_argument("density class: mass must lie strictly between 0 and area");
    validate();
}

void CoefficientField::validate() const {
    if (values_.size() != grid_->size())
        throw std::invalid_argument("CoefficientField: value count does not match grid");
    if (values_.minCoeff() < lo_ - kBoundSlack || values_.maxCoeff() > hi_ + kBoundSlack)
        throw std::invalid_argument("CoefficientField: values outside class bounds");
    const double tol = coefficient_mass_tolerance(*grid_, lo_, hi_, mass_);
    if (std::abs(mass_error()) > tol)
        throw std::invalid_argument("CoefficientField: mass constraint violated");
}

CoefficientField CoefficientField::uniform(const GridPtr& grid, const ThicknessClass& cls) {
    if (!grid)
        throw std::invalid_argument("CoefficientField: null grid");
    const double c = cls.mass / grid->area();
    return CoefficientField(grid, Eigen::VectorXd::Constant(grid->size(), c), cls);
}

CoefficientField CoefficientField::uniform(const GridPtr& grid, const DensityClass& cls) {
    if (!grid)
        throw std::invalid_argument("CoefficientField: null grid");
    const double c = cls.mass / grid->area();
    return CoefficientField(grid, Eigen::VectorXd::Constant(grid->size(), c), cls);
}

double CoefficientField::beta0() const {
    if (kind_ != CoefficientKind::Thickness)
        throw std::logic_error("beta0(): not a thickness field");
    return beta0_;
}

ThicknessClass CoefficientField::thickness_class() const {
    if (kind_ != CoefficientKind::Thickness)
        throw std::logic_error("thickness_class(): not a thickness field");
    return ThicknessClass{beta0_, mass_};
}

DensityClass CoefficientField::density_class() const {
    if (kind_ != CoefficientKind::Density)
        throw std::logic_error("density_class(): not a density field");
    return DensityClass{mass_};
}

bool CoefficientField::is_bang_bang(double tol) const {
    for (int i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (std::abs(v - lo_) > tol && std::abs(v - hi_) > tol)
            return false;
    }
    return true;
}

double CoefficientField::mass_error() const {
    return grid_->weights().dot(values_) - mass_;
}

} // namespace plateopt
