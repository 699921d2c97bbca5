#pragma once

#include "plateopt/field.hpp"
#include "plateopt/grid.hpp"

#include <Eigen/Dense>

namespace plateopt {

enum class CoefficientKind { Thickness, Density };

/// Thickness class: values in [1, 1+beta0], prescribed integral `mass`.
/// The class is non-degenerate only when area < mass < (1+beta0)*area.
struct ThicknessClass {
    double beta0 = 0.0;
    double mass = 0.0;
};

/// Density class: values in [0, 1], prescribed integral `mass` in (0, area).
struct DensityClass {
    double mass = 0.0;
};

/**
 * A bounded, mass-constrained coefficient (plate thickness or material
 * density) on a grid. Construction validates the node-wise bounds, the
 * mass constraint (to within one cell weight, the resolution at which a
 * strict two-valued field can match a prescribed integral), and the
 * non-degeneracy of the class itself.
 */
class CoefficientField {
public:
    CoefficientField(GridPtr grid, Eigen::VectorXd values, const ThicknessClass& cls);
    CoefficientField(GridPtr grid, Eigen::VectorXd values, const DensityClass& cls);

    /// The constant field mass/area (the barycenter of the class).
    static CoefficientField uniform(const GridPtr& grid, const ThicknessClass& cls);
    static CoefficientField uniform(const GridPtr& grid, const DensityClass& cls);

    const GridPtr& grid() const { return grid_; }
    const Eigen::VectorXd& values() const { return values_; }
    GridFunction as_function() const { return GridFunction(grid_, values_); }

    CoefficientKind kind() const { return kind_; }
    double lower_bound() const { return lo_; }
    double upper_bound() const { return hi_; }
    double mass() const { return mass_; }

    /// Contrast parameter beta0 (thickness fields only).
    double beta0() const;

    ThicknessClass thickness_class() const;
    DensityClass density_class() const;

    /// True when every node value is within tol of a bound.
    bool is_bang_bang(double tol = 1e-12) const;

    /// |integral - mass| of this field.
    double mass_error() const;

private:
    void validate() const;

    GridPtr grid_;
    Eigen::VectorXd values_;
    CoefficientKind kind_;
    double lo_, hi_, mass_, beta0_;
};

/// Mass tolerance used when validating a coefficient against its class:
/// half a cell of bound-to-bound variation plus a relative epsilon.
double coefficient_mass_tolerance(const Grid& grid, double lo, double hi, double mass);

} // namespace plateopt
