#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <memory>
#include <mutex>

namespace plateopt {

enum class GridKind { Radial, Cartesian };

/**
 * A discretized domain with Dirichlet boundary handling built in.
 *
 * Two kinds are supported:
 *  - Radial: the disk of radius R reduced to 1-D, cell-centered nodes
 *    r_i = (i+1/2)h with h = R/N. No node sits at r = 0; the symmetry
 *    condition u'(0) = 0 enters through a zero-area inner face, and the
 *    boundary value u(R) = 0 through a reflected ghost node.
 *  - Cartesian: a rectangle (0,Lx)x(0,Ly) with cell-centered tensor nodes
 *    x_i = (i+1/2)hx, y_j = (j+1/2)hy. All nodes are unknowns; walls are
 *    handled by reflected ghosts so the wall value is exactly zero.
 *
 * Quadrature weights are the cell measures (2*pi*r_i*h, or hx*hy). Their
 * sum equals the domain area exactly for both kinds.
 *
 * The negative Dirichlet Laplacian is carried in stiffness form
 * K = W * (-Laplacian), assembled face-by-face so K is bit-exactly
 * symmetric and positive definite (an M-matrix: Poisson solves with
 * nonnegative right-hand sides return nonnegative solutions).
 *
 * Instances are immutable and safe to share across threads.
 */
class Grid {
public:
    static std::shared_ptr<const Grid> radial(double radius, int node_count);
    static std::shared_ptr<const Grid> cartesian(double length_x, double length_y,
                                                 int count_x, int count_y);

    GridKind kind() const { return kind_; }
    int size() const { return static_cast<int>(weights_.size()); }

    /// Sum of quadrature weights; equals the domain area exactly.
    double area() const { return area_; }

    const Eigen::VectorXd& weights() const { return weights_; }
    double max_cell_weight() const { return max_weight_; }

    // Radial accessors (throw std::logic_error on a Cartesian grid).
    double radius() const;
    double spacing() const;

    // Cartesian accessors (throw std::logic_error on a radial grid).
    double length_x() const;
    double length_y() const;
    int count_x() const;
    int count_y() const;
    double spacing_x() const;
    double spacing_y() const;

    /// Largest mesh spacing (h, or max(hx, hy)).
    double max_spacing() const;

    /// Distance of each node from the domain center (radial: r_i;
    /// Cartesian: distance from the rectangle center). Used for
    /// deterministic tie-breaking and for radial profiles.
    const Eigen::VectorXd& node_radii() const { return node_radii_; }

    /// Stiffness matrix K = W * (-Laplacian), symmetric positive definite.
    const Eigen::SparseMatrix<double>& stiffness() const { return stiffness_; }

    /// Apply the negative Dirichlet Laplacian: returns -(Laplacian f).
    Eigen::VectorXd apply_neg_laplacian(const Eigen::VectorXd& f) const;

    /// Solve -Laplacian(u) = rhs with zero Dirichlet data.
    Eigen::VectorXd poisson_solve(const Eigen::VectorXd& rhs) const;

    /// Structural equality (same kind and construction parameters).
    bool same_as(const Grid& other) const;

private:
    Grid() = default;

    const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>& factorization() const;

    GridKind kind_ = GridKind::Radial;

    // radial parameters
    double radius_ = 0.0;
    double h_ = 0.0;
    int n_ = 0;

    // cartesian parameters
    double lx_ = 0.0, ly_ = 0.0;
    double hx_ = 0.0, hy_ = 0.0;
    int nx_ = 0, ny_ = 0;

    double area_ = 0.0;
    double max_weight_ = 0.0;
    Eigen::VectorXd weights_;
    Eigen::VectorXd node_radii_;
    Eigen::SparseMatrix<double> stiffness_;

    mutable std::once_flag factor_once_;
    mutable std::unique_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> factor_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Build the radial grid for the disk of radius R with N cell-centered nodes.
/// Requires R > 0 and N >= 16.
GridPtr build_radial_grid(double radius, int node_count);

/// Build the Cartesian grid for the rectangle (0,Lx)x(0,Ly).
/// Requires positive side lengths and nx, ny >= 16.
GridPtr build_cartesian_grid(double length_x, double length_y, int count_x, int count_y);

/// True when the two grids can carry the same functions (same object or
/// structurally equal).
bool compatible(const GridPtr& a, const GridPtr& b);

} // namespace plateopt
