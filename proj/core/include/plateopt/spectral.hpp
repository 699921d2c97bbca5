#pragma once

#include "plateopt/coefficient.hpp"
#include "plateopt/field.hpp"
#include "plateopt/grid.hpp"

namespace plateopt {

/**
 * First eigenpair of a hinged-plate operator.
 *
 * u is L2-normalized (integral of u^2 equals 1) and nonnegative;
 * z = -(coefficient) * Laplacian(u) is the auxiliary field of the
 * second-order splitting and is nonnegative as well. `residual` is the
 * relative block residual of the eigen-equation at return,
 * |A z - (eigenvalue + potential) u| / |eigenvalue| in the L2 norm.
 */
struct EigenPair {
    double eigenvalue;
    GridFunction u;
    GridFunction z;
    double residual;
    int iterations;
};

inline constexpr double kDefaultEigenTol = 1e-10;

/**
 * Smallest eigenvalue of u -> Laplacian(D * Laplacian(u)) under hinged
 * (u = Laplacian u = 0) boundary conditions, by inverse power iteration on
 * the split system: each step solves -Laplacian(z) = f, then
 * -Laplacian(u) = z / D. Requires D > 0 node-wise.
 *
 * Converges when both the relative eigenvalue change and the relative
 * block residual drop below tol; otherwise throws NumericFailure carrying
 * the last residual.
 */
EigenPair first_eigenpair_thickness(const GridPtr& grid, const GridFunction& thickness,
                                    double tol = kDefaultEigenTol);
EigenPair first_eigenpair_thickness(const GridPtr& grid, const CoefficientField& thickness,
                                    double tol = kDefaultEigenTol);

/**
 * Smallest eigenvalue of u -> Laplacian((1+alpha*rho) * Laplacian(u)) - rho*u
 * under hinged boundary conditions. The spectrum is bounded below by -1,
 * so the iteration runs on the resolvent shifted by -1; each step solves
 * the coupled system -Laplacian(u) = z/(1+alpha*rho),
 * -Laplacian(z) = f + (rho-1)*u monolithically (one sparse SPD solve via
 * the exact Schur complement in u). If the shifted matrix is reported
 * singular, the solve is retried once with shift -1 - 1e-6.
 */
EigenPair first_eigenpair_density(const GridPtr& grid, double alpha, const GridFunction& rho,
                                  double tol = kDefaultEigenTol);
EigenPair first_eigenpair_density(const GridPtr& grid, double alpha, const CoefficientField& rho,
                                  double tol = kDefaultEigenTol);

/**
 * Same as first_eigenpair_density but with the harmonic-mean relaxed
 * coefficient harmonic_mean_coefficient(alpha, rho) in place of
 * 1 + alpha*rho. The two eigenvalues agree on {0,1}-valued densities.
 */
EigenPair first_eigenpair_density_relaxed(const GridPtr& grid, double alpha,
                                          const GridFunction& rho,
                                          double tol = kDefaultEigenTol);
EigenPair first_eigenpair_density_relaxed(const GridPtr& grid, double alpha,
                                          const CoefficientField& rho,
                                          double tol = kDefaultEigenTol);

/**
 * Node-wise harmonic mean of the two-phase stiffness 1 + alpha*rho:
 * (1+alpha) / (1 + alpha*(1-rho)). Values lie in [1, 1+alpha] and the map
 * is concave in rho. Requires 0 <= rho <= 1.
 */
GridFunction harmonic_mean_coefficient(double alpha, const GridFunction& rho);
GridFunction harmonic_mean_coefficient(double alpha, const CoefficientField& rho);

/// Rayleigh quotient of the thickness problem:
/// integral(D * (Laplacian u)^2) / integral(u^2). Throws on u = 0.
double rayleigh_thickness(const GridPtr& grid, const GridFunction& thickness,
                          const GridFunction& u);
double rayleigh_thickness(const GridPtr& grid, const CoefficientField& thickness,
                          const GridFunction& u);

/// Rayleigh quotient of the density problem:
/// [integral((1+alpha*rho)(Laplacian u)^2) - integral(rho u^2)] / integral(u^2).
double rayleigh_density(const GridPtr& grid, double alpha, const GridFunction& rho,
                        const GridFunction& u);
double rayleigh_density(const GridPtr& grid, double alpha, const CoefficientField& rho,
                        const GridFunction& u);

} // namespace plateopt
