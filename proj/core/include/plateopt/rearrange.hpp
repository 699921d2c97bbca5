#pragma once

#include "plateopt/coefficient.hpp"
#include "plateopt/field.hpp"
#include "plateopt/grid.hpp"

namespace plateopt {

/**
 * Target grid for rearrangements of functions on `source`: the centered
 * disk of equal area. A radial source rearranges onto itself; a Cartesian
 * source maps to a radial grid with as many cells as the source has nodes.
 */
GridPtr rearrangement_target(const GridPtr& source);

/**
 * Schwarz (decreasing) rearrangement: the radially non-increasing function
 * on the equal-area disk with the same distribution function as f, up to
 * quadrature. Discretely: node values are sorted in descending order with
 * their cell measures and re-binned into the radial cells by cumulative
 * measure (cell values are measure-weighted averages, so the output is
 * non-increasing exactly and total mass is preserved exactly).
 * Requires f >= 0 (up to roundoff slack 1e-12).
 */
GridFunction schwarz_rearrange(const GridFunction& f);
GridFunction schwarz_rearrange(const GridFunction& f, const GridPtr& target);

struct RearrangementReport {
    double original_norm;
    double rearranged_norm;
    bool monotone;
    GridPtr target_grid;
    GridFunction rearranged;
};

/// Rearrange f and report the equimeasurability/monotonicity facts.
RearrangementReport schwarz_report(const GridFunction& f);

struct MajorizationReport {
    bool majorizes = false;    // cumulative domination and mass agreement
    bool mass_match = false;
    double max_cumulative_excess = 0.0;
    double mass_difference = 0.0;
};

/**
 * Tests the comparison relation f < g (cumulative radial integrals of the
 * rearrangement of f dominated by those of g at every radius, equal total
 * mass). Tolerance: 1e-9 times the total mass. A mass mismatch beyond the
 * tolerance yields majorizes = false with mass_match = false, not an error.
 * Requires f, g >= 0 on equal-area domains.
 */
MajorizationReport majorization_compare(const GridFunction& f, const GridFunction& g);

enum class BathtubTieBreak { InnermostFirst, OutermostFirst };

/**
 * Bathtub principle: minimizes integral(switch_field * c) over
 * lo <= c <= hi with integral(c) = mass. The minimizer is hi where the
 * switch is below a threshold and lo above it; at most one node carries an
 * intermediate value so the mass constraint holds exactly. Ties at the
 * threshold are broken deterministically by (switch value, node radius,
 * node index), radius ascending for InnermostFirst and descending for
 * OutermostFirst. With strict_bang_bang the fractional node is rounded to
 * the nearer bound and the resulting mass error is reported through
 * mass_error_out (always written when non-null).
 */
GridFunction bathtub_fill(const GridFunction& switch_field, double mass, double lo, double hi,
                          BathtubTieBreak tie_break, bool strict_bang_bang = false,
                          double* mass_error_out = nullptr);

/// Class-aware bathtub: density fills from the center outward on ties,
/// thickness from the boundary inward.
CoefficientField bathtub(const GridFunction& switch_field, const ThicknessClass& cls,
                         bool strict_bang_bang = false, double* mass_error_out = nullptr);
CoefficientField bathtub(const GridFunction& switch_field, const DensityClass& cls,
                         bool strict_bang_bang = false, double* mass_error_out = nullptr);

struct TalentiReport {
    GridFunction phi_sharp; // rearranged Poisson solution of the original problem
    GridFunction phi_tilde; // Poisson solution of the rearranged data on the disk
    bool ok;
    double tolerance;
    double max_violation;
};

/**
 * Comparison of the rearranged Poisson solution with the symmetrized
 * problem: solves -Laplacian(phi) = psi on the domain of psi and
 * -Laplacian(phi_tilde) = psi^# on the equal-area disk, and checks
 * phi^# <= phi_tilde + tol node-wise. The continuum inequality is what is
 * being verified, so tol = C*h*||psi||_2 with C = 1 and h the coarsest
 * spacing involved (pointwise violations of order h occur near level-set
 * boundaries). Requires psi >= 0.
 */
TalentiReport talenti_compare(const GridFunction& psi);

} // namespace plateopt
