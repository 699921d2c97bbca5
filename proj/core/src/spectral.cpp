#include "plateopt/spectral.hpp"
#include "plateopt/errors.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace plateopt {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kSignClamp = 1e-14;
constexpr double kPositivityFloor = -1e-12;

void require_valid_tol(double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("eigen solve: tolerance must be positive");
}

void require_positive_coefficient(const Eigen::VectorXd& c) {
    if (c.size() == 0 || !(c.minCoeff() > 0.0))
        throw std::invalid_argument("eigen solve: coefficient must be positive node-wise");
}

void require_density_bounds(const Eigen::VectorXd& rho) {
    if (rho.minCoeff() < -1e-12 || rho.maxCoeff() > 1.0 + 1e-12)
        throw std::invalid_argument("eigen solve: density must satisfy 0 <= rho <= 1");
}

struct Operator {
    const Grid& grid;
    Eigen::VectorXd coeff;     // c in Laplacian(c * Laplacian(u))
    Eigen::VectorXd potential; // rho (zero for the thickness problem)

    // A u with A = -Laplacian.
    Eigen::VectorXd apply_A(const Eigen::VectorXd& u) const {
        return grid.apply_neg_laplacian(u);
    }

    // H u = A (c .* A u) - rho .* u
    Eigen::VectorXd apply(const Eigen::VectorXd& u) const {
        Eigen::VectorXd v = apply_A(coeff.cwiseProduct(apply_A(u)));
        if (potential.size() > 0)
            v -= potential.cwiseProduct(u);
        return v;
    }

    double wdot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
        return a.cwiseProduct(grid.weights()).dot(b);
    }

    double rayleigh(const Eigen::VectorXd& u) const {
        const Eigen::VectorXd au = apply_A(u);
        double num = wdot(au, coeff.cwiseProduct(au));
        if (potential.size() > 0)
            num -= wdot(u, potential.cwiseProduct(u));
        return num / wdot(u, u);
    }
};

EigenPair iterate(const GridPtr& gp, const Operator& op,
                  const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& resolvent,
                  double tol) {
    const Grid& grid = *gp;
    const Eigen::VectorXd& w = grid.weights();

    Eigen::VectorXd u = Eigen::VectorXd::Constant(grid.size(), 1.0);
    u /= std::sqrt(op.wdot(u, u));

    double lambda = op.rayleigh(u);
    double resid_rel = std::numeric_limits<double>::infinity();
    int it = 0;
    bool converged = false;
    while (it < kMaxIterations) {
        ++it;
        Eigen::VectorXd v = resolvent(u);
        v /= std::sqrt(op.wdot(v, v));
        const double lambda_new = op.rayleigh(v);
        const Eigen::VectorXd r = op.apply(v) - lambda_new * v;
        const double rnorm = std::sqrt(r.cwiseProduct(w).dot(r));
        resid_rel = rnorm / std::abs(lambda_new);
        const bool small_change = std::abs(lambda_new - lambda) <= tol * std::abs(lambda_new);
        u = std::move(v);
        lambda = lambda_new;
        if (small_change && resid_rel <= tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericFailure("eigen solve: no convergence within max iterations", resid_rel);

    // Sign normalization: integral of u nonnegative, then clamp roundoff.
    if (w.dot(u) < 0.0)
        u = -u;
    for (int i = 0; i < u.size(); ++i)
        if (std::abs(u[i]) < kSignClamp)
            u[i] = 0.0;

    Eigen::VectorXd z = op.coeff.cwiseProduct(op.apply_A(u));
    for (int i = 0; i < z.size(); ++i)
        if (std::abs(z[i]) < kSignClamp)
            z[i] = 0.0;

    if (u.minCoeff() < kPositivityFloor)
        throw NumericFailure("eigen solve: eigenfunction lost positivity", u.minCoeff());
    if (z.minCoeff() < kPositivityFloor)
        throw NumericFailure("eigen solve: auxiliary field lost positivity", z.minCoeff());

    return EigenPair{lambda, GridFunction(gp, std::move(u)), GridFunction(gp, std::move(z)),
                     resid_rel, it};
}

EigenPair solve_split(const GridPtr& gp, const Eigen::VectorXd& coeff, double tol) {
    require_valid_tol(tol);
    require_positive_coefficient(coeff);
    const Grid& grid = *gp;
    Operator op{grid, coeff, Eigen::VectorXd()};
    auto resolvent = [&](const Eigen::VectorXd& f) {
        Eigen::VectorXd z = grid.poisson_solve(f);
        return grid.poisson_solve(z.cwiseQuotient(coeff).eval());
    };
    return iterate(gp, op, resolvent, tol);
}

EigenPair solve_shifted(const GridPtr& gp, const Eigen::VectorXd& coeff,
                        const Eigen::VectorXd& rho, double tol) {
    require_valid_tol(tol);
    require_positive_coefficient(coeff);
    const Grid& grid = *gp;
    const Eigen::VectorXd& w = grid.weights();

    // Shifted operator H + 1 in stiffness form:
    //   S = K diag(c / w) K + diag(w .* (1 - rho)),
    // symmetric positive definite since rho <= 1.
    const Eigen::SparseMatrix<double>& K = grid.stiffness();
    Eigen::VectorXd mid = coeff.cwiseQuotient(w);
    Eigen::SparseMatrix<double> S = K * mid.asDiagonal() * K;
    Eigen::VectorXd diag_add = w.cwiseProduct(Eigen::VectorXd::Ones(grid.size()) - rho);
    S += Eigen::SparseMatrix<double>(diag_add.asDiagonal());

    auto factor = std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    factor->compute(S);
    if (factor->info() != Eigen::Success) {
        // Singular shift: back off to -1 - 1e-6 and retry once.
        S += Eigen::SparseMatrix<double>((1e-6 * w).asDiagonal());
        factor->compute(S);
        if (factor->info() != Eigen::Success)
            throw NumericFailure("eigen solve: shifted system factorization failed", 0.0);
    }

    Operator op{grid, coeff, rho};
    auto resolvent = [&](const Eigen::VectorXd& f) {
        Eigen::VectorXd u = factor->solve(w.cwiseProduct(f));
        if (factor->info() != Eigen::Success)
            throw NumericFailure("eigen solve: shifted solve failed",
                                 std::numeric_limits<double>::quiet_NaN());
        return u;
    };
    return iterate(gp, op, resolvent, tol);
}

} // namespace

EigenPair first_eigenpair_thickness(const GridPtr& grid, const GridFunction& thickness,
                                    double tol) {
    require_on_grid(grid, thickness, "first_eigenpair_thickness");
    return solve_split(grid, thickness.values(), tol);
}

EigenPair first_eigenpair_thickness(const GridPtr& grid, const CoefficientField& thickness,
                                    double tol) {
    if (thickness.kind() != CoefficientKind::Thickness)
        throw std::invalid_argument("first_eigenpair_thickness: expected a thickness field");
    return first_eigenpair_thickness(grid, thickness.as_function(), tol);
}

EigenPair first_eigenpair_density(const GridPtr& grid, double alpha, const GridFunction& rho,
                                  double tol) {
    require_on_grid(grid, rho, "first_eigenpair_density");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("first_eigenpair_density: alpha must be nonnegative");
    require_density_bounds(rho.values());
    Eigen::VectorXd coeff = Eigen::VectorXd::Ones(grid->size()) + alpha * rho.values();
    return solve_shifted(grid, coeff, rho.values(), tol);
}

EigenPair first_eigenpair_density(const GridPtr& grid, double alpha, const CoefficientField& rho,
                                  double tol) {
    if (rho.kind() != CoefficientKind::Density)
        throw std::invalid_argument("first_eigenpair_density: expected a density field");
    return first_eigenpair_density(grid, alpha, rho.as_function(), tol);
}

EigenPair first_eigenpair_density_relaxed(const GridPtr& grid, double alpha,
                                          const GridFunction& rho, double tol) {
    require_on_grid(grid, rho, "first_eigenpair_density_relaxed");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("first_eigenpair_density_relaxed: alpha must be nonnegative");
    require_density_bounds(rho.values());
    GridFunction coeff = harmonic_mean_coefficient(alpha, rho);
    return solve_shifted(grid, coeff.values(), rho.values(), tol);
}

EigenPair first_eigenpair_density_relaxed(const GridPtr& grid, double alpha,
                                          const CoefficientField& rho, double tol) {
    if (rho.kind() != CoefficientKind::Density)
        throw std::invalid_argument("first_eigenpair_density_relaxed: expected a density field");
    return first_eigenpair_density_relaxed(grid, alpha, rho.as_function(), tol);
}

GridFunction harmonic_mean_coefficient(double alpha, const GridFunction& rho) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("harmonic_mean_coefficient: alpha must be nonnegative");
    require_density_bounds(rho.values());
    Eigen::VectorXd out(rho.size());
    for (int i = 0; i < rho.size(); ++i)
        out[i] = (1.0 + alpha) / (1.0 + alpha * (1.0 - rho[i]));
    return GridFunction(rho.grid(), std::move(out));
}

GridFunction harmonic_mean_coefficient(double alpha, const CoefficientField& rho) {
    if (rho.kind() != CoefficientKind::Density)
        throw std::invalid_argument("harmonic_mean_coefficient: expected a density field");
    return harmonic_mean_coefficient(alpha, rho.as_function());
}

namespace {
double squared_l2(const GridPtr& grid, const GridFunction& u) {
    const double nn = grid->weights().dot(u.values().cwiseAbs2());
    if (!(nn > 0.0))
        throw std::invalid_argument("rayleigh quotient: u must be nonzero");
    return nn;
}
} // namespace

double rayleigh_thickness(const GridPtr& grid, const GridFunction& thickness,
                          const GridFunction& u) {
    require_on_grid(grid, thickness, "rayleigh_thickness");
    require_on_grid(grid, u, "rayleigh_thickness");
    const double denom = squared_l2(grid, u);
    GridFunction lap = apply_laplacian(grid, u);
    const double num = integrate(grid, thickness * lap * lap);
    return num / denom;
}

double rayleigh_thickness(const GridPtr& grid, const CoefficientField& thickness,
                          const GridFunction& u) {
    return rayleigh_thickness(grid, thickness.as_function(), u);
}

double rayleigh_density(const GridPtr& grid, double alpha, const GridFunction& rho,
                        const GridFunction& u) {
    require_on_grid(grid, rho, "rayleigh_density");
    require_on_grid(grid, u, "rayleigh_density");
    const double denom = squared_l2(grid, u);
    GridFunction lap = apply_laplacian(grid, u);
    GridFunction coeff(rho.grid(),
                       (Eigen::VectorXd::Ones(rho.size()) + alpha * rho.values()).eval());
    const double num = integrate(grid, coeff * lap * lap) - integrate(grid, rho * u * u);
    return num / denom;
}

double rayleigh_density(const GridPtr& grid, double alpha, const CoefficientField& rho,
                        const GridFunction& u) {
    return rayleigh_density(grid, alpha, rho.as_function(), u);
}

} // namespace plateopt
