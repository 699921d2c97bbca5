#include "plateopt/grid.hpp"
#include "plateopt/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace plateopt {

namespace {
constexpr int kMinNodes = 16;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

std::shared_ptr<const Grid> Grid::radial(double radius, int node_count) {
    if (!(radius > 0.0))
        throw std::invalid_argument("radial grid: radius must be positive");
    if (node_count < kMinNodes)
        throw std::invalid_argument("radial grid: need at least 16 nodes");

    auto g = std::shared_ptr<Grid>(new Grid());
    g->kind_ = GridKind::Radial;
    g->radius_ = radius;
    g->n_ = node_count;
    const double h = radius / node_count;
    g->h_ = h;

    const int n = node_count;
    g->weights_.resize(n);
    g->node_radii_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 0.5) * h;
        g->node_radii_[i] = r;
        g->weights_[i] = kTwoPi * r * h;
    }
    g->area_ = g->weights_.sum();
    g->max_weight_ = g->weights_.maxCoeff();

    // Stiffness K = W * (-Laplacian) assembled from face fluxes:
    // off-diagonal entries -2*pi*r_face/h come from a single expression,
    // so K is exactly symmetric. The reflected ghost at r = R contributes
    // an extra 2*pi*R/h to the last diagonal (twice the face coefficient,
    // since the ghost value is -u_{N-1}).
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(3 * n);
    for (int i = 0; i < n; ++i) {
        const double face_in = kTwoPi * (i * h) / h;        // r_{i-1/2} = i*h
        const double face_out = kTwoPi * ((i + 1) * h) / h; // r_{i+1/2}
        double diag = face_in + face_out;
        if (i > 0)
            trip.emplace_back(i, i - 1, -face_in);
        if (i < n - 1)
            trip.emplace_back(i, i + 1, -face_out);
        else
            diag += face_out; // ghost reflection doubles the boundary face
        trip.emplace_back(i, i, diag);
    }
    g->stiffness_.resize(n, n);
    g->stiffness_.setFromTriplets(trip.begin(), trip.end());
    g->stiffness_.makeCompressed();
    return g;
}

std::shared_ptr<const Grid> Grid::cartesian(double length_x, double length_y,
                                            int count_x, int count_y) {
    if (!(length_x > 0.0) || !(length_y > 0.0))
        throw std::invalid_argument("cartesian grid: side lengths must be positive");
    if (count_x < kMinNodes || count_y < kMinNodes)
        throw std::invalid_argument("cartesian grid: need at least 16 nodes per side");

    auto g = std::shared_ptr<Grid>(new Grid());
    g->kind_ = GridKind::Cartesian;
    g->lx_ = length_x;
    g->ly_ = length_y;
    g->nx_ = count_x;
    g->ny_ = count_y;
    const double hx = length_x / count_x;
    const double hy = length_y / count_y;
    g->hx_ = hx;
    g->hy_ = hy;

    const int n = count_x * count_y;
    const double w = hx * hy;
    g->weights_ = Eigen::VectorXd::Constant(n, w);
    g->area_ = w * n;
    g->max_weight_ = w;

    g->node_radii_.resize(n);
    auto at = [count_x](int i, int j) { return j * count_x + i; };
    for (int j = 0; j < count_y; ++j) {
        for (int i = 0; i < count_x; ++i) {
            const double dx = (i + 0.5) * hx - 0.5 * length_x;
            const double dy = (j + 0.5) * hy - 0.5 * length_y;
            g->node_radii_[at(i, j)] = std::hypot(dx, dy);
        }
    }

    // 5-point stencil in stiffness form. Face coefficients are
    // hy/hx (x-faces) and hx/hy (y-faces); reflected ghosts double the
    // wall face contribution on the diagonal.
    const double cx = hy / hx;
    const double cy = hx / hy;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(5 * static_cast<std::size_t>(n));
    for (int j = 0; j < count_y; ++j) {
        for (int i = 0; i < count_x; ++i) {
            const int k = at(i, j);
            double diag = 2.0 * cx + 2.0 * cy;
            if (i > 0)
                trip.emplace_back(k, at(i - 1, j), -cx);
            else
                diag += cx;
            if (i < count_x - 1)
                trip.emplace_back(k, at(i + 1, j), -cx);
            else
                diag += cx;
            if (j > 0)
                trip.emplace_back(k, at(i, j - 1), -cy);
            else
                diag += cy;
            if (j < count_y - 1)
                trip.emplace_back(k, at(i, j + 1), -cy);
            else
                diag += cy;
            trip.emplace_back(k, k, diag);
        }
    }
    g->stiffness_.resize(n, n);
    g->stiffness_.setFromTriplets(trip.begin(), trip.end());
    g->stiffness_.makeCompressed();
    return g;
}

double Grid::radius() const {
    if (kind_ != GridKind::Radial)
        throw std::logic_error("radius(): not a radial grid");
    return radius_;
}

double Grid::spacing() const {
    if (kind_ != GridKind::Radial)
        throw std::logic_error("spacing(): not a radial grid");
    return h_;
}

double Grid::length_x() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("length_x(): not a cartesian grid");
    return lx_;
}

double Grid::length_y() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("length_y(): not a cartesian grid");
    return ly_;
}

int Grid::count_x() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("count_x(): not a cartesian grid");
    return nx_;
}

int Grid::count_y() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("count_y(): not a cartesian grid");
    return ny_;
}

double Grid::spacing_x() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("spacing_x(): not a cartesian grid");
    return hx_;
}

double Grid::spacing_y() const {
    if (kind_ != GridKind::Cartesian)
        throw std::logic_error("spacing_y(): not a cartesian grid");
    return hy_;
}

double Grid::max_spacing() const {
    return kind_ == GridKind::Radial ? h_ : std::max(hx_, hy_);
}

Eigen::VectorXd Grid::apply_neg_laplacian(const Eigen::VectorXd& f) const {
    return (stiffness_ * f).cwiseQuotient(weights_);
}

const Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>& Grid::factorization() const {
    std::call_once(factor_once_, [this] {
        auto fac = std::make_unique<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
        fac->compute(stiffness_);
        if (fac->info() != Eigen::Success)
            throw NumericFailure("grid stiffness factorization failed", 0.0);
        factor_ = std::move(fac);
    });
    return *factor_;
}

Eigen::VectorXd Grid::poisson_solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd b = weights_.cwiseProduct(rhs);
    Eigen::VectorXd u = factorization().solve(b);
    if (factorization().info() != Eigen::Success)
        throw NumericFailure("poisson solve failed", std::numeric_limits<double>::quiet_NaN());
    return u;
}

bool Grid::same_as(const Grid& other) const {
    if (kind_ != other.kind_)
        return false;
    if (kind_ == GridKind::Radial)
        return radius_ == other.radius_ && n_ == other.n_;
    return lx_ == other.lx_ && ly_ == other.ly_ && nx_ == other.nx_ && ny_ == other.ny_;
}

GridPtr build_radial_grid(double radius, int node_count) {
    return Grid::radial(radius, node_count);
}

GridPtr build_cartesian_grid(double length_x, double length_y, int count_x, int count_y) {
    return Grid::cartesian(length_x, length_y, count_x, count_y);
}

bool compatible(const GridPtr& a, const GridPtr& b) {
    if (!a || !b)
        return false;
    return a == b || a->same_as(*b);
}

} // namespace plateopt
