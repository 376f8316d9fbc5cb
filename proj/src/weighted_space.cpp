#include "weighted_space.hpp"

#include <cmath>

namespace qcontract {

WeightedSpace::WeightedSpace(MonotoneFn f, DensityOperator sigma, double p)
    : f_(std::move(f)), sigma_(std::move(sigma)), p_(p) {
    if (p != 1.0 && p != -1.0 && p != 0.5 && p != -0.5)
        fail(ErrorKind::DomainError, "WeightedSpace: power must be one of {-1, -1/2, 1/2, 1}");

    const Index d = sigma_.dim();
    const RealVector& lam = sigma_.eigenvalues();
    const double cutoff = sigma_.rank_cutoff();

    weights_real_ = RealMatrix(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) {
            const double li = lam(i) > cutoff ? lam(i) : 0.0;
            const double lj = lam(j) > cutoff ? lam(j) : 0.0;
            const double pf = f_.perspective(li, lj);
            weights_real_(i, j) = pf == 0.0 ? 0.0 : std::pow(pf, p_);
        }
    weights_ = weights_real_.cast<Complex>();

    if (p_ < 0.0 && !sigma_.full_rank() && !f_.flags().support_restricting) rank_deficient_warning_ = true;

    const Matrix u = sigma_.eigenvectors().leftCols(sigma_.rank());
    support_projector_ = u * u.adjoint();
}

Matrix WeightedSpace::to_basis(const Matrix& x) const {
    return sigma_.eigenvectors().adjoint() * x * sigma_.eigenvectors();
}

Matrix WeightedSpace::from_basis(const Matrix& x) const {
    return sigma_.eigenvectors() * x * sigma_.eigenvectors().adjoint();
}

Matrix WeightedSpace::apply(const Matrix& x) const {
    require_dims(x, sigma_.dim(), sigma_.dim(), "WeightedSpace::apply");
    return from_basis(weights_.cwiseProduct(to_basis(x)));
}

Complex WeightedSpace::inner_product_in_basis(const Matrix& x_coords, const Matrix& y_coords) const {
    return (x_coords.conjugate().cwiseProduct(weights_).cwiseProduct(y_coords)).sum();
}

Complex WeightedSpace::inner_product(const Matrix& x, const Matrix& y) const {
    require_dims(x, sigma_.dim(), sigma_.dim(), "WeightedSpace::inner_product");
    require_dims(y, sigma_.dim(), sigma_.dim(), "WeightedSpace::inner_product");
    return inner_product_in_basis(to_basis(x), to_basis(y));
}

Complex expectation(const DensityOperator& sigma, const Matrix& x) {
    require_dims(x, sigma.dim(), sigma.dim(), "expectation");
    return (sigma.matrix() * x).trace();
}

Complex covariance(const MonotoneFn& f, const DensityOperator& sigma, const Matrix& x, const Matrix& y) {
    if (!f.flags().normalized) fail(ErrorKind::DomainError, "covariance: f must be normalized");
    const Matrix eye = Matrix::Identity(sigma.dim(), sigma.dim());
    const Matrix xc = x - expectation(sigma, x) * eye;
    const Matrix yc = y - expectation(sigma, y) * eye;
    return WeightedSpace(f, sigma, 1.0).inner_product(xc, yc);
}

double variance(const MonotoneFn& f, const DensityOperator& sigma, const Matrix& x) {
    return covariance(f, sigma, x, x).real();
}

} // namespace qcontract
