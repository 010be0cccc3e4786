#ifndef DGSP_FILTERS_HPP
#define DGSP_FILTERS_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "dgsp/operator_space.hpp"
#include "dgsp/spectral.hpp"

namespace dgsp {

/// Convolution kernel Gamma: (#atoms) x n, entry (j,i) = Gamma(X_j, i).
struct SpectralKernel {
    Eigen::MatrixXd values;
    std::string space_id;
};

/// Per-atom polynomial coefficients: entry (j,i) is the coefficient of X_j^i.
struct PolynomialFilterRep {
    Eigen::MatrixXd coeffs;
    std::string space_id;
};

/// Polynomial-in-t coefficient functions for each power of X.
struct BiPolynomialRep {
    // coeff_polys[i] holds the degree-<=d coefficients (ascending powers of t)
    // of a_i(t), for i = 0..k.
    std::vector<Eigen::VectorXd> coeff_polys;
    int degree_t = 0;
    int degree_x = 0;
    double fit_residual = 0.0;
};

/// Convolution filter applied to f via the spectral path.
Signal convolve(const OperatorSpace& space, const SpectralKernel& kernel,
                const Signal& f);

/// Dense matrix of the convolution filter: sum_j w_j U_j diag(Gamma_j) U_j^T.
Eigen::MatrixXd filter_matrix(const OperatorSpace& space,
                              const SpectralKernel& kernel);

/// Kernel induced by a signal g: Gamma = F_X(g).
SpectralKernel signal_kernel(const OperatorSpace& space, const Signal& g);

/**
 * Per-atom degree-(n-1) interpolating polynomial with p(lambda_{j,i}) =
 * Gamma(j,i). Requires pairwise-distinct eigenvalues in every atom.
 */
PolynomialFilterRep polynomial_rep(const OperatorSpace& space,
                                   const SpectralKernel& kernel);

/// E[R(X)] = sum_j w_j sum_i coeffs(j,i) X_j^i.
Eigen::MatrixXd apply_polynomial_rep(const OperatorSpace& space,
                                     const PolynomialFilterRep& rep);

/**
 * Fit a bi-polynomial representation of bi-degree (d, k): per-node polynomial
 * coefficients in X (least squares over the eigenvalues, exact interpolation
 * when k = n-1), then a degree-d weighted least-squares polynomial in t for
 * each coefficient function. Residual is the quadrature-weighted RMS of the
 * Frobenius mismatch against the fiberwise filter.
 */
BiPolynomialRep fit_bipolynomial(const OperatorSpace& space,
                                 const SpectralKernel& kernel, int d, int k);

/// Evaluate the fitted fiberwise filter matrix at parameter value t.
Eigen::MatrixXd bipolynomial_fiber_matrix(const BiPolynomialRep& rep,
                                          const Eigen::MatrixXd& x_t, double t);

/**
 * Two-level frequency mask: Gamma(j,i) = r1 for i < c (0-based, i.e. the
 * lowest c frequencies) and r2 otherwise, identical across atoms.
 */
SpectralKernel frequency_mask(const OperatorSpace& space, double r1, double r2,
                              int c);

/// Heterogeneous variant: per-atom (r1, r2, c) triples.
struct MaskParams {
    double r1;
    double r2;
    int c;
};
SpectralKernel frequency_mask(const OperatorSpace& space,
                              const std::vector<MaskParams>& per_atom);

}  // namespace dgsp

#endif  // DGSP_FILTERS_HPP
