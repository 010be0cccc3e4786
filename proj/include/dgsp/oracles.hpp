#ifndef DGSP_ORACLES_HPP
#define DGSP_ORACLES_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "dgsp/basechange.hpp"
#include "dgsp/filters.hpp"
#include "dgsp/infection.hpp"
#include "dgsp/operator_space.hpp"

namespace dgsp::oracles {

// Brute-force reference implementations used to check the main code paths.
// They deliberately share no assembly logic with the operations they verify
// and are intended for desk-scale inputs only (n <= 64, #atoms <= 32).

/// sum_j w_j (U_j diag(Gamma_j) U_j^T) f with fully materialized matrices.
Signal oracle_convolve(const OperatorSpace& space, const SpectralKernel& kernel,
                       const Signal& f);

/// Per-atom classical GFT by explicit per-entry inner products.
Eigen::MatrixXd oracle_fourier(const OperatorSpace& space, const Signal& f);

/// Interpolating polynomial coefficients via a dense Vandermonde solve.
Eigen::VectorXd oracle_vandermonde_interp(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y);

/// Exhaustive symmetrized k-NN edge enumeration over all pairs.
std::vector<std::pair<int, int>> oracle_knn_edges(
    const std::vector<std::vector<double>>& points, int k);

/// Entrywise correlation-matrix thresholding.
std::vector<std::pair<int, int>> oracle_correlation_edges(
    const Eigen::MatrixXd& signals, double tau, bool use_absolute);

/// tau((I + W_T)^steps delta_s) via dense matrix powers.
Eigen::VectorXd oracle_snapshot(const PropagationTree& tree, int steps);

/// Full double-sum pullback measure evaluation.
Eigen::VectorXd oracle_pullback_weights(const BaseChangeMap& h,
                                        const Eigen::VectorXd& x_weights);

/// Gibbs weights by direct exponentiation (no max-subtraction).
Eigen::VectorXd oracle_gibbs(const Eigen::VectorXd& theta, double gamma,
                             const Eigen::VectorXd& prior);

struct SelfTestResult {
    std::string name;
    bool passed;
};

/// Seeded invariant suite behind the `selftest` CLI subcommand.
std::vector<SelfTestResult> run_selftest(std::uint64_t seed);

}  // namespace dgsp::oracles

#endif  // DGSP_ORACLES_HPP
