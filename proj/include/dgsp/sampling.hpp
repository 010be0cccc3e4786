#ifndef DGSP_SAMPLING_HPP
#define DGSP_SAMPLING_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dgsp/operator_space.hpp"

namespace dgsp {

/// Measurable set Y as a boolean (#atoms) x n mask.
struct BandSpec {
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
    std::string space_id;
};

/// Y containing the lowest `count` frequency indices of every atom.
BandSpec lowpass_band(const OperatorSpace& space, int count);

BandSpec full_band(const OperatorSpace& space);

/// Band-pass filter matrix B_Y; symmetric with spectrum in [0,1].
Eigen::MatrixXd bandpass_matrix(const OperatorSpace& space, const BandSpec& y);

/// ||B_Y f - f||; f is (Y,eps)-bandlimited iff the result is <= eps.
double bandlimit_residual(const OperatorSpace& space, const BandSpec& y,
                          const Signal& f);

struct BandpassSpectrum {
    Eigen::VectorXd eigenvalues;   // ascending, clamped into [0,1]
    Eigen::MatrixXd eigenvectors;  // orthonormal columns, canonical signs
};

BandpassSpectrum bandpass_spectrum(const OperatorSpace& space,
                                   const BandSpec& y);

/**
 * Checks the coefficient bound sum_{i<=j} a_i^2 <= eps^2/(1-lambda_j)^2 for
 * every j with lambda_j != 1, where a are the coordinates of f in the B_Y
 * eigenbasis. Always true when eps >= bandlimit_residual(f); exposed so the
 * test suite can exercise it.
 */
bool coefficient_bound_check(const OperatorSpace& space, const BandSpec& y,
                             const Signal& f, double eps);

struct RecoveryPlan {
    int j = 0;
    std::vector<int> vertices;  // size n - j
    Eigen::MatrixXd u_gt;       // n x (n-j), eigenvectors u_{j+1..n} of B_Y
    Eigen::MatrixXd g;          // (n-j) x (n-j) recovery matrix
    double sigma = 0.0;         // operator norm of G^{-1}
    double lambda_j = 0.0;      // j-th eigenvalue of B_Y (0 when j = 0)
    double log_abs_det = 0.0;   // diagnostic
};

/**
 * Builds a recovery plan for band split index j. If no vertex set is given,
 * subsets of size n-j are drawn from rng, rejecting sets whose recovery
 * matrix condition number exceeds cond_threshold (up to retry_cap draws).
 */
RecoveryPlan plan_recovery(const OperatorSpace& space, const BandSpec& y, int j,
                           std::mt19937_64& rng,
                           const std::optional<std::vector<int>>& vertices =
                               std::nullopt,
                           double cond_threshold = 1e8, int retry_cap = 200);

struct RecoveryResult {
    Signal f;        // recovered signal U_{>j} G^{-1} f_obs
    double bound_a;  // eps (1 + sigma) / (1 - lambda_j)
    double bound_b;  // eps (1 + 2 (1 + sigma) / (1 - lambda_j))
};

RecoveryResult recover(const RecoveryPlan& plan, const Eigen::VectorXd& f_obs,
                       double eps);

}  // namespace dgsp

#endif  // DGSP_SAMPLING_HPP
