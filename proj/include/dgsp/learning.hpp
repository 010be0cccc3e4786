#ifndef DGSP_LEARNING_HPP
#define DGSP_LEARNING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dgsp/basechange.hpp"
#include "dgsp/operator_space.hpp"

namespace dgsp {

/// Fraction of signal energy above cutoff c (1-based frequency index),
/// w.r.t. the classical GFT of `op`. Result in [0,1].
double loss_spectral_compaction(const ShiftOperator& op, const Signal& f,
                                int cutoff);

/// 0-1 detection loss: e^2 = sum_{i in band} <u_i, f>^2 (0-based indices),
/// loss = |1(e > eps_tau) - label|.
double loss_zero_one_detection(const ShiftOperator& op, const Signal& f,
                               const std::vector<int>& band, double eps_tau,
                               int label);

/// Detection statistic e = sqrt(sum_{i in band} <u_i, f>^2).
double detection_statistic(const ShiftOperator& op, const Signal& f,
                           const std::vector<int>& band);

using AtomLoss = std::function<double(const ShiftOperator&, std::size_t sample)>;

/// theta(X_j) = (1/m) sum_i loss(X_j, i).
Eigen::VectorXd empirical_risk(const OperatorSpace& space,
                               std::size_t num_samples, const AtomLoss& loss);

/// Gibbs weights w_j proportional to exp(-gamma theta_j) prior_j, computed
/// with max-subtraction. Uniform prior when `prior` is empty.
Eigen::VectorXd gibbs_posterior_exact(const Eigen::VectorXd& theta,
                                      double gamma,
                                      const Eigen::VectorXd& prior =
                                          Eigen::VectorXd());

struct GibbsConfig {
    double gamma = 10.0;
    long chain_length = 50000;
    long burn_in = 5000;
    long thinning = 5;
    double step_size = 0.05;
    std::uint64_t seed = 0;
    // Parameter interval for the random walk.
    double t_min = 0.0;
    double t_max = 1.0;
};

/// Voronoi cell masses of the quadrature nodes on [lo, hi]; the discretized
/// uniform measure used as the default MH binning reference.
std::vector<double> node_cell_masses(const std::vector<double>& params,
                                     double lo, double hi);

struct MhResult {
    Eigen::VectorXd histogram;  // normalized mass per quadrature node
    double acceptance_rate = 0.0;
    double ess = 0.0;  // effective sample size estimate
    std::vector<std::string> warnings;
    std::vector<double> samples;  // post burn-in, thinned parameter draws
};

/**
 * Random-walk Metropolis-Hastings on the parameter interval of `space`
 * (reflecting boundaries, symmetric uniform proposal). Target density is
 * exp(-gamma risk(t)) prior(t). Samples are binned to the nearest
 * quadrature node.
 */
MhResult metropolis_hastings(const OperatorSpace& space,
                             const std::function<double(double)>& risk,
                             const GibbsConfig& config,
                             const DensityFn& prior = nullptr);

enum class PosteriorForm {
    theta_prior,            // exp(-gamma theta) p0
    theta_pushed_prior,     // exp(-gamma theta) h_*(p0)
    pushed_theta_prior,     // exp(-gamma h_*(theta)) p0
    pushed_theta_pushed_prior,
};

/// h_*(theta)(X) = fiber-weighted average of theta over the preimage.
Eigen::VectorXd pushforward_risk(const BaseChangeMap& h,
                                 const Eigen::VectorXd& theta_z);

/// Pushforward of a discrete prior from Z-atoms to X-atoms.
Eigen::VectorXd pushforward_prior(const BaseChangeMap& h,
                                  const Eigen::VectorXd& prior_z);

/**
 * Gibbs posterior on X under one of the four base-changed combinations.
 * theta_x / prior_x are used directly; theta_z / prior_z are pushed through
 * h when the selected form requires it.
 */
Eigen::VectorXd base_changed_posterior(PosteriorForm form,
                                       const BaseChangeMap& h, double gamma,
                                       const Eigen::VectorXd& theta_x,
                                       const Eigen::VectorXd& theta_z,
                                       const Eigen::VectorXd& prior_x,
                                       const Eigen::VectorXd& prior_z);

}  // namespace dgsp

#endif  // DGSP_LEARNING_HPP
