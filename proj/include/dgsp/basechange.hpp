#ifndef DGSP_BASECHANGE_HPP
#define DGSP_BASECHANGE_HPP

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dgsp/filters.hpp"
#include "dgsp/operator_space.hpp"

namespace dgsp {

/**
 * Discretized measurable map h: Z -> X between operator spaces, with
 * fiberwise weights over each X-atom's preimage.
 */
struct BaseChangeMap {
    /// For each Z-atom index, the X-atom index it maps to.
    std::vector<int> target_of;
    /// For each X-atom, (z index, weight) pairs over its preimage; weights
    /// sum to 1 within each nonempty fiber. Empty vector = empty preimage.
    std::vector<std::vector<std::pair<int, double>>> fibers;

    std::size_t num_z() const { return target_of.size(); }
    std::size_t num_x() const { return fibers.size(); }
};

/// Build a map from targets with uniform fiberwise weights.
BaseChangeMap make_base_change(const std::vector<int>& target_of,
                               std::size_t num_x_atoms);

void validate_base_change(const BaseChangeMap& h);

/// X-atom weight = total weight of its Z-preimage; atoms off the image get 0.
OperatorSpace pushforward_measure(const BaseChangeMap& h,
                                  const OperatorSpace& z_space,
                                  const OperatorSpace& x_space);

/// h^*(F)(Z_j) = F(h(Z_j)).
std::vector<Eigen::MatrixXd> pullback_filter_family(
    const BaseChangeMap& h, const std::vector<Eigen::MatrixXd>& x_family);

/// Z-atom weight = sum over X-atoms of x_weight * fiber weight.
OperatorSpace pullback_measure(const BaseChangeMap& h,
                               const OperatorSpace& x_space,
                               const OperatorSpace& z_space);

/// h_*(F)(X_k) = fiber-weighted sum of F over the preimage of X_k.
std::vector<Eigen::MatrixXd> pushforward_filter_family(
    const BaseChangeMap& h, const std::vector<Eigen::MatrixXd>& z_family);

/// Pull a kernel on X back to Z: h^*(Gamma)(Z_j, i) = Gamma(h(Z_j), i).
SpectralKernel pullback_kernel(const BaseChangeMap& h,
                               const OperatorSpace& z_space,
                               const SpectralKernel& x_kernel);

/// F_{h^*(Gamma)}: convolution on Z with the pulled-back kernel.
Signal filter_pullback_conv(const BaseChangeMap& h,
                            const OperatorSpace& z_space,
                            const SpectralKernel& x_kernel, const Signal& f);

/// F_{h#,Gamma}: fiberwise convolution w.r.t. the image operator h(Z),
/// aggregated by mu_Z.
Signal filter_pushforward_conv(const BaseChangeMap& h,
                               const OperatorSpace& z_space,
                               const OperatorSpace& x_space,
                               const SpectralKernel& x_kernel,
                               const Signal& f);

/// Monotone bijection of [0,1]: h(z) = z eta / (1 - z + z eta).
struct StretchMap {
    double eta;
    double forward(double z) const { return z * eta / (1.0 - z + z * eta); }
    double inverse(double x) const { return x / (x + eta - x * eta); }
};

StretchMap stretch_map(double eta);

}  // namespace dgsp

#endif  // DGSP_BASECHANGE_HPP
