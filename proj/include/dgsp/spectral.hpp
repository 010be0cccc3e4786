#ifndef DGSP_SPECTRAL_HPP
#define DGSP_SPECTRAL_HPP

#include <string>

#include <Eigen/Core>

#include "dgsp/operator_space.hpp"

namespace dgsp {

/// Spectral coefficients f_hat: (#atoms) x n, entry (j,i) = <f, u_{X_j,i}>.
struct SpectralCoefficients {
    Eigen::MatrixXd values;
    std::string space_id;
};

/// Fiber field q: (#atoms) x n, entry (j,v) = q(X_j, v).
struct FiberField {
    Eigen::MatrixXd values;
    std::string space_id;
};

/// Distributional Fourier transform F_X.
SpectralCoefficients fourier(const OperatorSpace& space, const Signal& f);

/// Left inverse: sum_j w_j sum_i g(j,i) u_{X_j,i}.
Signal inverse_fourier(const OperatorSpace& space, const SpectralCoefficients& g);

/// Per-atom synthesis: q(X_j, v) = sum_i g(j,i) u_{X_j,i}(v).
FiberField alpha(const OperatorSpace& space, const SpectralCoefficients& g);

/// Weighted average over atoms: sum_j w_j q(X_j, .).
Signal beta(const OperatorSpace& space, const FiberField& q);

void check_space_match(const OperatorSpace& space, const std::string& other_id,
                       const char* what);

}  // namespace dgsp

#endif  // DGSP_SPECTRAL_HPP
