#ifndef DGSP_TEST_HELPERS_HPP
#define DGSP_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include <Eigen/Core>

#include "dgsp/operator_space.hpp"
#include "dgsp/filters.hpp"

namespace dgsp_test {

inline Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = normal(rng);
    return 0.5 * (m + m.transpose());
}

inline dgsp::OperatorSpace random_space(int n, int atoms, std::mt19937_64& rng) {
    std::vector<dgsp::ShiftOperator> ops;
    std::vector<double> weights;
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    double sum = 0.0;
    for (int j = 0; j < atoms; ++j) {
        ops.emplace_back(random_symmetric(n, rng));
        weights.push_back(unif(rng));
        sum += weights.back();
    }
    for (double& w : weights) w /= sum;
    return dgsp::discrete_space(std::move(ops), weights);
}

inline dgsp::Signal random_signal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    dgsp::Signal f(n);
    for (int i = 0; i < n; ++i) f(i) = normal(rng);
    return f;
}

inline dgsp::SpectralKernel random_kernel(const dgsp::OperatorSpace& space,
                                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    dgsp::SpectralKernel k;
    k.space_id = space.id;
    k.values.resize(static_cast<Eigen::Index>(space.num_atoms()), space.n());
    for (Eigen::Index r = 0; r < k.values.rows(); ++r)
        for (Eigen::Index c = 0; c < k.values.cols(); ++c)
            k.values(r, c) = unif(rng);
    return k;
}

}  // namespace dgsp_test

#endif
