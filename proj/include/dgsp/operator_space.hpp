#ifndef DGSP_OPERATOR_SPACE_HPP
#define DGSP_OPERATOR_SPACE_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dgsp {

using Signal = Eigen::VectorXd;

/**
 * Symmetric shift operator with a cached eigendecomposition.
 *
 * Eigenvalues are ordered increasingly in absolute value (ties broken by
 * signed value ascending, then by original index). Each eigenvector has a
 * canonical sign: its largest-magnitude component is positive, ties broken
 * by the lowest index.
 */
class ShiftOperator {
public:
    explicit ShiftOperator(const Eigen::MatrixXd& matrix,
                           double symmetry_tol = 1e-10);

    const Eigen::MatrixXd& matrix() const { return matrix_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
    Eigen::Index n() const { return matrix_.rows(); }

    /// True if some pair of eigenvalues has relative gap below rel_gap.
    bool has_repeated_eigenvalues(double rel_gap = 1e-8) const;

private:
    Eigen::MatrixXd matrix_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

/// Canonicalize eigenvector signs in place (columns of u).
void canonicalize_signs(Eigen::MatrixXd& u);

/**
 * Finite weighted collection of shift operators, optionally carrying a
 * scalar parametrization (strictly increasing params, one per atom).
 * Weights are nonnegative and sum to 1.
 */
struct OperatorSpace {
    std::vector<ShiftOperator> atoms;
    Eigen::VectorXd weights;
    std::vector<double> params;  // empty when the space is not parametrized
    std::string id;

    std::size_t num_atoms() const { return atoms.size(); }
    Eigen::Index n() const { return atoms.empty() ? 0 : atoms.front().n(); }
    bool has_params() const { return !params.empty(); }
};

ShiftOperator make_operator(const Eigen::MatrixXd& matrix,
                            double symmetry_tol = 1e-10);

/// Weights must be nonnegative with sum within 1e-6 of 1; they are
/// renormalized to sum exactly 1.
OperatorSpace discrete_space(std::vector<ShiftOperator> atoms,
                             const std::vector<double>& weights);

using DensityFn = std::function<double(double)>;

/**
 * Quadrature-discretized convex family L_t = (1-t) L0 + t L1, t in [0,1].
 *
 * Uses Gauss-Legendre nodes on [0,1]; weights are quadrature weights times
 * density(t_j), renormalized to sum 1. A null density means uniform.
 */
OperatorSpace convex_family(const ShiftOperator& l0, const ShiftOperator& l1,
                            int nodes, const DensityFn& density = nullptr);

/// E[X^k] = sum_j w_j (X_j)^k, accumulated in ascending atom order.
Eigen::MatrixXd expected_operator(const OperatorSpace& space, int power);

/// Gauss-Legendre nodes and weights on [0, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_01(int nodes);

}  // namespace dgsp

#endif  // DGSP_OPERATOR_SPACE_HPP
