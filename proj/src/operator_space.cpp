#include "dgsp/operator_space.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace dgsp {

namespace {

std::string next_space_id() {
    static std::atomic<unsigned long> counter{0};
    return "space-" + std::to_string(counter.fetch_add(1));
}

}  // namespace

void canonicalize_signs(Eigen::MatrixXd& u) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            double a = std::abs(u(r, c));
            if (a > best + 1e-14) {  // strictly larger; ties keep lowest index
                best = a;
                pivot = r;
            }
        }
        if (u(pivot, c) < 0.0) u.col(c) = -u.col(c);
    }
}

ShiftOperator::ShiftOperator(const Eigen::MatrixXd& matrix, double symmetry_tol) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("ShiftOperator: matrix must be square");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    if (asym > symmetry_tol * scale)
        throw std::invalid_argument(
            "ShiftOperator: matrix not symmetric, max asymmetry " +
            std::to_string(asym));
    matrix_ = 0.5 * (matrix + matrix.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix_);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("ShiftOperator: eigendecomposition failed");
    const Eigen::VectorXd ev = es.eigenvalues();
    const Eigen::MatrixXd evec = es.eigenvectors();

    // Order increasingly in |lambda|; ties by signed value, then original index.
    const Eigen::Index n = ev.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) {
                         double aa = std::abs(ev(a)), ab = std::abs(ev(b));
                         if (aa != ab) return aa < ab;
                         return ev(a) < ev(b);
                     });
    eigenvalues_.resize(n);
    eigenvectors_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        eigenvalues_(i) = ev(order[static_cast<std::size_t>(i)]);
        eigenvectors_.col(i) = evec.col(order[static_cast<std::size_t>(i)]);
    }
    canonicalize_signs(eigenvectors_);
}

bool ShiftOperator::has_repeated_eigenvalues(double rel_gap) const {
    const double scale =
        std::max(1.0, eigenvalues_.cwiseAbs().maxCoeff());
    // Eigenvalues sorted by |.|, so nearest pairs in absolute value are
    // adjacent; compare all pairs anyway since n is desk scale.
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
        for (Eigen::Index j = i + 1; j < eigenvalues_.size(); ++j)
            if (std::abs(eigenvalues_(i) - eigenvalues_(j)) < rel_gap * scale)
                return true;
    return false;
}

ShiftOperator make_operator(const Eigen::MatrixXd& matrix, double symmetry_tol) {
    return ShiftOperator(matrix, symmetry_tol);
}

OperatorSpace discrete_space(std::vector<ShiftOperator> atoms,
                             const std::vector<double>& weights) {
    if (atoms.empty()) throw std::invalid_argument("discrete_space: no atoms");
    if (atoms.size() != weights.size())
        throw std::invalid_argument("discrete_space: atom/weight count mismatch");
    const Eigen::Index n = atoms.front().n();
    for (const auto& a : atoms)
        if (a.n() != n)
            throw std::invalid_argument("discrete_space: atom dimension mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0)
            throw std::invalid_argument("discrete_space: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("discrete_space: weights sum to " +
                                    std::to_string(sum) + ", expected 1");
    OperatorSpace space;
    space.atoms = std::move(atoms);
    space.weights.resize(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t j = 0; j < weights.size(); ++j)
        space.weights(static_cast<Eigen::Index>(j)) = weights[j] / sum;
    space.id = next_space_id();
    return space;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_01(int nodes) {
    if (nodes < 1) throw std::invalid_argument("gauss_legendre_01: nodes < 1");
    // Golub-Welsch: nodes on [-1,1] are eigenvalues of the Jacobi matrix,
    // weights are 2 * (first eigenvector component)^2.
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nodes, nodes);
    for (int i = 1; i < nodes; ++i) {
        double b = i / std::sqrt(4.0 * i * i - 1.0);
        jac(i, i - 1) = b;
        jac(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    std::vector<double> t(static_cast<std::size_t>(nodes));
    std::vector<double> w(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        // map [-1,1] -> [0,1]
        t[static_cast<std::size_t>(i)] = 0.5 * (es.eigenvalues()(i) + 1.0);
        double v0 = es.eigenvectors()(0, i);
        w[static_cast<std::size_t>(i)] = v0 * v0;  // 2*v0^2 * (1/2 interval scale)
    }
    return {t, w};
}

OperatorSpace convex_family(const ShiftOperator& l0, const ShiftOperator& l1,
                            int nodes, const DensityFn& density) {
    if (l0.n() != l1.n())
        throw std::invalid_argument("convex_family: dimension mismatch");
    auto [t, qw] = gauss_legendre_01(nodes);
    std::vector<ShiftOperator> atoms;
    atoms.reserve(t.size());
    std::vector<double> weights(t.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        Eigen::MatrixXd m =
            (1.0 - t[j]) * l0.matrix() + t[j] * l1.matrix();
        atoms.emplace_back(m);
        double d = density ? density(t[j]) : 1.0;
        if (d < 0.0)
            throw std::invalid_argument("convex_family: negative density value");
        weights[j] = qw[j] * d;
        sum += weights[j];
    }
    if (sum <= 0.0)
        throw std::invalid_argument("convex_family: density vanishes at all nodes");
    OperatorSpace space;
    space.atoms = std::move(atoms);
    space.weights.resize(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t j = 0; j < weights.size(); ++j)
        space.weights(static_cast<Eigen::Index>(j)) = weights[j] / sum;
    space.params = t;
    space.id = next_space_id();
    return space;
}

Eigen::MatrixXd expected_operator(const OperatorSpace& space, int power) {
    if (power < 0)
        throw std::invalid_argument("expected_operator: negative power");
    const Eigen::Index n = space.n();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
        for (int k = 0; k < power; ++k) p = p * space.atoms[j].matrix();
        acc += space.weights(static_cast<Eigen::Index>(j)) * p;
    }
    return acc;
}

}  // namespace dgsp
