#include "dgsp/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "dgsp/filters.hpp"
#include "dgsp/spectral.hpp"

namespace dgsp {

namespace {

void check_band(const OperatorSpace& space, const BandSpec& y,
                const char* what) {
    check_space_match(space, y.space_id, what);
    if (y.mask.rows() != static_cast<Eigen::Index>(space.num_atoms()) ||
        y.mask.cols() != space.n())
        throw std::invalid_argument(std::string(what) + ": band shape mismatch");
}

SpectralKernel indicator_kernel(const OperatorSpace& space, const BandSpec& y) {
    SpectralKernel k;
    k.space_id = space.id;
    k.values = y.mask.cast<double>().matrix();
    return k;
}

}  // namespace

BandSpec lowpass_band(const OperatorSpace& space, int count) {
    if (count < 0 || count > space.n())
        throw std::invalid_argument("lowpass_band: count out of range");
    BandSpec y;
    y.space_id = space.id;
    y.mask.resize(static_cast<Eigen::Index>(space.num_atoms()), space.n());
    y.mask.setConstant(false);
    y.mask.leftCols(count).setConstant(true);
    return y;
}

BandSpec full_band(const OperatorSpace& space) {
    return lowpass_band(space, static_cast<int>(space.n()));
}

Eigen::MatrixXd bandpass_matrix(const OperatorSpace& space, const BandSpec& y) {
    check_band(space, y, "bandpass_matrix");
    return filter_matrix(space, indicator_kernel(space, y));
}

double bandlimit_residual(const OperatorSpace& space, const BandSpec& y,
                          const Signal& f) {
    check_band(space, y, "bandlimit_residual");
    SpectralKernel k = indicator_kernel(space, y);
    return (convolve(space, k, f) - f).norm();
}

BandpassSpectrum bandpass_spectrum(const OperatorSpace& space,
                                   const BandSpec& y) {
    Eigen::MatrixXd b = bandpass_matrix(space, y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("bandpass_spectrum: eigendecomposition failed");
    BandpassSpectrum out;
    out.eigenvalues = es.eigenvalues();  // ascending
    out.eigenvectors = es.eigenvectors();
    if (out.eigenvalues.minCoeff() < -1e-10 ||
        out.eigenvalues.maxCoeff() > 1.0 + 1e-10)
        throw std::runtime_error(
            "bandpass_spectrum: eigenvalue outside [0,1] beyond tolerance");
    out.eigenvalues = out.eigenvalues.cwiseMax(0.0).cwiseMin(1.0);
    canonicalize_signs(out.eigenvectors);
    return out;
}

bool coefficient_bound_check(const OperatorSpace& space, const BandSpec& y,
                             const Signal& f, double eps) {
    BandpassSpectrum sp = bandpass_spectrum(space, y);
    Eigen::VectorXd a = sp.eigenvectors.transpose() * f;
    double partial = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        partial += a(j) * a(j);
        double lam = sp.eigenvalues(j);
        if (lam >= 1.0 - 1e-14) continue;
        double rhs = eps * eps / ((1.0 - lam) * (1.0 - lam));
        if (partial > rhs + 1e-10 * std::max(1.0, rhs)) return false;
    }
    return true;
}

RecoveryPlan plan_recovery(const OperatorSpace& space, const BandSpec& y, int j,
                           std::mt19937_64& rng,
                           const std::optional<std::vector<int>>& vertices,
                           double cond_threshold, int retry_cap) {
    check_band(space, y, "plan_recovery");
    const int n = static_cast<int>(space.n());
    if (j < 0 || j >= n)
        throw std::invalid_argument("plan_recovery: require 0 <= j < n");
    BandpassSpectrum sp = bandpass_spectrum(space, y);

    RecoveryPlan plan;
    plan.j = j;
    plan.lambda_j = (j == 0) ? 0.0 : sp.eigenvalues(j - 1);
    plan.u_gt = sp.eigenvectors.rightCols(n - j);

    auto evaluate = [&](const std::vector<int>& vs, RecoveryPlan& p) {
        p.vertices = vs;
        p.g.resize(n - j, n - j);
        for (int r = 0; r < n - j; ++r)
            p.g.row(r) = plan.u_gt.row(vs[static_cast<std::size_t>(r)]);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(p.g);
        double smin = svd.singularValues().minCoeff();
        double smax = svd.singularValues().maxCoeff();
        p.sigma = (smin > 0.0) ? 1.0 / smin
                               : std::numeric_limits<double>::infinity();
        p.log_abs_det = svd.singularValues().array().log().sum();
        return (smin > 0.0) ? smax / smin
                            : std::numeric_limits<double>::infinity();
    };

    if (vertices) {
        if (static_cast<int>(vertices->size()) != n - j)
            throw std::invalid_argument("plan_recovery: need n-j vertices");
        for (int v : *vertices)
            if (v < 0 || v >= n)
                throw std::invalid_argument("plan_recovery: vertex out of range");
        double cond = evaluate(*vertices, plan);
        if (cond > cond_threshold)
            throw std::invalid_argument(
                "plan_recovery: given vertex set has condition number " +
                std::to_string(cond));
        return plan;
    }

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    double best_cond = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        std::vector<int> pool = all;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> vs(pool.begin(), pool.begin() + (n - j));
        std::sort(vs.begin(), vs.end());
        RecoveryPlan cand = plan;
        double cond = evaluate(vs, cand);
        if (cond <= cond_threshold) return cand;
        best_cond = std::min(best_cond, cond);
    }
    throw std::runtime_error(
        "plan_recovery: no vertex set within condition threshold after " +
        std::to_string(retry_cap) + " draws; best condition " +
        std::to_string(best_cond));
}

RecoveryResult recover(const RecoveryPlan& plan, const Eigen::VectorXd& f_obs,
                       double eps) {
    if (f_obs.size() != static_cast<Eigen::Index>(plan.vertices.size()))
        throw std::invalid_argument("recover: observation length mismatch");
    if (plan.lambda_j >= 1.0 - 1e-10)
        throw std::invalid_argument(
            "recover: lambda_j too close to 1, bound degenerate");
    RecoveryResult out;
    Eigen::VectorXd coeffs = plan.g.partialPivLu().solve(f_obs);
    out.f = plan.u_gt * coeffs;
    double ratio = (1.0 + plan.sigma) / (1.0 - plan.lambda_j);
    out.bound_a = eps * ratio;
    out.bound_b = eps * (1.0 + 2.0 * ratio);
    return out;
}

}  // namespace dgsp
