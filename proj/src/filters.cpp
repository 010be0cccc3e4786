#include "dgsp/filters.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace dgsp {

namespace {

void check_kernel(const OperatorSpace& space, const SpectralKernel& kernel,
                  const char* what) {
    check_space_match(space, kernel.space_id, what);
    if (kernel.values.rows() != static_cast<Eigen::Index>(space.num_atoms()) ||
        kernel.values.cols() != space.n())
        throw std::invalid_argument(std::string(what) + ": kernel shape mismatch");
}

/// Monomial coefficients of the interpolating polynomial through
/// (x_i, y_i), via Newton divided differences.
Eigen::VectorXd interpolating_coeffs(const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& y) {
    const Eigen::Index n = x.size();
    Eigen::VectorXd dd = y;  // divided-difference table, in place
    for (Eigen::Index level = 1; level < n; ++level)
        for (Eigen::Index i = n - 1; i >= level; --i)
            dd(i) = (dd(i) - dd(i - 1)) / (x(i) - x(i - level));
    // Expand Newton form sum_k dd_k prod_{m<k}(x - x_m) to monomials.
    Eigen::VectorXd coeffs = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd basis = Eigen::VectorXd::Zero(n);  // current product poly
    basis(0) = 1.0;
    Eigen::Index deg = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
        coeffs.head(deg + 1) += dd(k) * basis.head(deg + 1);
        if (k + 1 < n) {
            // basis *= (x - x_k)
            for (Eigen::Index p = deg + 1; p >= 1; --p)
                basis(p) = basis(p - 1) - x(k) * basis(p);
            basis(0) = -x(k) * basis(0);
            ++deg;
        }
    }
    return coeffs;
}

}  // namespace

Signal convolve(const OperatorSpace& space, const SpectralKernel& kernel,
                const Signal& f) {
    check_kernel(space, kernel, "convolve");
    if (f.size() != space.n())
        throw std::invalid_argument("convolve: signal length mismatch");
    Signal out = Signal::Zero(space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const Eigen::MatrixXd& u = space.atoms[j].eigenvectors();
        Eigen::VectorXd fhat = u.transpose() * f;
        fhat.array() *=
            kernel.values.row(static_cast<Eigen::Index>(j)).transpose().array();
        out += space.weights(static_cast<Eigen::Index>(j)) * (u * fhat);
    }
    return out;
}

Eigen::MatrixXd filter_matrix(const OperatorSpace& space,
                              const SpectralKernel& kernel) {
    check_kernel(space, kernel, "filter_matrix");
    const Eigen::Index n = space.n();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const Eigen::MatrixXd& u = space.atoms[j].eigenvectors();
        acc += space.weights(static_cast<Eigen::Index>(j)) * u *
               kernel.values.row(static_cast<Eigen::Index>(j))
                   .asDiagonal() *
               u.transpose();
    }
    return acc;
}

SpectralKernel signal_kernel(const OperatorSpace& space, const Signal& g) {
    SpectralCoefficients ghat = fourier(space, g);
    return SpectralKernel{std::move(ghat.values), space.id};
}

PolynomialFilterRep polynomial_rep(const OperatorSpace& space,
                                   const SpectralKernel& kernel) {
    check_kernel(space, kernel, "polynomial_rep");
    const Eigen::Index n = space.n();
    PolynomialFilterRep rep;
    rep.space_id = space.id;
    rep.coeffs.resize(static_cast<Eigen::Index>(space.num_atoms()), n);
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const Eigen::VectorXd& lam = space.atoms[j].eigenvalues();
        const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = a + 1; b < n; ++b)
                if (std::abs(lam(a) - lam(b)) < 1e-8 * scale)
                    throw std::invalid_argument(
                        "polynomial_rep: atom " + std::to_string(j) +
                        " has near-repeated eigenvalues " +
                        std::to_string(lam(a)) + " and " + std::to_string(lam(b)));
        rep.coeffs.row(static_cast<Eigen::Index>(j)) =
            interpolating_coeffs(
                lam, kernel.values.row(static_cast<Eigen::Index>(j)).transpose())
                .transpose();
    }
    return rep;
}

Eigen::MatrixXd apply_polynomial_rep(const OperatorSpace& space,
                                     const PolynomialFilterRep& rep) {
    check_space_match(space, rep.space_id, "apply_polynomial_rep");
    const Eigen::Index n = space.n();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const Eigen::MatrixXd& x = space.atoms[j].matrix();
        // Horner in matrix form over the per-atom coefficients.
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
        for (Eigen::Index i = rep.coeffs.cols() - 1; i >= 0; --i) {
            r = r * x;
            r.diagonal().array() += rep.coeffs(static_cast<Eigen::Index>(j), i);
        }
        acc += space.weights(static_cast<Eigen::Index>(j)) * r;
    }
    return acc;
}

BiPolynomialRep fit_bipolynomial(const OperatorSpace& space,
                                 const SpectralKernel& kernel, int d, int k) {
    check_kernel(space, kernel, "fit_bipolynomial");
    if (!space.has_params())
        throw std::invalid_argument("fit_bipolynomial: space has no params");
    if (k < 0 || k > space.n() - 1)
        throw std::invalid_argument("fit_bipolynomial: require 0 <= k <= n-1");
    if (d < 0) throw std::invalid_argument("fit_bipolynomial: d < 0");
    const Eigen::Index m = static_cast<Eigen::Index>(space.num_atoms());

    // Per-node polynomial-in-X coefficients by least squares over eigenvalues
    // (exact interpolation when k = n-1 and eigenvalues are distinct).
    Eigen::MatrixXd node_coeffs(m, k + 1);
    for (Eigen::Index j = 0; j < m; ++j) {
        const Eigen::VectorXd& lam =
            space.atoms[static_cast<std::size_t>(j)].eigenvalues();
        Eigen::MatrixXd vand(space.n(), k + 1);
        for (Eigen::Index i = 0; i < space.n(); ++i) {
            double p = 1.0;
            for (int q = 0; q <= k; ++q) {
                vand(i, q) = p;
                p *= lam(i);
            }
        }
        node_coeffs.row(j) =
            vand.colPivHouseholderQr()
                .solve(kernel.values.row(j).transpose())
                .transpose();
    }

    // Weighted least-squares fit of each coefficient function over t.
    Eigen::MatrixXd design(m, d + 1);
    for (Eigen::Index j = 0; j < m; ++j) {
        double p = 1.0;
        for (int q = 0; q <= d; ++q) {
            design(j, q) = p;
            p *= space.params[static_cast<std::size_t>(j)];
        }
    }
    Eigen::VectorXd sqrtw = space.weights.cwiseSqrt();
    Eigen::MatrixXd wdesign = sqrtw.asDiagonal() * design;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(wdesign);
    qr.setThreshold(1e-10);
    if (qr.rank() < d + 1)
        throw std::invalid_argument(
            "fit_bipolynomial: rank-deficient basis in t; lower d (have " +
            std::to_string(m) + " nodes, degree " + std::to_string(d) + ")");

    BiPolynomialRep rep;
    rep.degree_t = d;
    rep.degree_x = k;
    rep.coeff_polys.resize(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i)
        rep.coeff_polys[static_cast<std::size_t>(i)] =
            qr.solve(sqrtw.asDiagonal() * node_coeffs.col(i));

    // Residual against the exact fiberwise filters.
    double acc = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
        const auto& atom = space.atoms[static_cast<std::size_t>(j)];
        Eigen::MatrixXd exact = atom.eigenvectors() *
                                kernel.values.row(j).asDiagonal() *
                                atom.eigenvectors().transpose();
        Eigen::MatrixXd fitted = bipolynomial_fiber_matrix(
            rep, atom.matrix(), space.params[static_cast<std::size_t>(j)]);
        acc += space.weights(j) * (fitted - exact).squaredNorm();
    }
    rep.fit_residual = std::sqrt(acc);
    return rep;
}

Eigen::MatrixXd bipolynomial_fiber_matrix(const BiPolynomialRep& rep,
                                          const Eigen::MatrixXd& x_t,
                                          double t) {
    const Eigen::Index n = x_t.rows();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
    for (int i = static_cast<int>(rep.coeff_polys.size()) - 1; i >= 0; --i) {
        r = r * x_t;
        const Eigen::VectorXd& poly = rep.coeff_polys[static_cast<std::size_t>(i)];
        double a = 0.0;
        for (Eigen::Index q = poly.size() - 1; q >= 0; --q) a = a * t + poly(q);
        r.diagonal().array() += a;
    }
    return r;
}

SpectralKernel frequency_mask(const OperatorSpace& space, double r1, double r2,
                              int c) {
    std::vector<MaskParams> per_atom(space.num_atoms(), MaskParams{r1, r2, c});
    return frequency_mask(space, per_atom);
}

SpectralKernel frequency_mask(const OperatorSpace& space,
                              const std::vector<MaskParams>& per_atom) {
    if (per_atom.size() != space.num_atoms())
        throw std::invalid_argument("frequency_mask: per-atom params mismatch");
    SpectralKernel kernel;
    kernel.space_id = space.id;
    kernel.values.resize(static_cast<Eigen::Index>(space.num_atoms()), space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const MaskParams& p = per_atom[j];
        if (p.c < 1 || p.c > space.n())
            throw std::invalid_argument("frequency_mask: cutoff out of range");
        for (Eigen::Index i = 0; i < space.n(); ++i)
            kernel.values(static_cast<Eigen::Index>(j), i) =
                (i < p.c) ? p.r1 : p.r2;
    }
    return kernel;
}

}  // namespace dgsp
