#include "dgsp/oracles.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "dgsp/learning.hpp"
#include "dgsp/sampling.hpp"
#include "dgsp/spectral.hpp"

namespace dgsp::oracles {

Signal oracle_convolve(const OperatorSpace& space, const SpectralKernel& kernel,
                       const Signal& f) {
    Signal out = Signal::Zero(space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        const Eigen::MatrixXd& u = space.atoms[j].eigenvectors();
        Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(space.n(), space.n());
        for (Eigen::Index i = 0; i < space.n(); ++i)
            diag(i, i) = kernel.values(static_cast<Eigen::Index>(j), i);
        Eigen::MatrixXd filter = u * diag * u.transpose();
        out += space.weights(static_cast<Eigen::Index>(j)) * (filter * f);
    }
    return out;
}

Eigen::MatrixXd oracle_fourier(const OperatorSpace& space, const Signal& f) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(space.num_atoms()), space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j)
        for (Eigen::Index i = 0; i < space.n(); ++i) {
            double acc = 0.0;
            for (Eigen::Index v = 0; v < space.n(); ++v)
                acc += f(v) * space.atoms[j].eigenvectors()(v, i);
            out(static_cast<Eigen::Index>(j), i) = acc;
        }
    return out;
}

Eigen::VectorXd oracle_vandermonde_interp(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y) {
    const Eigen::Index n = x.size();
    Eigen::MatrixXd vand(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        double p = 1.0;
        for (Eigen::Index c = 0; c < n; ++c) {
            vand(r, c) = p;
            p *= x(r);
        }
    }
    return vand.fullPivLu().solve(y);
}

std::vector<std::pair<int, int>> oracle_knn_edges(
    const std::vector<std::vector<double>>& points, int k) {
    const int n = static_cast<int>(points.size());
    auto dist2 = [&](int a, int b) {
        double s = 0.0;
        for (std::size_t i = 0; i < points[0].size(); ++i) {
            double d = points[static_cast<std::size_t>(a)][i] -
                       points[static_cast<std::size_t>(b)][i];
            s += d * d;
        }
        return s;
    };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // v is in u's k nearest iff fewer than k points beat it
            auto beats = [&](int target, int from) {
                int count = 0;
                for (int w = 0; w < n; ++w) {
                    if (w == from || w == target) continue;
                    double dw = dist2(from, w), dt = dist2(from, target);
                    if (dw < dt || (dw == dt && w < target)) ++count;
                }
                return count < k;
            };
            if (beats(v, u) || beats(u, v)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::vector<std::pair<int, int>> oracle_correlation_edges(
    const Eigen::MatrixXd& signals, double tau, bool use_absolute) {
    const Eigen::Index n = signals.rows();
    std::vector<std::pair<int, int>> edges;
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u + 1; v < n; ++v) {
            double mu = signals.row(u).mean(), mv = signals.row(v).mean();
            double num = 0.0, du = 0.0, dv = 0.0;
            for (Eigen::Index i = 0; i < signals.cols(); ++i) {
                num += (signals(u, i) - mu) * (signals(v, i) - mv);
                du += (signals(u, i) - mu) * (signals(u, i) - mu);
                dv += (signals(v, i) - mv) * (signals(v, i) - mv);
            }
            double corr = num / std::sqrt(du * dv);
            double stat = use_absolute ? std::abs(corr) : corr;
            if (stat >= tau)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return edges;
}

Eigen::VectorXd oracle_snapshot(const PropagationTree& tree, int steps) {
    const int n = tree.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int v = 0; v < n; ++v) {
        if (v == tree.source) continue;
        int p = tree.parent[static_cast<std::size_t>(v)];
        a(v, p) = 1.0;
        a(p, v) = 1.0;
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    x(tree.source) = 1.0;
    for (int i = 0; i < steps; ++i) x = a * x;
    for (int v = 0; v < n; ++v) x(v) = (x(v) != 0.0) ? 1.0 : 0.0;
    return x;
}

Eigen::VectorXd oracle_pullback_weights(const BaseChangeMap& h,
                                        const Eigen::VectorXd& x_weights) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h.num_z()));
    for (Eigen::Index z = 0; z < out.size(); ++z)
        for (std::size_t x = 0; x < h.num_x(); ++x)
            for (auto [zz, w] : h.fibers[x])
                if (zz == static_cast<int>(z)) out(z) += x_weights(static_cast<Eigen::Index>(x)) * w;
    return out;
}

Eigen::VectorXd oracle_gibbs(const Eigen::VectorXd& theta, double gamma,
                             const Eigen::VectorXd& prior) {
    Eigen::VectorXd w(theta.size());
    for (Eigen::Index j = 0; j < theta.size(); ++j)
        w(j) = std::exp(-gamma * theta(j)) *
               (prior.size() ? prior(j) : 1.0);
    return w / w.sum();
}

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = normal(rng);
    return 0.5 * (m + m.transpose());
}

OperatorSpace random_space(int n, int atoms, std::mt19937_64& rng) {
    std::vector<ShiftOperator> ops;
    std::vector<double> weights;
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    double sum = 0.0;
    for (int j = 0; j < atoms; ++j) {
        ops.emplace_back(random_symmetric(n, rng));
        weights.push_back(unif(rng));
        sum += weights.back();
    }
    for (double& w : weights) w /= sum;
    return discrete_space(std::move(ops), weights);
}

Signal random_signal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Signal f(n);
    for (int i = 0; i < n; ++i) f(i) = normal(rng);
    return f;
}

}  // namespace

std::vector<SelfTestResult> run_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SelfTestResult> results;
    auto record = [&](const std::string& name, bool ok) {
        results.push_back({name, ok});
    };

    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            OperatorSpace space = random_space(8, 4, rng);
            Signal f = random_signal(8, rng);
            Signal back = inverse_fourier(space, fourier(space, f));
            ok = (back - f).norm() <= 1e-10 * f.norm();
        }
        record("left-inverse", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            OperatorSpace space = random_space(8, 4, rng);
            Signal f = random_signal(8, rng);
            Eigen::MatrixXd fhat = fourier(space, f).values;
            double energy = 0.0;
            for (Eigen::Index j = 0; j < fhat.rows(); ++j)
                energy += space.weights(j) * fhat.row(j).squaredNorm();
            ok = std::abs(energy - f.squaredNorm()) <= 1e-10 * f.squaredNorm();
        }
        record("parseval", ok);
    }
    {
        bool ok = true;
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int rep = 0; rep < 50 && ok; ++rep) {
            OperatorSpace space = random_space(8, 4, rng);
            SpectralKernel kernel{Eigen::MatrixXd::NullaryExpr(
                                      4, 8, [&](Eigen::Index, Eigen::Index) {
                                          return unif(rng);
                                      }),
                                  space.id};
            Signal f = random_signal(8, rng);
            Signal a = convolve(space, kernel, f);
            Signal b = oracle_convolve(space, kernel, f);
            ok = (a - b).norm() <= 1e-12 * std::max(1.0, b.norm());
            if (ok) {
                Eigen::MatrixXd m = filter_matrix(space, kernel);
                ok = (m * f - b).norm() <= 1e-10 * std::max(1.0, b.norm());
            }
        }
        record("convolution-expectation-form", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 25 && ok; ++rep) {
            OperatorSpace space = random_space(6, 3, rng);
            BandSpec y = lowpass_band(space, 3);
            Eigen::MatrixXd b = bandpass_matrix(space, y);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
            ok = es.eigenvalues().minCoeff() >= -1e-10 &&
                 es.eigenvalues().maxCoeff() <= 1.0 + 1e-10;
        }
        record("bandpass-spectrum-range", ok);
    }
    {
        bool ok = true;
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int rep = 0; rep < 25 && ok; ++rep) {
            OperatorSpace z_space = random_space(6, 4, rng);
            OperatorSpace x_space = random_space(6, 3, rng);
            BaseChangeMap h = make_base_change({0, 1, 1, 2}, 3);
            SpectralKernel gamma{Eigen::MatrixXd::NullaryExpr(
                                     3, 6, [&](Eigen::Index, Eigen::Index) {
                                         return unif(rng);
                                     }),
                                 x_space.id};
            Signal f = random_signal(6, rng);
            Signal lhs = filter_pushforward_conv(h, z_space, x_space, gamma, f);
            OperatorSpace pushed = pushforward_measure(h, z_space, x_space);
            Signal rhs = convolve(pushed, gamma, f);
            ok = (lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm());
        }
        record("pushforward-filter-identity", ok);
    }
    {
        bool ok = true;
        Eigen::VectorXd theta(3), prior(3);
        theta << 0.3, 0.1, 0.7;
        prior << 1.0, 1.0, 1.0;
        Eigen::VectorXd a = gibbs_posterior_exact(theta, 5.0, prior);
        Eigen::VectorXd b = oracle_gibbs(theta, 5.0, prior);
        ok = (a - b).norm() <= 1e-14 && std::abs(a.sum() - 1.0) <= 1e-12;
        record("gibbs-exact", ok);
    }
    {
        bool ok = true;
        Graph g = grid_2d(5, 5);
        for (int rep = 0; rep < 25 && ok; ++rep) {
            PropagationTree t = random_bfs_tree(g, 0, rng);
            EdgeSet fast = random_fast_edges(g, 6, rng);
            PropagationTree rw = rewire_tree(g, fast, t);
            auto edges = tree_edges(rw);
            ok = static_cast<int>(edges.size()) == g.n - 1;
            for (auto e : fast)
                ok = ok && std::binary_search(edges.begin(), edges.end(), e);
        }
        record("rewire-structure", ok);
    }
    return results;
}

}  // namespace dgsp::oracles
