#include "dgsp/learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace dgsp {

double loss_spectral_compaction(const ShiftOperator& op, const Signal& f,
                                int cutoff) {
    if (cutoff < 1 || cutoff > op.n())
        throw std::invalid_argument("loss_spectral_compaction: cutoff out of range");
    double norm2 = f.squaredNorm();
    if (norm2 <= 0.0)
        throw std::invalid_argument("loss_spectral_compaction: zero signal");
    Eigen::VectorXd fhat = op.eigenvectors().transpose() * f;
    double high = fhat.tail(op.n() - cutoff).squaredNorm();
    return std::sqrt(std::min(1.0, high / norm2));
}

double detection_statistic(const ShiftOperator& op, const Signal& f,
                           const std::vector<int>& band) {
    double e2 = 0.0;
    for (int i : band) {
        if (i < 0 || i >= op.n())
            throw std::invalid_argument("detection_statistic: band index out of range");
        double a = op.eigenvectors().col(i).dot(f);
        e2 += a * a;
    }
    return std::sqrt(e2);
}

double loss_zero_one_detection(const ShiftOperator& op, const Signal& f,
                               const std::vector<int>& band, double eps_tau,
                               int label) {
    if (label != 0 && label != 1)
        throw std::invalid_argument("loss_zero_one_detection: label must be 0 or 1");
    double e = detection_statistic(op, f, band);
    int detected = (e > eps_tau) ? 1 : 0;
    return std::abs(detected - label);
}

Eigen::VectorXd empirical_risk(const OperatorSpace& space,
                               std::size_t num_samples, const AtomLoss& loss) {
    if (num_samples == 0)
        throw std::invalid_argument("empirical_risk: no samples");
    Eigen::VectorXd theta(static_cast<Eigen::Index>(space.num_atoms()));
    for (std::size_t j = 0; j < space.num_atoms(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < num_samples; ++i)
            acc += loss(space.atoms[j], i);
        theta(static_cast<Eigen::Index>(j)) =
            acc / static_cast<double>(num_samples);
    }
    return theta;
}

Eigen::VectorXd gibbs_posterior_exact(const Eigen::VectorXd& theta,
                                      double gamma,
                                      const Eigen::VectorXd& prior) {
    const Eigen::Index m = theta.size();
    if (m == 0) throw std::invalid_argument("gibbs_posterior_exact: empty theta");
    Eigen::VectorXd p0 = prior.size() ? prior : Eigen::VectorXd::Ones(m);
    if (p0.size() != m)
        throw std::invalid_argument("gibbs_posterior_exact: prior size mismatch");
    Eigen::VectorXd logw(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        if (p0(j) < 0.0)
            throw std::invalid_argument("gibbs_posterior_exact: negative prior");
        logw(j) = (p0(j) > 0.0) ? -gamma * theta(j) + std::log(p0(j))
                                : -std::numeric_limits<double>::infinity();
    }
    double mx = logw.maxCoeff();
    if (!std::isfinite(mx))
        throw std::invalid_argument("gibbs_posterior_exact: prior vanishes everywhere");
    Eigen::VectorXd w(m);
    for (Eigen::Index j = 0; j < m; ++j)
        w(j) = std::isfinite(logw(j)) ? std::exp(logw(j) - mx) : 0.0;
    double sum = w.sum();
    if (sum <= 0.0)
        throw std::runtime_error(
            "gibbs_posterior_exact: all weights underflow; use smaller gamma");
    return w / sum;
}

std::vector<double> node_cell_masses(const std::vector<double>& params,
                                     double lo, double hi) {
    const std::size_t m = params.size();
    if (m == 0) throw std::invalid_argument("node_cell_masses: empty params");
    std::vector<double> masses(m);
    double span = hi - lo;
    for (std::size_t j = 0; j < m; ++j) {
        double left = (j == 0) ? lo : 0.5 * (params[j - 1] + params[j]);
        double right = (j + 1 == m) ? hi : 0.5 * (params[j] + params[j + 1]);
        masses[j] = (right - left) / span;
    }
    return masses;
}

MhResult metropolis_hastings(const OperatorSpace& space,
                             const std::function<double(double)>& risk,
                             const GibbsConfig& config, const DensityFn& prior) {
    if (!space.has_params())
        throw std::invalid_argument("metropolis_hastings: space has no params");
    if (config.burn_in >= config.chain_length)
        throw std::invalid_argument("metropolis_hastings: burn_in >= chain_length");
    if (config.step_size <= 0.0 || config.thinning < 1)
        throw std::invalid_argument("metropolis_hastings: bad step/thinning");
    const double lo = config.t_min, hi = config.t_max;
    if (!(hi > lo))
        throw std::invalid_argument("metropolis_hastings: bad interval");

    auto reflect = [&](double t) {
        // fold into [lo, hi]
        double span = hi - lo;
        double x = std::fmod(t - lo, 2.0 * span);
        if (x < 0.0) x += 2.0 * span;
        return (x <= span) ? lo + x : hi - (x - span);
    };
    auto log_target = [&](double t) {
        double p = prior ? prior(t) : 1.0;
        if (p <= 0.0) return -std::numeric_limits<double>::infinity();
        return -config.gamma * risk(t) + std::log(p);
    };

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    double t = 0.5 * (lo + hi);
    double lt = log_target(t);
    long accepted = 0;
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(
        (config.chain_length - config.burn_in) / config.thinning + 1));
    for (long step = 0; step < config.chain_length; ++step) {
        double prop =
            reflect(t + (2.0 * unif(rng) - 1.0) * config.step_size);
        double lp = log_target(prop);
        if (std::log(std::max(unif(rng), 1e-300)) < lp - lt) {
            t = prop;
            lt = lp;
            ++accepted;
        }
        if (step >= config.burn_in && (step - config.burn_in) % config.thinning == 0)
            samples.push_back(t);
    }

    MhResult out;
    out.acceptance_rate =
        static_cast<double>(accepted) / static_cast<double>(config.chain_length);
    if (out.acceptance_rate < 0.05 || out.acceptance_rate > 0.95)
        out.warnings.push_back("acceptance rate " +
                               std::to_string(out.acceptance_rate) +
                               " outside [0.05, 0.95]; adjust step_size");

    // Bin to nearest quadrature node.
    const std::size_t m = space.num_atoms();
    out.histogram = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    for (double s : samples) {
        std::size_t best = 0;
        double bd = std::abs(s - space.params[0]);
        for (std::size_t j = 1; j < m; ++j) {
            double d = std::abs(s - space.params[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        out.histogram(static_cast<Eigen::Index>(best)) += 1.0;
    }
    if (!samples.empty()) out.histogram /= static_cast<double>(samples.size());

    // Initial-positive-sequence ESS estimate on the thinned chain.
    const std::size_t ns = samples.size();
    if (ns > 2) {
        double mean = 0.0;
        for (double s : samples) mean += s;
        mean /= static_cast<double>(ns);
        double var = 0.0;
        for (double s : samples) var += (s - mean) * (s - mean);
        var /= static_cast<double>(ns);
        double tau = 1.0;
        if (var > 0.0) {
            for (std::size_t lag = 1; lag < ns / 2; ++lag) {
                double c = 0.0;
                for (std::size_t i = 0; i + lag < ns; ++i)
                    c += (samples[i] - mean) * (samples[i + lag] - mean);
                c /= static_cast<double>(ns) * var;
                if (c <= 0.0) break;
                tau += 2.0 * c;
            }
        }
        out.ess = static_cast<double>(ns) / tau;
    } else {
        out.ess = static_cast<double>(ns);
    }
    out.samples = std::move(samples);
    return out;
}

Eigen::VectorXd pushforward_risk(const BaseChangeMap& h,
                                 const Eigen::VectorXd& theta_z) {
    if (theta_z.size() != static_cast<Eigen::Index>(h.num_z()))
        throw std::invalid_argument("pushforward_risk: size mismatch");
    Eigen::VectorXd out(static_cast<Eigen::Index>(h.num_x()));
    for (std::size_t x = 0; x < h.num_x(); ++x) {
        if (h.fibers[x].empty())
            throw std::invalid_argument(
                "pushforward_risk: missing fiber weights for atom " +
                std::to_string(x));
        double acc = 0.0;
        for (auto [z, w] : h.fibers[x]) acc += w * theta_z(z);
        out(static_cast<Eigen::Index>(x)) = acc;
    }
    return out;
}

Eigen::VectorXd pushforward_prior(const BaseChangeMap& h,
                                  const Eigen::VectorXd& prior_z) {
    if (prior_z.size() != static_cast<Eigen::Index>(h.num_z()))
        throw std::invalid_argument("pushforward_prior: size mismatch");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h.num_x()));
    for (std::size_t z = 0; z < h.num_z(); ++z)
        out(h.target_of[z]) += prior_z(static_cast<Eigen::Index>(z));
    return out;
}

Eigen::VectorXd base_changed_posterior(PosteriorForm form,
                                       const BaseChangeMap& h, double gamma,
                                       const Eigen::VectorXd& theta_x,
                                       const Eigen::VectorXd& theta_z,
                                       const Eigen::VectorXd& prior_x,
                                       const Eigen::VectorXd& prior_z) {
    const bool pushed_theta = form == PosteriorForm::pushed_theta_prior ||
                              form == PosteriorForm::pushed_theta_pushed_prior;
    const bool pushed_prior = form == PosteriorForm::theta_pushed_prior ||
                              form == PosteriorForm::pushed_theta_pushed_prior;
    Eigen::VectorXd theta = pushed_theta ? pushforward_risk(h, theta_z) : theta_x;
    Eigen::VectorXd prior = pushed_prior ? pushforward_prior(h, prior_z) : prior_x;
    if (theta.size() == 0)
        throw std::invalid_argument("base_changed_posterior: missing risk input");
    return gibbs_posterior_exact(theta, gamma, prior);
}

}  // namespace dgsp
