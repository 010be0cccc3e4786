#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "dgsp/learning.hpp"
#include "dgsp/oracles.hpp"
#include "test_helpers.hpp"

using namespace dgsp;
using dgsp_test::random_signal;
using dgsp_test::random_space;
using dgsp_test::random_symmetric;

namespace {

double tv_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return 0.5 * (a - b).cwiseAbs().sum();
}

}  // namespace

TEST_CASE("loss_spectral_compaction") {
    std::mt19937_64 rng(71);
    ShiftOperator op(random_symmetric(6, rng));

    // pure low-frequency signal: no energy above cutoff 1
    CHECK(loss_spectral_compaction(op, op.eigenvectors().col(0), 1) <= 1e-12);
    // pure top-frequency signal: all energy above any cutoff < n
    CHECK(loss_spectral_compaction(op, op.eigenvectors().col(5), 3) ==
          doctest::Approx(1.0));
    // full cutoff leaves nothing above
    CHECK(loss_spectral_compaction(op, random_signal(6, rng), 6) <= 1e-12);

    for (int rep = 0; rep < 20; ++rep) {
        double l = loss_spectral_compaction(op, random_signal(6, rng), 3);
        CHECK(l >= 0.0);
        CHECK(l <= 1.0);
    }
    CHECK_THROWS(loss_spectral_compaction(op, Signal::Zero(6), 3));
    CHECK_THROWS(loss_spectral_compaction(op, random_signal(6, rng), 0));
    CHECK_THROWS(loss_spectral_compaction(op, random_signal(6, rng), 7));
}

TEST_CASE("detection statistic and 0-1 loss") {
    std::mt19937_64 rng(72);
    ShiftOperator op(random_symmetric(5, rng));
    Signal u2 = op.eigenvectors().col(2);

    CHECK(detection_statistic(op, u2, {2}) == doctest::Approx(1.0));
    CHECK(detection_statistic(op, u2, {0, 1}) <= 1e-10);
    CHECK(detection_statistic(op, 3.0 * u2, {1, 2, 3}) == doctest::Approx(3.0));
    CHECK_THROWS(detection_statistic(op, u2, {5}));

    // e = 1 in the band: detected iff eps_tau < 1
    CHECK(loss_zero_one_detection(op, u2, {2}, 0.5, 1) == 0.0);
    CHECK(loss_zero_one_detection(op, u2, {2}, 0.5, 0) == 1.0);
    CHECK(loss_zero_one_detection(op, u2, {2}, 2.0, 1) == 1.0);
    CHECK(loss_zero_one_detection(op, u2, {2}, 2.0, 0) == 0.0);
    CHECK_THROWS(loss_zero_one_detection(op, u2, {2}, 0.5, 2));
}

TEST_CASE("empirical_risk averages the per-sample loss") {
    std::mt19937_64 rng(73);
    OperatorSpace space = random_space(4, 3, rng);
    AtomLoss loss = [](const ShiftOperator& op, std::size_t i) {
        return op.eigenvalues()(0) * 0.0 + static_cast<double>(i);
    };
    Eigen::VectorXd theta = empirical_risk(space, 5, loss);
    // mean of 0..4 = 2
    CHECK((theta.array() - 2.0).abs().maxCoeff() <= 1e-14);
    CHECK_THROWS(empirical_risk(space, 0, loss));
}

TEST_CASE("gibbs_posterior_exact closed forms and oracle") {
    Eigen::VectorXd theta(2);
    theta << 0.0, std::log(2.0);
    Eigen::VectorXd w = gibbs_posterior_exact(theta, 1.0);
    CHECK(w(0) == doctest::Approx(2.0 / 3.0));
    CHECK(w(1) == doctest::Approx(1.0 / 3.0));

    // gamma = 0 returns the normalized prior
    Eigen::VectorXd prior(3);
    prior << 1.0, 2.0, 1.0;
    Eigen::VectorXd p = gibbs_posterior_exact(Eigen::VectorXd::Ones(3), 0.0, prior);
    CHECK(p(1) == doctest::Approx(0.5));

    std::mt19937_64 rng(74);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        Eigen::VectorXd th(5), pr(5);
        for (int j = 0; j < 5; ++j) {
            th(j) = unif(rng);
            pr(j) = 0.1 + unif(rng);
        }
        Eigen::VectorXd a = gibbs_posterior_exact(th, 7.0, pr);
        Eigen::VectorXd b = oracles::oracle_gibbs(th, 7.0, pr / pr.sum());
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK(a.sum() == doctest::Approx(1.0));
        CHECK(a.minCoeff() >= 0.0);
    }

    // concentration on the empirical risk minimizer as gamma grows
    Eigen::VectorXd th(4);
    th << 0.4, 0.1, 0.5, 0.3;
    CHECK(gibbs_posterior_exact(th, 200.0)(1) > 0.999);
    // max-subtraction keeps huge gammas finite
    CHECK(std::isfinite(gibbs_posterior_exact(th, 5000.0)(1)));

    // zero-prior atoms get zero mass; all-zero prior is rejected
    Eigen::VectorXd mask(2);
    mask << 0.0, 1.0;
    CHECK(gibbs_posterior_exact(theta, 1.0, mask)(0) == 0.0);
    CHECK_THROWS(gibbs_posterior_exact(theta, 1.0, Eigen::VectorXd::Zero(2)));
}

TEST_CASE("node_cell_masses") {
    // uniform grid: interior cells equal, edge cells half-sized
    std::vector<double> grid = {0.125, 0.375, 0.625, 0.875};
    auto masses = node_cell_masses(grid, 0.0, 1.0);
    for (double m : masses) CHECK(m == doctest::Approx(0.25));

    auto [nodes, weights] = gauss_legendre_01(8);
    auto cells = node_cell_masses(nodes, 0.0, 1.0);
    double sum = 0.0;
    for (double m : cells) sum += m;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    // Gauss-Legendre nodes are uneven: cells differ from 1/m
    CHECK(std::abs(cells.front() - 1.0 / 8.0) > 0.01);
}

TEST_CASE("metropolis_hastings samples a flat target uniformly") {
    std::mt19937_64 rng(75);
    ShiftOperator l0(random_symmetric(3, rng));
    ShiftOperator l1(random_symmetric(3, rng));
    OperatorSpace fam = convex_family(l0, l1, 8);

    GibbsConfig config;
    config.gamma = 1.0;
    config.chain_length = 350000;
    config.burn_in = 50000;
    config.thinning = 3;
    config.step_size = 0.5;
    config.seed = 99;
    MhResult res = metropolis_hastings(fam, [](double) { return 0.0; }, config);
    // a flat target accepts every reflected proposal
    CHECK(res.acceptance_rate == doctest::Approx(1.0));
    CHECK(res.samples.size() == 100000);
    CHECK(res.ess > 1000.0);

    auto cells = node_cell_masses(fam.params, 0.0, 1.0);
    Eigen::VectorXd ref(8);
    for (int j = 0; j < 8; ++j) ref(j) = cells[static_cast<std::size_t>(j)];
    CHECK(tv_distance(res.histogram, ref) <= 0.01);
}

TEST_CASE("metropolis_hastings matches the exact discretized posterior") {
    std::mt19937_64 rng(76);
    ShiftOperator l0(random_symmetric(3, rng));
    ShiftOperator l1(random_symmetric(3, rng));
    OperatorSpace fam = convex_family(l0, l1, 8);

    auto risk = [](double t) { return (t - 0.3) * (t - 0.3); };
    GibbsConfig config;
    config.gamma = 8.0;
    config.chain_length = 250000;
    config.burn_in = 50000;
    config.thinning = 2;
    config.step_size = 0.3;
    config.seed = 7;
    MhResult res = metropolis_hastings(fam, risk, config);

    Eigen::VectorXd theta(8), prior(8);
    auto cells = node_cell_masses(fam.params, 0.0, 1.0);
    for (int j = 0; j < 8; ++j) {
        theta(j) = risk(fam.params[static_cast<std::size_t>(j)]);
        prior(j) = cells[static_cast<std::size_t>(j)];
    }
    Eigen::VectorXd exact = gibbs_posterior_exact(theta, config.gamma, prior);
    CHECK(tv_distance(res.histogram, exact) <= 0.05);

    // same seed, same chain, bit for bit
    MhResult again = metropolis_hastings(fam, risk, config);
    REQUIRE(again.samples.size() == res.samples.size());
    for (std::size_t i = 0; i < res.samples.size(); i += 997)
        CHECK(again.samples[i] == res.samples[i]);
    CHECK((again.histogram - res.histogram).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("metropolis_hastings diagnostics and input validation") {
    std::mt19937_64 rng(77);
    ShiftOperator l0(random_symmetric(3, rng));
    ShiftOperator l1(random_symmetric(3, rng));
    OperatorSpace fam = convex_family(l0, l1, 4);

    GibbsConfig config;
    config.chain_length = 2000;
    config.burn_in = 200;
    config.step_size = 1e-6;  // near-certain acceptance
    MhResult res = metropolis_hastings(fam, [](double) { return 0.0; }, config);
    REQUIRE(res.warnings.size() == 1);
    CHECK(res.warnings[0].find("acceptance rate") != std::string::npos);

    OperatorSpace no_params = random_space(3, 2, rng);
    CHECK_THROWS(metropolis_hastings(no_params, [](double) { return 0.0; },
                                     GibbsConfig{}));
    GibbsConfig bad = config;
    bad.burn_in = bad.chain_length;
    CHECK_THROWS(metropolis_hastings(fam, [](double) { return 0.0; }, bad));
    bad = config;
    bad.thinning = 0;
    CHECK_THROWS(metropolis_hastings(fam, [](double) { return 0.0; }, bad));
}

TEST_CASE("base-changed posteriors") {
    BaseChangeMap h = make_base_change({0, 1, 1}, 2);
    Eigen::VectorXd theta_z(3), prior_z(3), theta_x(2), prior_x(2);
    theta_z << 0.1, 0.2, 0.6;
    prior_z << 0.5, 0.25, 0.25;
    theta_x << 0.3, 0.4;
    prior_x << 0.5, 0.5;

    Eigen::VectorXd pushed_theta = pushforward_risk(h, theta_z);
    CHECK(pushed_theta(0) == doctest::Approx(0.1));
    CHECK(pushed_theta(1) == doctest::Approx(0.4));  // (0.2 + 0.6) / 2
    Eigen::VectorXd pushed_prior = pushforward_prior(h, prior_z);
    CHECK(pushed_prior(0) == doctest::Approx(0.5));
    CHECK(pushed_prior(1) == doctest::Approx(0.5));

    const double gamma = 3.0;
    using PF = PosteriorForm;
    Eigen::VectorXd a = base_changed_posterior(PF::theta_prior, h, gamma,
                                               theta_x, theta_z, prior_x,
                                               prior_z);
    CHECK((a - gibbs_posterior_exact(theta_x, gamma, prior_x)).norm() <= 1e-14);
    Eigen::VectorXd b = base_changed_posterior(PF::pushed_theta_pushed_prior, h,
                                               gamma, theta_x, theta_z, prior_x,
                                               prior_z);
    CHECK((b - gibbs_posterior_exact(pushed_theta, gamma, pushed_prior)).norm() <=
          1e-14);
    Eigen::VectorXd c = base_changed_posterior(PF::pushed_theta_prior, h, gamma,
                                               theta_x, theta_z, prior_x,
                                               prior_z);
    CHECK((c - gibbs_posterior_exact(pushed_theta, gamma, prior_x)).norm() <=
          1e-14);
    Eigen::VectorXd d = base_changed_posterior(PF::theta_pushed_prior, h, gamma,
                                               theta_x, theta_z, prior_x,
                                               prior_z);
    CHECK((d - gibbs_posterior_exact(theta_x, gamma, pushed_prior)).norm() <=
          1e-14);

    // identity map: all four forms coincide when Z copies X
    BaseChangeMap ident = make_base_change({0, 1}, 2);
    for (PF form : {PF::theta_prior, PF::theta_pushed_prior,
                    PF::pushed_theta_prior, PF::pushed_theta_pushed_prior}) {
        Eigen::VectorXd w = base_changed_posterior(form, ident, gamma, theta_x,
                                                   theta_x, prior_x, prior_x);
        CHECK((w - gibbs_posterior_exact(theta_x, gamma, prior_x)).norm() <=
              1e-14);
    }
}
