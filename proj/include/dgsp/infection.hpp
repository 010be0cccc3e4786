#ifndef DGSP_INFECTION_HPP
#define DGSP_INFECTION_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dgsp/graph.hpp"

namespace dgsp {

/// Spanning tree of a graph rooted at an infection source.
struct PropagationTree {
    int source = 0;
    std::vector<int> parent;  // parent[source] == source

    int n() const { return static_cast<int>(parent.size()); }
};

using EdgeSet = std::vector<std::pair<int, int>>;  // normalized u < v

/// Depth of every vertex below the source.
std::vector<int> tree_depths(const PropagationTree& tree);

int tree_height(const PropagationTree& tree);

EdgeSet tree_edges(const PropagationTree& tree);

/**
 * Uniform random BFS tree rooted at s: each vertex at BFS-distance d picks
 * its parent uniformly among its neighbors at distance d-1.
 */
PropagationTree random_bfs_tree(const Graph& g, int s, std::mt19937_64& rng);

/// 0/1 infection signal after `steps` shift applications: vertices within
/// tree-distance `steps` of the source.
Eigen::VectorXd snapshot(const PropagationTree& tree, int steps);

/// min over 0 <= i <= height of || snapshot(i) - f ||.
double infection_loss(const PropagationTree& tree, const Eigen::VectorXd& f);

/**
 * Tree-rewiring map h: inserts every fast edge into the tree, each time
 * removing the median-distance non-fast edge on the unique tree path between
 * the inserted edge's endpoints. Fast edges are processed in ascending order
 * of their shortest-path distance to the source in g; even-length medians
 * take the lower median. The fast edge set must be acyclic.
 */
PropagationTree rewire_tree(const Graph& g, const EdgeSet& fast_edges,
                            const PropagationTree& tree);

struct SourceScoreOptions {
    double gamma = 2.0;
    bool use_base_change = true;
};

/**
 * Posterior source scores: pushforward the empirical tree distribution
 * through rewire_tree (when base change is enabled), weight each atom by
 * exp(-gamma * infection_loss), and marginalize over trees per candidate.
 * Returns a probability vector aligned with `candidates`.
 */
std::vector<double> source_score(const Graph& g,
                                 const std::vector<int>& candidates,
                                 const EdgeSet& fast_edges,
                                 const std::vector<PropagationTree>& training,
                                 const std::vector<double>& training_weights,
                                 const Eigen::VectorXd& f,
                                 const SourceScoreOptions& opts);

struct InfectionExperimentConfig {
    int rows = 15;
    int cols = 15;
    std::vector<double> fast_fractions = {0.2, 0.4, 0.6, 0.8};
    double candidate_fraction = 0.2;
    double infection_fraction = 0.4;
    int trials = 200;
    int trees_per_candidate = 5;
    double gamma = 2.0;
    std::uint64_t seed = 0;
};

struct InfectionExperimentRow {
    double fast_fraction = 0.0;
    int fast_edges_requested = 0;
    double fast_edges_mean = 0.0;  // acyclicity caps |F| at n-1
    double mean_error_with = 0.0;
    double mean_error_without = 0.0;
    double improvement_pct = 0.0;
    std::vector<double> errors_with;     // per trial
    std::vector<double> errors_without;  // per trial
};

std::vector<InfectionExperimentRow> run_experiment(
    const InfectionExperimentConfig& config);

/// Random acyclic subset of the graph's edges with up to `target` edges
/// (greedy over a shuffled edge order).
EdgeSet random_fast_edges(const Graph& g, int target, std::mt19937_64& rng);

}  // namespace dgsp

#endif  // DGSP_INFECTION_HPP
