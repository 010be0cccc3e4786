#include "dgsp/infection.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dgsp {

namespace {

std::pair<int, int> norm_edge(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
};

std::vector<std::vector<int>> graph_adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
}

/// Rebuild the parent array of a spanning tree given as an edge set.
PropagationTree reroot(int n, int source, const std::set<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    PropagationTree t;
    t.source = source;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    t.parent[static_cast<std::size_t>(source)] = source;
    std::deque<int> q{source};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (t.parent[static_cast<std::size_t>(v)] < 0) {
                t.parent[static_cast<std::size_t>(v)] = u;
                q.push_back(v);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (t.parent[static_cast<std::size_t>(v)] < 0)
            throw std::runtime_error("reroot: edge set is not spanning");
    return t;
}

}  // namespace

std::vector<int> tree_depths(const PropagationTree& tree) {
    const int n = tree.n();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    depth[static_cast<std::size_t>(tree.source)] = 0;
    for (int v = 0; v < n; ++v) {
        // follow parents until a known depth
        std::vector<int> chain;
        int u = v;
        while (depth[static_cast<std::size_t>(u)] < 0) {
            chain.push_back(u);
            u = tree.parent[static_cast<std::size_t>(u)];
            if (static_cast<int>(chain.size()) > n)
                throw std::invalid_argument("tree_depths: parent cycle");
        }
        int d = depth[static_cast<std::size_t>(u)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[static_cast<std::size_t>(*it)] = ++d;
    }
    return depth;
}

int tree_height(const PropagationTree& tree) {
    auto d = tree_depths(tree);
    return *std::max_element(d.begin(), d.end());
}

EdgeSet tree_edges(const PropagationTree& tree) {
    EdgeSet edges;
    for (int v = 0; v < tree.n(); ++v)
        if (v != tree.source)
            edges.push_back(norm_edge(v, tree.parent[static_cast<std::size_t>(v)]));
    std::sort(edges.begin(), edges.end());
    return edges;
}

PropagationTree random_bfs_tree(const Graph& g, int s, std::mt19937_64& rng) {
    if (!is_connected(g))
        throw std::invalid_argument("random_bfs_tree: graph is disconnected");
    auto dist = bfs_distances(g, s);
    auto adj = graph_adjacency(g);
    PropagationTree t;
    t.source = s;
    t.parent.assign(static_cast<std::size_t>(g.n), -1);
    t.parent[static_cast<std::size_t>(s)] = s;
    for (int v = 0; v < g.n; ++v) {
        if (v == s) continue;
        std::vector<int> options;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(u)] ==
                dist[static_cast<std::size_t>(v)] - 1)
                options.push_back(u);
        std::sort(options.begin(), options.end());
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        t.parent[static_cast<std::size_t>(v)] = options[pick(rng)];
    }
    return t;
}

Eigen::VectorXd snapshot(const PropagationTree& tree, int steps) {
    if (steps < 0) throw std::invalid_argument("snapshot: negative step count");
    auto depth = tree_depths(tree);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(tree.n());
    for (int v = 0; v < tree.n(); ++v)
        if (depth[static_cast<std::size_t>(v)] <= steps) f(v) = 1.0;
    return f;
}

double infection_loss(const PropagationTree& tree, const Eigen::VectorXd& f) {
    if (f.size() != tree.n())
        throw std::invalid_argument("infection_loss: signal length mismatch");
    auto depth = tree_depths(tree);
    const int h = *std::max_element(depth.begin(), depth.end());
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= h; ++i) {
        double acc = 0.0;
        for (int v = 0; v < tree.n(); ++v) {
            double on = (depth[static_cast<std::size_t>(v)] <= i) ? 1.0 : 0.0;
            double d = on - f(v);
            acc += d * d;
        }
        best = std::min(best, acc);
    }
    return std::sqrt(best);
}

PropagationTree rewire_tree(const Graph& g, const EdgeSet& fast_edges,
                            const PropagationTree& tree) {
    const int n = tree.n();
    if (g.n != n)
        throw std::invalid_argument("rewire_tree: graph/tree size mismatch");

    std::set<std::pair<int, int>> graph_set;
    for (const Edge& e : g.edges) graph_set.insert(norm_edge(e.u, e.v));

    UnionFind uf(n);
    std::set<std::pair<int, int>> fast_set;
    for (auto [a, b] : fast_edges) {
        auto e = norm_edge(a, b);
        if (!graph_set.count(e))
            throw std::invalid_argument("rewire_tree: fast edge not in graph");
        if (!fast_set.insert(e).second) continue;
        if (!uf.unite(e.first, e.second))
            throw std::invalid_argument("rewire_tree: fast edge set is cyclic");
    }

    const auto dist = bfs_distances(g, tree.source);
    auto edge_dist = [&](const std::pair<int, int>& e) {
        return std::min(dist[static_cast<std::size_t>(e.first)],
                        dist[static_cast<std::size_t>(e.second)]);
    };

    std::vector<std::pair<int, int>> order(fast_set.begin(), fast_set.end());
    std::sort(order.begin(), order.end(),
              [&](const auto& a, const auto& b) {
                  int da = edge_dist(a), db = edge_dist(b);
                  if (da != db) return da < db;
                  return a < b;
              });

    std::set<std::pair<int, int>> cur;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    auto adj_insert = [&](const std::pair<int, int>& e) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    };
    auto adj_erase = [&](const std::pair<int, int>& e) {
        auto drop = [&](int from, int what) {
            auto& row = adj[static_cast<std::size_t>(from)];
            row.erase(std::find(row.begin(), row.end(), what));
        };
        drop(e.first, e.second);
        drop(e.second, e.first);
    };
    for (auto e : tree_edges(tree)) {
        cur.insert(e);
        adj_insert(e);
    }

    for (const auto& rho : order) {
        if (cur.count(rho)) continue;
        // Unique tree path between rho's endpoints.
        std::vector<int> prev(static_cast<std::size_t>(n), -1);
        prev[static_cast<std::size_t>(rho.first)] = rho.first;
        std::deque<int> q{rho.first};
        while (!q.empty() && prev[static_cast<std::size_t>(rho.second)] < 0) {
            int u = q.front();
            q.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (prev[static_cast<std::size_t>(v)] < 0) {
                    prev[static_cast<std::size_t>(v)] = u;
                    q.push_back(v);
                }
            }
        }
        if (prev[static_cast<std::size_t>(rho.second)] < 0)
            throw std::runtime_error("rewire_tree: tree not connected");
        std::vector<std::pair<int, int>> path;
        for (int v = rho.second; v != rho.first;
             v = prev[static_cast<std::size_t>(v)])
            path.push_back(norm_edge(v, prev[static_cast<std::size_t>(v)]));

        std::vector<std::pair<int, int>> removable;
        for (const auto& e : path)
            if (!fast_set.count(e)) removable.push_back(e);
        if (removable.empty())
            throw std::runtime_error(
                "rewire_tree: no removable edge on path (invariant violation)");
        std::sort(removable.begin(), removable.end(),
                  [&](const auto& a, const auto& b) {
                      int da = edge_dist(a), db = edge_dist(b);
                      if (da != db) return da < db;
                      return a < b;
                  });
        // lower median
        const auto& removed = removable[(removable.size() - 1) / 2];
        cur.erase(removed);
        adj_erase(removed);
        cur.insert(rho);
        adj_insert(rho);
    }

    return reroot(n, tree.source, cur);
}

std::vector<double> source_score(const Graph& g,
                                 const std::vector<int>& candidates,
                                 const EdgeSet& fast_edges,
                                 const std::vector<PropagationTree>& training,
                                 const std::vector<double>& training_weights,
                                 const Eigen::VectorXd& f,
                                 const SourceScoreOptions& opts) {
    if (candidates.empty())
        throw std::invalid_argument("source_score: empty candidate set");
    if (training.empty())
        throw std::invalid_argument("source_score: empty training set");
    if (training.size() != training_weights.size())
        throw std::invalid_argument("source_score: weight count mismatch");

    std::vector<double> logw(training.size());
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < training.size(); ++i) {
        const PropagationTree atom =
            opts.use_base_change ? rewire_tree(g, fast_edges, training[i])
                                 : training[i];
        double loss = infection_loss(atom, f);
        logw[i] = -opts.gamma * loss + std::log(std::max(training_weights[i], 1e-300));
        mx = std::max(mx, logw[i]);
    }

    std::vector<double> scores(candidates.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < training.size(); ++i) {
        double w = std::exp(logw[i] - mx);
        total += w;
        for (std::size_t c = 0; c < candidates.size(); ++c)
            if (training[i].source == candidates[c]) scores[c] += w;
    }
    for (double& s : scores) s /= total;
    return scores;
}

EdgeSet random_fast_edges(const Graph& g, int target, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pool;
    for (const Edge& e : g.edges) pool.push_back(norm_edge(e.u, e.v));
    std::shuffle(pool.begin(), pool.end(), rng);
    UnionFind uf(g.n);
    EdgeSet out;
    for (const auto& e : pool) {
        if (static_cast<int>(out.size()) >= target) break;
        if (uf.unite(e.first, e.second)) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<InfectionExperimentRow> run_experiment(
    const InfectionExperimentConfig& config) {
    if (config.trials < 1 || config.rows < 2 || config.cols < 2)
        throw std::invalid_argument("run_experiment: bad config");
    if (config.candidate_fraction <= 0.0 || config.candidate_fraction > 1.0 ||
        config.infection_fraction <= 0.0 || config.infection_fraction > 1.0)
        throw std::invalid_argument("run_experiment: bad fractions");

    const Graph g = grid_2d(config.rows, config.cols);
    const int n = g.n;
    const int num_candidates =
        std::max(1, static_cast<int>(std::lround(config.candidate_fraction * n)));

    std::vector<InfectionExperimentRow> rows;
    for (std::size_t fi = 0; fi < config.fast_fractions.size(); ++fi) {
        const double frac = config.fast_fractions[fi];
        InfectionExperimentRow row;
        row.fast_fraction = frac;
        row.fast_edges_requested = static_cast<int>(
            std::lround(frac * static_cast<double>(g.edges.size())));

        double fast_total = 0.0;
        for (int trial = 0; trial < config.trials; ++trial) {
            std::mt19937_64 rng(config.seed + 1000003ULL * fi +
                                static_cast<std::uint64_t>(trial));

            EdgeSet fast = random_fast_edges(g, row.fast_edges_requested, rng);
            fast_total += static_cast<double>(fast.size());

            std::vector<int> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> candidates(all.begin(), all.begin() + num_candidates);
            std::sort(candidates.begin(), candidates.end());

            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            const int true_source = candidates[pick(rng)];

            // The true propagation obeys the fast-edge model: a BFS tree
            // transported through the rewiring map.
            PropagationTree t_z = random_bfs_tree(g, true_source, rng);
            PropagationTree t_x = rewire_tree(g, fast, t_z);
            auto depth = tree_depths(t_x);
            const int want =
                static_cast<int>(std::lround(config.infection_fraction * n));
            int step = 0;
            for (int h = tree_height(t_x); step < h; ++step) {
                int infected = 0;
                for (int v = 0; v < n; ++v)
                    if (depth[static_cast<std::size_t>(v)] <= step) ++infected;
                if (infected >= want) break;
            }
            Eigen::VectorXd f = snapshot(t_x, step);

            // Training trees drawn under the pre-change model.
            std::vector<PropagationTree> training;
            for (int c : candidates)
                for (int r = 0; r < config.trees_per_candidate; ++r)
                    training.push_back(random_bfs_tree(g, c, rng));
            std::vector<double> mu(training.size(),
                                   1.0 / static_cast<double>(training.size()));

            auto dist_from_true = bfs_distances(g, true_source);
            auto run_mode = [&](bool base_change) {
                SourceScoreOptions opts;
                opts.gamma = config.gamma;
                opts.use_base_change = base_change;
                auto scores =
                    source_score(g, candidates, fast, training, mu, f, opts);
                std::size_t best = 0;
                for (std::size_t c = 1; c < scores.size(); ++c)
                    if (scores[c] > scores[best]) best = c;
                return static_cast<double>(
                    dist_from_true[static_cast<std::size_t>(candidates[best])]);
            };
            row.errors_with.push_back(run_mode(true));
            row.errors_without.push_back(run_mode(false));
        }

        auto mean = [](const std::vector<double>& v) {
            double s = 0.0;
            for (double x : v) s += x;
            return s / static_cast<double>(v.size());
        };
        row.fast_edges_mean = fast_total / static_cast<double>(config.trials);
        row.mean_error_with = mean(row.errors_with);
        row.mean_error_without = mean(row.errors_without);
        row.improvement_pct =
            (row.mean_error_without > 0.0)
                ? 100.0 * (row.mean_error_without - row.mean_error_with) /
                      row.mean_error_without
                : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dgsp
