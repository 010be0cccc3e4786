#include "dgsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgsp {

namespace {

void check_edge(const Graph& g, const Edge& e) {
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
        throw std::invalid_argument("Graph: vertex index out of range");
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop not allowed");
    if (e.w <= 0.0) throw std::invalid_argument("Graph: edge weight must be > 0");
}

}  // namespace

Graph grid_2d(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid_2d: rows and cols must be >= 1");
    Graph g;
    g.n = rows * cols;
    g.lattice_rows = rows;
    g.lattice_cols = cols;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols) g.edges.push_back({v, v + 1, 1.0});
            if (r + 1 < rows) g.edges.push_back({v, v + cols, 1.0});
        }
    }
    return g;
}

std::pair<Graph, Graph> split_axes(const Graph& g) {
    if (!g.is_lattice())
        throw std::invalid_argument("split_axes: input graph is not a lattice");
    Graph h, v;
    h.n = v.n = g.n;
    const int cols = g.lattice_cols;
    for (const Edge& e : g.edges) {
        if (e.v == e.u + 1 && e.u / cols == e.v / cols)
            h.edges.push_back(e);
        else
            v.edges.push_back(e);
    }
    return {h, v};
}

Graph knn_graph(const std::vector<std::vector<double>>& points, int k,
                KnnWeighting weighting) {
    const int n = static_cast<int>(points.size());
    if (n < 2) throw std::invalid_argument("knn_graph: need at least 2 points");
    if (k < 1 || k >= n)
        throw std::invalid_argument("knn_graph: require 1 <= k < n");
    const std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("knn_graph: inconsistent dimensions");

    auto dist2 = [&](int a, int b) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double d = points[static_cast<std::size_t>(a)][i] -
                       points[static_cast<std::size_t>(b)][i];
            s += d * d;
        }
        return s;
    };

    double sigma2 = 1.0;
    if (weighting == KnnWeighting::gaussian) {
        std::vector<double> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                all.push_back(std::sqrt(dist2(a, b)));
        std::sort(all.begin(), all.end());
        double median = all[all.size() / 2];
        if (all.size() % 2 == 0)
            median = 0.5 * (all[all.size() / 2 - 1] + all[all.size() / 2]);
        sigma2 = std::max(median * median, 1e-300);
    }

    std::vector<std::pair<int, int>> directed;
    for (int a = 0; a < n; ++a) {
        std::vector<int> idx;
        for (int b = 0; b < n; ++b)
            if (b != a) idx.push_back(b);
        std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
            double dx = dist2(a, x), dy = dist2(a, y);
            if (dx != dy) return dx < dy;
            return x < y;  // tie-break by lower vertex index
        });
        for (int i = 0; i < k; ++i) directed.emplace_back(a, idx[static_cast<std::size_t>(i)]);
    }

    Graph g;
    g.n = n;
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [a, b] : directed) {
        int u = std::min(a, b), v = std::max(a, b);
        if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
            present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            double w = 1.0;
            if (weighting == KnnWeighting::gaussian)
                w = std::exp(-dist2(u, v) / (2.0 * sigma2));
            g.edges.push_back({u, v, w});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return g;
}

Graph correlation_threshold_graph(const Eigen::MatrixXd& signals, double tau,
                                  bool use_absolute) {
    const Eigen::Index n = signals.rows();
    const Eigen::Index m = signals.cols();
    if (m < 2)
        throw std::invalid_argument(
            "correlation_threshold_graph: need at least 2 samples per node");
    Eigen::MatrixXd centered = signals;
    Eigen::VectorXd sd(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double mean = signals.row(i).mean();
        centered.row(i).array() -= mean;
        sd(i) = centered.row(i).norm();
        if (sd(i) == 0.0)
            throw std::invalid_argument(
                "correlation_threshold_graph: zero-variance row " +
                std::to_string(i));
    }
    Graph g;
    g.n = static_cast<int>(n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u + 1; v < n; ++v) {
            double corr = centered.row(u).dot(centered.row(v)) / (sd(u) * sd(v));
            double stat = use_absolute ? std::abs(corr) : corr;
            if (stat >= tau)
                g.edges.push_back({static_cast<int>(u), static_cast<int>(v), 1.0});
        }
    }
    return g;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(g.n, g.n);
    for (const Edge& e : g.edges) {
        check_edge(g, e);
        w(e.u, e.v) += e.w;
        w(e.v, e.u) += e.w;
    }
    return w;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    Eigen::MatrixXd w = adjacency_matrix(g);
    Eigen::VectorXd deg = w.rowwise().sum();
    Eigen::MatrixXd l = -w;
    l.diagonal() += deg;
    return l;
}

ShiftOperator laplacian(const Graph& g) {
    return ShiftOperator(laplacian_matrix(g));
}

ShiftOperator adjacency_with_loops(const Graph& g) {
    Eigen::MatrixXd a = adjacency_matrix(g);
    a.diagonal().array() += 1.0;
    return ShiftOperator(a);
}

std::vector<int> bfs_distances(const Graph& g, int s) {
    if (s < 0 || s >= g.n)
        throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::deque<int> q{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    Graph g;
    int max_v = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Edge e{};
        if (!(ss >> e.u >> e.v >> e.w))
            throw std::runtime_error("malformed edge line in " + path + ": " + line);
        if (e.u > e.v) std::swap(e.u, e.v);
        g.edges.push_back(e);
        max_v = std::max({max_v, e.u, e.v});
    }
    g.n = max_v + 1;
    return g;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    out.precision(17);
    for (const Edge& e : g.edges) out << e.u << " " << e.v << " " << e.w << "\n";
}

}  // namespace dgsp
