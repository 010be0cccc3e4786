#ifndef DGSP_GRAPH_HPP
#define DGSP_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "dgsp/operator_space.hpp"

namespace dgsp {

struct Edge {
    int u;
    int v;
    double w;
};

/// Undirected weighted graph; each edge stored once with u < v.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    // Set by grid_2d so split_axes can recognize a lattice.
    int lattice_rows = 0;
    int lattice_cols = 0;

    bool is_lattice() const { return lattice_rows > 0 && lattice_cols > 0; }
};

/// rows x cols lattice with unit-weight edges; vertex index = row*cols + col.
Graph grid_2d(int rows, int cols);

/// Split a lattice into (horizontal-only, vertical-only) subgraphs on the
/// same vertex set.
std::pair<Graph, Graph> split_axes(const Graph& g);

enum class KnnWeighting { unit, gaussian };

/**
 * Symmetrized k-NN graph: edge (u,v) present if v is among u's k nearest
 * neighbors or vice versa. Distance ties are broken by lower vertex index.
 * Gaussian weighting uses exp(-d^2 / (2 sigma^2)) with sigma the median
 * pairwise distance.
 */
Graph knn_graph(const std::vector<std::vector<double>>& points, int k,
                KnnWeighting weighting = KnnWeighting::unit);

/**
 * Edge (u,v) iff |corr(row u, row v)| >= tau (Pearson on raw rows); unit
 * weights. Set use_absolute=false to threshold the signed correlation.
 */
Graph correlation_threshold_graph(const Eigen::MatrixXd& signals, double tau,
                                  bool use_absolute = true);

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);

/// Combinatorial Laplacian L = D - W as a shift operator.
ShiftOperator laplacian(const Graph& g);

/// A_T = I + W, the shift used for propagation trees.
ShiftOperator adjacency_with_loops(const Graph& g);

/// BFS distances from s over unweighted edges; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int s);

bool is_connected(const Graph& g);

Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

}  // namespace dgsp

#endif  // DGSP_GRAPH_HPP
