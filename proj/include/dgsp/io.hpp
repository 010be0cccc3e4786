#ifndef DGSP_IO_HPP
#define DGSP_IO_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "dgsp/basechange.hpp"
#include "dgsp/operator_space.hpp"

namespace dgsp {

Eigen::MatrixXd read_csv_matrix(const std::string& path);
void write_csv_matrix(const Eigen::MatrixXd& m, const std::string& path,
                      const std::string& header = "");

/**
 * Ordered key-value file: `key=value` lines, '#' comments. Repeated keys
 * are allowed (order preserved).
 */
struct KeyValueFile {
    std::vector<std::pair<std::string, std::string>> entries;

    std::string get(const std::string& key) const;          // throws if absent
    std::string get_or(const std::string& key, const std::string& fallback) const;
    std::vector<std::string> get_all(const std::string& key) const;
    bool has(const std::string& key) const;
    /// Throws if any key is not in `allowed`.
    void require_keys(const std::vector<std::string>& allowed) const;
};

KeyValueFile read_key_value_file(const std::string& path);

/**
 * Operator-space manifest:
 *   kind=discrete  with repeated matrix=<csv path> and weights=w1,w2,...
 *   kind=convex-pair with edges0=, edges1=, nodes=, density=uniform|linear
 * Relative paths resolve against the manifest's directory.
 */
OperatorSpace read_space_manifest(const std::string& path);

/**
 * Base-change manifest: `map=z,x` lines (one per Z-atom, in Z order) and
 * optional `fiber=x,z,w` lines overriding the uniform fiberwise weights.
 */
BaseChangeMap read_base_change_manifest(const std::string& path,
                                        std::size_t num_x_atoms);

std::vector<double> parse_double_list(const std::string& csv);

}  // namespace dgsp

#endif  // DGSP_IO_HPP
