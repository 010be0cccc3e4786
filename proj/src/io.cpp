#include "dgsp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dgsp/graph.hpp"

namespace dgsp {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return (pos == std::string::npos) ? "." : path.substr(0, pos);
}

std::string resolve(const std::string& base_dir, const std::string& p) {
    if (!p.empty() && p[0] == '/') return p;
    return base_dir + "/" + p;
}

}  // namespace

Eigen::MatrixXd read_csv_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(trim(cell)));
            } catch (const std::exception&) {
                throw std::runtime_error("malformed CSV cell in " + path + ": " + cell);
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged CSV rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty CSV: " + path);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rows[r][c];
    return m;
}

void write_csv_matrix(const Eigen::MatrixXd& m, const std::string& path,
                      const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out.precision(17);
    if (!header.empty()) out << "# " << header << "\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << m(r, c);
        }
        out << "\n";
    }
}

std::string KeyValueFile::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw std::runtime_error("missing required key: " + key);
}

std::string KeyValueFile::get_or(const std::string& key,
                                 const std::string& fallback) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return fallback;
}

std::vector<std::string> KeyValueFile::get_all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries)
        if (k == key) out.push_back(v);
    return out;
}

bool KeyValueFile::has(const std::string& key) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.first == key; });
}

void KeyValueFile::require_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [k, v] : entries)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw std::runtime_error("unknown key: " + k);
}

KeyValueFile read_key_value_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    KeyValueFile kv;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed line in " + path + ": " + line);
        kv.entries.emplace_back(trim(line.substr(0, eq)),
                                trim(line.substr(eq + 1)));
    }
    return kv;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell = trim(cell);
        if (cell.empty()) continue;
        out.push_back(std::stod(cell));
    }
    return out;
}

OperatorSpace read_space_manifest(const std::string& path) {
    KeyValueFile kv = read_key_value_file(path);
    const std::string dir = dirname_of(path);
    const std::string kind = kv.get("kind");
    if (kind == "discrete") {
        kv.require_keys({"kind", "matrix", "weights"});
        std::vector<ShiftOperator> atoms;
        for (const auto& p : kv.get_all("matrix"))
            atoms.emplace_back(read_csv_matrix(resolve(dir, p)));
        auto weights = parse_double_list(kv.get("weights"));
        return discrete_space(std::move(atoms), weights);
    }
    if (kind == "convex-pair") {
        kv.require_keys({"kind", "edges0", "edges1", "nodes", "density"});
        Graph g0 = read_edge_list(resolve(dir, kv.get("edges0")));
        Graph g1 = read_edge_list(resolve(dir, kv.get("edges1")));
        int n = std::max(g0.n, g1.n);
        g0.n = g1.n = n;  // subgraphs share the vertex set
        int nodes = std::stoi(kv.get("nodes"));
        std::string density = kv.get_or("density", "uniform");
        DensityFn fn = nullptr;
        if (density == "linear")
            fn = [](double t) { return 2.0 * t; };
        else if (density != "uniform")
            throw std::runtime_error("unknown density: " + density);
        return convex_family(laplacian(g0), laplacian(g1), nodes, fn);
    }
    throw std::runtime_error("unknown space kind: " + kind);
}

BaseChangeMap read_base_change_manifest(const std::string& path,
                                        std::size_t num_x_atoms) {
    KeyValueFile kv = read_key_value_file(path);
    kv.require_keys({"map", "fiber"});
    std::vector<int> targets;
    for (const auto& m : kv.get_all("map")) {
        auto vals = parse_double_list(m);
        if (vals.size() != 2)
            throw std::runtime_error("malformed map entry: " + m);
        if (static_cast<std::size_t>(vals[0]) != targets.size())
            throw std::runtime_error("map entries must list Z-atoms in order");
        targets.push_back(static_cast<int>(vals[1]));
    }
    BaseChangeMap h = make_base_change(targets, num_x_atoms);
    auto fiber_lines = kv.get_all("fiber");
    if (!fiber_lines.empty()) {
        for (auto& fiber : h.fibers) fiber.clear();
        for (const auto& f : fiber_lines) {
            auto vals = parse_double_list(f);
            if (vals.size() != 3)
                throw std::runtime_error("malformed fiber entry: " + f);
            h.fibers[static_cast<std::size_t>(vals[0])].emplace_back(
                static_cast<int>(vals[1]), vals[2]);
        }
    }
    validate_base_change(h);
    return h;
}

}  // namespace dgsp
