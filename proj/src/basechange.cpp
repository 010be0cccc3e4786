#include "dgsp/basechange.hpp"

#include <cmath>
#include <stdexcept>

#include "dgsp/spectral.hpp"

namespace dgsp {

BaseChangeMap make_base_change(const std::vector<int>& target_of,
                               std::size_t num_x_atoms) {
    BaseChangeMap h;
    h.target_of = target_of;
    h.fibers.resize(num_x_atoms);
    for (std::size_t z = 0; z < target_of.size(); ++z) {
        int x = target_of[z];
        if (x < 0 || static_cast<std::size_t>(x) >= num_x_atoms)
            throw std::invalid_argument("make_base_change: target index out of range");
        h.fibers[static_cast<std::size_t>(x)].emplace_back(static_cast<int>(z), 0.0);
    }
    for (auto& fiber : h.fibers)
        for (auto& [z, w] : fiber) w = 1.0 / static_cast<double>(fiber.size());
    return h;
}

void validate_base_change(const BaseChangeMap& h) {
    for (std::size_t z = 0; z < h.target_of.size(); ++z) {
        int x = h.target_of[z];
        if (x < 0 || static_cast<std::size_t>(x) >= h.num_x())
            throw std::invalid_argument("BaseChangeMap: target index out of range");
    }
    std::vector<bool> seen(h.num_z(), false);
    for (std::size_t x = 0; x < h.num_x(); ++x) {
        const auto& fiber = h.fibers[x];
        if (fiber.empty()) continue;
        double sum = 0.0;
        for (auto [z, w] : fiber) {
            if (z < 0 || static_cast<std::size_t>(z) >= h.num_z() ||
                h.target_of[static_cast<std::size_t>(z)] != static_cast<int>(x))
                throw std::invalid_argument(
                    "BaseChangeMap: fiber member not in preimage of atom " +
                    std::to_string(x));
            if (seen[static_cast<std::size_t>(z)])
                throw std::invalid_argument("BaseChangeMap: fibers overlap");
            seen[static_cast<std::size_t>(z)] = true;
            if (w < 0.0)
                throw std::invalid_argument("BaseChangeMap: negative fiber weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument(
                "BaseChangeMap: fiber weights of atom " + std::to_string(x) +
                " sum to " + std::to_string(sum));
    }
    for (std::size_t z = 0; z < h.num_z(); ++z)
        if (!seen[z])
            throw std::invalid_argument(
                "BaseChangeMap: atom " + std::to_string(z) +
                " missing from the fiber of its target");
}

OperatorSpace pushforward_measure(const BaseChangeMap& h,
                                  const OperatorSpace& z_space,
                                  const OperatorSpace& x_space) {
    if (h.num_z() != z_space.num_atoms() || h.num_x() != x_space.num_atoms())
        throw std::invalid_argument("pushforward_measure: map/space size mismatch");
    OperatorSpace out = x_space;  // keeps the id: same atoms, new weights
    out.weights.setZero();
    for (std::size_t z = 0; z < h.num_z(); ++z)
        out.weights(h.target_of[z]) +=
            z_space.weights(static_cast<Eigen::Index>(z));
    return out;
}

std::vector<Eigen::MatrixXd> pullback_filter_family(
    const BaseChangeMap& h, const std::vector<Eigen::MatrixXd>& x_family) {
    if (x_family.size() != h.num_x())
        throw std::invalid_argument("pullback_filter_family: family size mismatch");
    std::vector<Eigen::MatrixXd> out;
    out.reserve(h.num_z());
    for (std::size_t z = 0; z < h.num_z(); ++z)
        out.push_back(x_family[static_cast<std::size_t>(h.target_of[z])]);
    return out;
}

OperatorSpace pullback_measure(const BaseChangeMap& h,
                               const OperatorSpace& x_space,
                               const OperatorSpace& z_space) {
    if (h.num_z() != z_space.num_atoms() || h.num_x() != x_space.num_atoms())
        throw std::invalid_argument("pullback_measure: map/space size mismatch");
    OperatorSpace out = z_space;
    out.weights.setZero();
    for (std::size_t x = 0; x < h.num_x(); ++x) {
        double wx = x_space.weights(static_cast<Eigen::Index>(x));
        if (wx > 0.0 && h.fibers[x].empty())
            throw std::invalid_argument(
                "pullback_measure: missing fiber weights for atom " +
                std::to_string(x));
        for (auto [z, w] : h.fibers[x]) out.weights(z) += wx * w;
    }
    return out;
}

std::vector<Eigen::MatrixXd> pushforward_filter_family(
    const BaseChangeMap& h, const std::vector<Eigen::MatrixXd>& z_family) {
    if (z_family.size() != h.num_z())
        throw std::invalid_argument(
            "pushforward_filter_family: family size mismatch");
    std::vector<Eigen::MatrixXd> out;
    out.reserve(h.num_x());
    for (std::size_t x = 0; x < h.num_x(); ++x) {
        if (h.fibers[x].empty())
            throw std::invalid_argument(
                "pushforward_filter_family: empty fiber at atom " +
                std::to_string(x));
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(z_family[0].rows(),
                                                    z_family[0].cols());
        for (auto [z, w] : h.fibers[x])
            acc += w * z_family[static_cast<std::size_t>(z)];
        out.push_back(std::move(acc));
    }
    return out;
}

SpectralKernel pullback_kernel(const BaseChangeMap& h,
                               const OperatorSpace& z_space,
                               const SpectralKernel& x_kernel) {
    if (h.num_z() != z_space.num_atoms())
        throw std::invalid_argument("pullback_kernel: map/space size mismatch");
    SpectralKernel out;
    out.space_id = z_space.id;
    out.values.resize(static_cast<Eigen::Index>(h.num_z()),
                      x_kernel.values.cols());
    for (std::size_t z = 0; z < h.num_z(); ++z)
        out.values.row(static_cast<Eigen::Index>(z)) =
            x_kernel.values.row(h.target_of[z]);
    return out;
}

Signal filter_pullback_conv(const BaseChangeMap& h,
                            const OperatorSpace& z_space,
                            const SpectralKernel& x_kernel, const Signal& f) {
    return convolve(z_space, pullback_kernel(h, z_space, x_kernel), f);
}

Signal filter_pushforward_conv(const BaseChangeMap& h,
                               const OperatorSpace& z_space,
                               const OperatorSpace& x_space,
                               const SpectralKernel& x_kernel,
                               const Signal& f) {
    if (h.num_z() != z_space.num_atoms() || h.num_x() != x_space.num_atoms())
        throw std::invalid_argument(
            "filter_pushforward_conv: map/space size mismatch");
    check_space_match(x_space, x_kernel.space_id, "filter_pushforward_conv");
    if (f.size() != x_space.n())
        throw std::invalid_argument(
            "filter_pushforward_conv: signal length mismatch");
    Signal out = Signal::Zero(x_space.n());
    for (std::size_t z = 0; z < h.num_z(); ++z) {
        const auto& image = x_space.atoms[static_cast<std::size_t>(h.target_of[z])];
        const Eigen::MatrixXd& u = image.eigenvectors();
        Eigen::VectorXd fhat = u.transpose() * f;
        fhat.array() *= x_kernel.values.row(h.target_of[z]).transpose().array();
        out += z_space.weights(static_cast<Eigen::Index>(z)) * (u * fhat);
    }
    return out;
}

StretchMap stretch_map(double eta) {
    if (eta <= 0.0) throw std::invalid_argument("stretch_map: eta must be > 0");
    return StretchMap{eta};
}

}  // namespace dgsp
