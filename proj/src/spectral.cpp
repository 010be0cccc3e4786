#include "dgsp/spectral.hpp"

#include <stdexcept>

namespace dgsp {

void check_space_match(const OperatorSpace& space, const std::string& other_id,
                       const char* what) {
    if (!other_id.empty() && other_id != space.id)
        throw std::invalid_argument(std::string(what) +
                                    ": computed against a different space (" +
                                    other_id + " vs " + space.id + ")");
}

static void check_shape(const OperatorSpace& space, const Eigen::MatrixXd& m,
                        const char* what) {
    if (m.rows() != static_cast<Eigen::Index>(space.num_atoms()) ||
        m.cols() != space.n())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

SpectralCoefficients fourier(const OperatorSpace& space, const Signal& f) {
    if (f.size() != space.n())
        throw std::invalid_argument("fourier: signal length mismatch");
    SpectralCoefficients out;
    out.space_id = space.id;
    out.values.resize(static_cast<Eigen::Index>(space.num_atoms()), space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j)
        out.values.row(static_cast<Eigen::Index>(j)) =
            (space.atoms[j].eigenvectors().transpose() * f).transpose();
    return out;
}

Signal inverse_fourier(const OperatorSpace& space,
                       const SpectralCoefficients& g) {
    check_space_match(space, g.space_id, "inverse_fourier");
    check_shape(space, g.values, "inverse_fourier");
    Signal out = Signal::Zero(space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j)
        out += space.weights(static_cast<Eigen::Index>(j)) *
               (space.atoms[j].eigenvectors() *
                g.values.row(static_cast<Eigen::Index>(j)).transpose());
    return out;
}

FiberField alpha(const OperatorSpace& space, const SpectralCoefficients& g) {
    check_space_match(space, g.space_id, "alpha");
    check_shape(space, g.values, "alpha");
    FiberField q;
    q.space_id = space.id;
    q.values.resize(g.values.rows(), g.values.cols());
    for (std::size_t j = 0; j < space.num_atoms(); ++j)
        q.values.row(static_cast<Eigen::Index>(j)) =
            (space.atoms[j].eigenvectors() *
             g.values.row(static_cast<Eigen::Index>(j)).transpose())
                .transpose();
    return q;
}

Signal beta(const OperatorSpace& space, const FiberField& q) {
    check_space_match(space, q.space_id, "beta");
    check_shape(space, q.values, "beta");
    Signal out = Signal::Zero(space.n());
    for (std::size_t j = 0; j < space.num_atoms(); ++j)
        out += space.weights(static_cast<Eigen::Index>(j)) *
               q.values.row(static_cast<Eigen::Index>(j)).transpose();
    return out;
}

}  // namespace dgsp
