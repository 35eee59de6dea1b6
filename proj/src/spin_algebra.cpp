#include "spinflip/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace spinflip {

SpinJ::SpinJ(double j_value) : j(j_value) {
    if (!std::isfinite(j_value) || j_value < 0.5) {
        throw std::invalid_argument("SpinJ: j must be a finite half-integer >= 1/2");
    }
    const double two_j = 2.0 * j_value;
    if (std::abs(two_j - std::round(two_j)) > 1e-9) {
        throw std::invalid_argument("SpinJ: 2j must be an integer");
    }
    dim = static_cast<int>(std::round(two_j)) + 1;
}

Eigen::Vector3d CoherentDirection::unit() const {
    return {std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

SpinOperators build_spin_operators(const SpinJ& spin) {
    const int n = spin.dim;
    const double j = spin.j;

    ComplexMatrix jp = ComplexMatrix::Zero(n, n);
    ComplexMatrix jz = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double m = j - i;
        jz(i, i) = m;
        if (i > 0) {
            // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, target index i-1
            jp(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    const ComplexMatrix jm = jp.adjoint();

    SpinOperators ops;
    ops.jx = 0.5 * (jp + jm);
    ops.jy = Complex(0.0, -0.5) * (jp - jm);
    ops.jz = std::move(jz);
    return ops;
}

ComplexVector coherent_state(const SpinJ& spin, const CoherentDirection& dir) {
    if (!std::isfinite(dir.theta) || !std::isfinite(dir.phi)) {
        throw std::invalid_argument("coherent_state: direction must be finite");
    }
    const int n = spin.dim;
    const double j = spin.j;
    const double c = std::cos(dir.theta / 2.0);
    const double s = std::sin(dir.theta / 2.0);

    ComplexVector state(n);
    for (int i = 0; i < n; ++i) {
        const double m = j - i;
        const double log_binom =
            std::lgamma(2.0 * j + 1.0) - std::lgamma(j + m + 1.0) - std::lgamma(j - m + 1.0);
        // pow(0,0) = 1 keeps the poles exact
        const double amp =
            std::exp(0.5 * log_binom) * std::pow(c, j + m) * std::pow(s, j - m);
        const double phase = -(j - m) * dir.phi;
        state(i) = amp * Complex(std::cos(phase), std::sin(phase));
    }
    return state;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("tensor_product: subsystem dimensions differ");
    }
    const Eigen::Index n = a.size();
    ComplexVector out(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.segment(i * n, n) = a(i) * b;
    }
    return out;
}

std::pair<ComplexVector, ComplexVector> bit_states(const SpinJ& spin) {
    const double half_pi = std::acos(0.0);
    const ComplexVector plus_x = coherent_state(spin, {half_pi, 0.0});
    const ComplexVector minus_x = coherent_state(spin, {half_pi, 2.0 * half_pi});
    return {tensor_product(plus_x, minus_x), tensor_product(minus_x, plus_x)};
}

} // namespace spinflip
