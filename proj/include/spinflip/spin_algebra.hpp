#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace spinflip {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Spin quantum number j with its Hilbert-space dimension N = 2j+1.
/// Accepts any half-integer j >= 1/2.
struct SpinJ {
    double j;
    int dim;

    explicit SpinJ(double j_value);
};

/// The three angular momentum operators in the Jz-diagonal basis
/// |j,m>, m = j, j-1, ..., -j (descending, fixed convention).
struct SpinOperators {
    ComplexMatrix jx;
    ComplexMatrix jy;
    ComplexMatrix jz;
};

/// Bloch direction (theta from +z, azimuth phi).
struct CoherentDirection {
    double theta;
    double phi;

    Eigen::Vector3d unit() const;
};

SpinOperators build_spin_operators(const SpinJ& spin);

/// SU(2) coherent state |theta,phi> = R(theta,phi)|j,j>.
/// Amplitude on |j,m>:
///   binom(2j, j+m)^{1/2} cos(theta/2)^{j+m} sin(theta/2)^{j-m} e^{-i(j-m)phi}
ComplexVector coherent_state(const SpinJ& spin, const CoherentDirection& dir);

/// Kronecker product of two subsystem states; component (m1,m2) lands at
/// index (j-m1)*N + (j-m2).
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// The two bit states: |0> = |+x>|-x> and |1> = |-x>|+x>.
std::pair<ComplexVector, ComplexVector> bit_states(const SpinJ& spin);

} // namespace spinflip
